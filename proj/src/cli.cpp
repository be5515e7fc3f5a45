#include "tsched/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include "CLI11.hpp"

#include "tsched/exact.hpp"
#include "tsched/generate.hpp"
#include "tsched/greedy.hpp"
#include "tsched/io.hpp"
#include "tsched/qptas.hpp"
#include "tsched/ratio_search.hpp"
#include "tsched/render.hpp"

namespace tsched {

namespace {

using io::json;

struct Output {
	std::ostream& out;

	void emit(const std::string& path, const std::string& text) const {
		if (path.empty()) {
			out << text;
			return;
		}
		std::ofstream file(path);
		if (!file) throw std::invalid_argument("cannot write " + path);
		file << text;
	}
};

struct GenArgs {
	std::string kind;
	std::size_t n = 8;
	std::uint64_t seed = 0;
	Size max_size = 50;
	std::string bound = "2";
	std::string fixture;
	std::string tdm;
	std::optional<std::int64_t> M;
	std::string out;
	std::string labels;
};

struct SolveArgs {
	std::string instance;
	std::string algo = "greedy";
	std::string eps = "1/2";
	std::size_t max_states = QptasOptions{}.max_states;
	std::size_t max_jobs = ExactOptions{}.max_jobs;
	std::string out;
	std::string trace;
	std::string dot;
};

struct SimulateArgs {
	std::string schedule;
	std::string demands;
	bool random = false;
	std::uint64_t seed = 0;
	std::string out;
};

struct RenderArgs {
	std::string schedule;
	std::string trace;
	std::string format = "svg";
	std::optional<double> scale;
	double height = 1.0;
	std::string out;
};

struct BenchArgs {
	std::size_t n = 8;
	std::size_t iterations = 1000;
	std::uint64_t seed = 0;
	Size max_size = 50;
	std::string bound;
	unsigned threads = 1;
	bool no_fixture = false;
	std::string out;
	std::string findings;
};

int run_gen(const GenArgs& a, const Output& o) {
	GeneratorSpec spec;
	spec.kind = generator_kind_from_string(a.kind);
	spec.n = a.n;
	spec.seed = a.seed;
	spec.max_size = a.max_size;
	spec.ratio_bound = Rational::parse(a.bound);
	spec.fixture = a.fixture;

	if (spec.kind != GeneratorKind::Reduction) {
		o.emit(a.out, io::dump(io::to_json(generate(spec))));
		return 0;
	}
	if (a.tdm.empty()) throw CLI::RequiredError("--tdm");
	const ThreeDMInstance tdm = io::tdm_from_json(io::read_json(a.tdm));
	const EncodedInstance encoded = encode(tdm, a.M.value_or(minimum_M(tdm.D)));
	json doc = io::to_json(encoded.instance);
	doc["target"] = encoded.target;
	o.emit(a.out, io::dump(doc));

	std::string labels = a.labels;
	if (labels.empty() && !a.out.empty()) labels = a.out + ".labels.json";
	if (!labels.empty()) io::write_json(labels, io::to_json(encoded, tdm));
	return 0;
}

int run_solve(const SolveArgs& a, const Output& o) {
	const Instance instance = io::instance_from_json(io::read_json(a.instance));
	json summary{{"algo", a.algo}, {"n", instance.size()}};
	std::optional<Schedule> schedule;

	if (a.algo == "lb") {
		summary["lower_bound"] = lower_bound(instance);
	} else if (a.algo == "greedy") {
		GreedyResult g = greedy_schedule(instance);
		summary["makespan"] = g.makespan;
		if (!a.trace.empty()) io::write_json(a.trace, io::to_json(g.trace));
		if (!a.dot.empty()) o.emit(a.dot, to_dot(greedy_tree(g.trace), g.trace));
		schedule = std::move(g.schedule);
	} else if (a.algo == "exact") {
		ExactResult e = optimal_makespan(instance, {a.max_jobs, false});
		summary["makespan"] = e.makespan;
		summary["stats"] = {{"nodes", e.nodes}};
		schedule = std::move(e.witness);
	} else if (a.algo == "qptas") {
		const Rational eps = Rational::parse(a.eps);
		QptasResult q = qptas_schedule(instance, eps, {a.max_states});
		summary["eps"] = io::rational_to_json(eps);
		summary["makespan"] = io::rational_to_json(q.makespan);
		summary["stats"] = {{"classes", q.stats.classes}, {"grid_points", q.stats.grid_points},
		                    {"states", q.stats.states}, {"grid_step", io::rational_to_json(q.grid.step)},
		                    {"dp_makespan", io::rational_to_json(q.dp_makespan)}};
		schedule = std::move(q.schedule);
	} else {
		throw CLI::ValidationError("--algo", "expected greedy, exact, qptas or lb");
	}

	if (schedule) {
		summary["schedule"] = io::to_json(*schedule);
		if (!a.out.empty()) io::write_json(a.out, io::to_json(*schedule));
	}
	o.out << io::dump(summary);
	return 0;
}

int run_check(const std::string& path, const Output& o) {
	const Schedule schedule = io::schedule_from_json(io::read_json(path));
	if (schedule.empty()) throw std::invalid_argument("schedule has no jobs");
	const auto violations = check_feasible(schedule);
	json pairs = json::array();
	for (const auto& [i, j] : violations) pairs.push_back({i, j});
	o.out << io::dump({{"feasible", violations.empty()}, {"violations", pairs}, {"makespan", io::rational_to_json(makespan(schedule))}});
	return violations.empty() ? 0 : 1;
}

int run_simulate(const SimulateArgs& a, const Output& o) {
	const Schedule schedule = io::schedule_from_json(io::read_json(a.schedule));
	DemandVector demands;
	if (a.random) {
		std::mt19937_64 rng(a.seed);
		for (const auto& job : schedule.jobs()) demands.emplace_back(uniform_int(rng, 1, job.size));
	} else if (!a.demands.empty()) {
		demands = io::demands_from_json(io::read_json(a.demands));
	} else {
		throw CLI::RequiredError("--demands or --random");
	}
	o.emit(a.out, io::dump(io::to_json(simulate(schedule, demands))));
	return 0;
}

int run_render(const RenderArgs& a, const Output& o) {
	const Schedule schedule = io::schedule_from_json(io::read_json(a.schedule));
	RenderOptions options;
	options.format = render_format_from_string(a.format);
	options.scale = a.scale.value_or(options.format == RenderFormat::Svg ? 20.0 : 1.0);
	options.height = a.height;
	std::optional<ExecutionTrace> trace;
	if (!a.trace.empty()) trace = io::execution_trace_from_json(io::read_json(a.trace));
	o.emit(a.out, render(schedule, options, trace ? &*trace : nullptr));
	return 0;
}

int run_bench(const BenchArgs& a, const Output& o) {
	RatioSearchOptions options;
	options.n = a.n;
	options.iterations = a.iterations;
	options.seed = a.seed;
	options.max_size = a.max_size;
	if (!a.bound.empty()) options.ratio_bound = Rational::parse(a.bound);
	options.seed_fixture = !a.no_fixture;
	options.threads = a.threads;
	const RatioSearchReport report = ratio_search(options);
	o.emit(a.out, io::dump(to_json(report)));
	if (!a.findings.empty() && !report.findings.empty()) io::write_json(a.findings, to_json(report)["findings"]);
	return 0;
}

const CLI::Validator kRationalFlag(
    [](std::string& value) -> std::string {
	    try {
		    if (Rational::parse(value) <= 0) return "must be positive";
	    } catch (const std::exception&) {
		    return "expected an integer or num/den, got '" + value + "'";
	    }
	    return {};
    },
    "RATIONAL");

std::uint64_t default_seed() {
	if (const char* env = std::getenv("TS_SEED")) {
		try {
			return std::stoull(env);
		} catch (const std::exception&) {
			throw CLI::ValidationError("TS_SEED", std::string("not an unsigned integer: ") + env);
		}
	}
	return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	CLI::App app{"Triangle scheduling: solvers, generators, simulation and rendering", "tsched"};
	app.require_subcommand(1);
	Output output{out};

	GenArgs gen;
	SolveArgs solve;
	std::string check_path;
	SimulateArgs sim;
	RenderArgs ren;
	BenchArgs bench;

	auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
	gen_cmd->add_option("--kind", gen.kind, "random | ratio-bounded | reduction | fixture")->required();
	gen_cmd->add_option("--n", gen.n, "Number of jobs");
	auto* gen_seed = gen_cmd->add_option("--seed", gen.seed, "RNG seed (default: $TS_SEED or 0)");
	gen_cmd->add_option("--max-size", gen.max_size, "Largest job size");
	gen_cmd->add_option("--bound", gen.bound, "Binary tree ratio bound for ratio-bounded, e.g. 2 or 3/2")->check(kRationalFlag);
	gen_cmd->add_option("--fixture", gen.fixture, "four-jobs | greedy-gap-9 | weak-lower-bound");
	gen_cmd->add_option("--tdm", gen.tdm, "3DM instance file for --kind reduction");
	gen_cmd->add_option("--M", gen.M, "Reduction constant (default ceil(5D/4))");
	gen_cmd->add_option("--out", gen.out, "Instance file (default stdout)");
	gen_cmd->add_option("--labels", gen.labels, "Reduction labels file (default <out>.labels.json)");

	auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
	solve_cmd->add_option("--instance", solve.instance, "Instance file")->required();
	solve_cmd->add_option("--algo", solve.algo, "greedy | exact | qptas | lb")
	    ->check(CLI::IsMember({"greedy", "exact", "qptas", "lb"}));
	solve_cmd->add_option("--eps", solve.eps, "QPTAS accuracy as a rational, e.g. 1/2")->check(kRationalFlag);
	solve_cmd->add_option("--max-states", solve.max_states, "QPTAS memo budget");
	solve_cmd->add_option("--max-jobs", solve.max_jobs, "Exact search job limit");
	solve_cmd->add_option("--out", solve.out, "Write the schedule to this file");
	solve_cmd->add_option("--trace", solve.trace, "Write the greedy trace to this file");
	solve_cmd->add_option("--dot", solve.dot, "Write the greedy tree as DOT to this file");

	auto* check_cmd = app.add_subcommand("check", "Check a schedule for feasibility");
	check_cmd->add_option("--schedule", check_path, "Schedule file")->required();

	auto* sim_cmd = app.add_subcommand("simulate", "Execute a schedule under actual durations");
	sim_cmd->add_option("--schedule", sim.schedule, "Schedule file")->required();
	auto* demands_opt = sim_cmd->add_option("--demands", sim.demands, "Demands file {\"demands\": [...]}");
	auto* random_flag = sim_cmd->add_flag("--random", sim.random, "Draw demands uniformly from [1, p_j]");
	demands_opt->excludes(random_flag);
	auto* sim_seed = sim_cmd->add_option("--seed", sim.seed, "RNG seed for --random (default: $TS_SEED or 0)");
	sim_cmd->add_option("--out", sim.out, "Trace file (default stdout)");

	auto* render_cmd = app.add_subcommand("render", "Draw a schedule");
	render_cmd->add_option("--schedule", ren.schedule, "Schedule file")->required();
	render_cmd->add_option("--trace", ren.trace, "Execution trace to draw under the axis");
	render_cmd->add_option("--format", ren.format, "svg | ascii")->check(CLI::IsMember({"svg", "ascii"}));
	render_cmd->add_option("--scale", ren.scale, "Pixels (svg) or characters (ascii) per time unit");
	render_cmd->add_option("--height", ren.height, "Triangle height factor (svg)");
	render_cmd->add_option("--out", ren.out, "Output file (default stdout)");

	auto* bench_cmd = app.add_subcommand("bench", "Benchmarks");
	bench_cmd->require_subcommand(1);
	auto* search_cmd = bench_cmd->add_subcommand("ratio-search", "Search for bad greedy/optimal ratios");
	search_cmd->add_option("--n", bench.n, "Jobs per instance");
	search_cmd->add_option("--iterations", bench.iterations, "Random instances to evaluate");
	auto* bench_seed = search_cmd->add_option("--seed", bench.seed, "RNG seed (default: $TS_SEED or 0)");
	search_cmd->add_option("--max-size", bench.max_size, "Largest job size");
	search_cmd->add_option("--bound", bench.bound, "Only instances with binary tree ratio <= bound")->check(kRationalFlag);
	search_cmd->add_option("--threads", bench.threads, "Worker threads");
	search_cmd->add_flag("--no-fixture", bench.no_fixture, "Do not seed the pool with the 42/40 instance");
	search_cmd->add_option("--out", bench.out, "Report file (default stdout)");
	search_cmd->add_option("--findings", bench.findings, "Write instances with ratio > 21/20 here");

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(std::move(reversed));
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return 0;
	} catch (const CLI::ParseError& e) {
		err << "usage error: " << e.what() << "\n";
		return 2;
	}

	try {
		const std::uint64_t env_seed = default_seed();
		if (gen_seed->count() == 0) gen.seed = env_seed;
		if (sim_seed->count() == 0) sim.seed = env_seed;
		if (bench_seed->count() == 0) bench.seed = env_seed;

		if (*gen_cmd) return run_gen(gen, output);
		if (*solve_cmd) return run_solve(solve, output);
		if (*check_cmd) return run_check(check_path, output);
		if (*sim_cmd) return run_simulate(sim, output);
		if (*render_cmd) return run_render(ren, output);
		if (*search_cmd) return run_bench(bench, output);
	} catch (const CLI::Error& e) {
		err << "usage error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		err << "error: " << e.what() << "\n";
		return 1;
	}
	return 2;
}

int cli_main(int argc, char** argv) {
	std::vector<std::string> args(argv + 1, argv + argc);
	return run_cli(args, std::cout, std::cerr);
}

} // namespace tsched

#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tsched/cli.hpp"
#include "tsched/generate.hpp"
#include "tsched/io.hpp"
#include "tsched/ratio_search.hpp"

using namespace tsched;
namespace fs = std::filesystem;

namespace {

struct Run {
	int code;
	std::string out;
	std::string err;
};

Run run(std::vector<std::string> args) {
	std::ostringstream out, err;
	int code = run_cli(args, out, err);
	return {code, out.str(), err.str()};
}

class TempDir {
public:
	TempDir() {
		path_ = fs::temp_directory_path() / ("tsched_cli_" + std::to_string(std::random_device{}()));
		fs::create_directories(path_);
	}
	~TempDir() { fs::remove_all(path_); }
	std::string file(const std::string& name) const { return (path_ / name).string(); }
	std::string write(const std::string& name, const std::string& text) const {
		std::ofstream(path_ / name) << text;
		return file(name);
	}

private:
	fs::path path_;
};

std::string slurp(const std::string& path) {
	std::ifstream in(path);
	return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

io::json parse(const std::string& text) {
	return io::json::parse(text);
}

} // namespace

TEST_CASE("gen writes named fixtures") {
	Run r = run({"gen", "--kind", "fixture", "--fixture", "greedy-gap-9"});
	REQUIRE(r.code == 0);
	CHECK(parse(r.out)["sizes"] == io::json::array({20, 20, 10, 5, 5, 4, 4, 4, 4}));
	r = run({"gen", "--kind", "fixture", "--fixture", "four-jobs"});
	CHECK(parse(r.out)["sizes"] == io::json::array({6, 5, 4, 3}));
	CHECK(run({"gen", "--kind", "fixture", "--fixture", "nope"}).code == 1);
}

TEST_CASE("gen is reproducible per seed") {
	TempDir dir;
	for (const std::string kind : {"random", "ratio-bounded"}) {
		REQUIRE(run({"gen", "--kind", kind, "--n", "17", "--seed", "99", "--out", dir.file("a.json")}).code == 0);
		REQUIRE(run({"gen", "--kind", kind, "--n", "17", "--seed", "99", "--out", dir.file("b.json")}).code == 0);
		CHECK(slurp(dir.file("a.json")) == slurp(dir.file("b.json")));
	}
	for (std::uint64_t seed = 0; seed < 30; ++seed) {
		Run r = run({"gen", "--kind", "ratio-bounded", "--n", "20", "--bound", "3/2", "--seed", std::to_string(seed)});
		CHECK(binary_tree_ratio(io::instance_from_json(parse(r.out))) <= Rational(3, 2));
	}
	CHECK(run({"gen", "--kind", "ratio-bounded", "--bound", "0.5"}).code == 2);
}

TEST_CASE("TS_SEED provides the default seed") {
	::setenv("TS_SEED", "4242", 1);
	Run from_env = run({"gen", "--kind", "random", "--n", "6"});
	::unsetenv("TS_SEED");
	Run explicit_seed = run({"gen", "--kind", "random", "--n", "6", "--seed", "4242"});
	CHECK(from_env.out == explicit_seed.out);
}

TEST_CASE("gen reduction writes the instance and a labels sidecar") {
	TempDir dir;
	const std::string tdm = dir.write("tdm.json", R"({"D": 10, "a": [3], "b": [3], "c": [4]})");
	REQUIRE(run({"gen", "--kind", "reduction", "--tdm", tdm, "--out", dir.file("inst.json")}).code == 0);
	const auto inst = io::read_json(dir.file("inst.json"));
	CHECK(inst["sizes"] == io::json::array({154, 52, 42, 29, 27}));
	CHECK(inst["target"] == 154);
	const auto labels = io::read_json(dir.file("inst.json.labels.json"));
	CHECK(labels["M"] == 13);
	CHECK(labels["labels"][0]["type"] == "E");
	CHECK(run({"gen", "--kind", "reduction", "--tdm", tdm, "--M", "12"}).code == 1);
}

TEST_CASE("solve reports the reference values") {
	TempDir dir;
	const std::string nine = dir.write("nine.json", R"({"sizes": [4, 4, 5, 20, 4, 10, 5, 20, 4]})");
	Run g = run({"solve", "--algo", "greedy", "--instance", nine, "--trace", dir.file("trace.json"), "--dot", dir.file("tree.dot")});
	REQUIRE(g.code == 0);
	CHECK(parse(g.out)["makespan"] == 42);
	CHECK(io::read_json(dir.file("trace.json"))["steps"].size() == 9);
	CHECK(slurp(dir.file("tree.dot")).find("digraph") != std::string::npos);

	Run e = run({"solve", "--algo", "exact", "--instance", nine, "--out", dir.file("exact.json")});
	CHECK(parse(e.out)["makespan"] == 40);
	CHECK(run({"check", "--schedule", dir.file("exact.json")}).code == 0);

	const std::string weak = dir.write("weak.json", R"({"sizes": [1000, 1]})");
	Run lb = run({"solve", "--algo", "lb", "--instance", weak});
	CHECK(parse(lb.out)["lower_bound"] == 2);
}

TEST_CASE("qptas schedules round-trip with exact rational starts") {
	TempDir dir;
	const std::string inst = dir.write("inst.json", R"({"sizes": [6, 5, 4, 3]})");
	Run q = run({"solve", "--algo", "qptas", "--eps", "1/2", "--instance", inst, "--out", dir.file("q.json")});
	REQUIRE(q.code == 0);
	const auto summary = parse(q.out);
	CHECK(summary["stats"]["classes"] == 3);
	CHECK(summary["stats"]["grid_points"] == 33);
	const Schedule reloaded = io::schedule_from_json(io::read_json(dir.file("q.json")));
	CHECK(is_feasible(reloaded));
	CHECK(io::rational_from_json(summary["makespan"]) == makespan(reloaded));
	bool any_fraction = false;
	const auto written = io::read_json(dir.file("q.json"));
	for (const auto& job : written["jobs"]) any_fraction |= job["start"].is_string();
	CHECK(any_fraction);

	CHECK(run({"solve", "--algo", "qptas", "--eps", "0.5", "--instance", inst}).code == 2);
	CHECK(run({"solve", "--algo", "qptas", "--eps", "1/2", "--max-states", "2", "--instance", inst}).code == 1);
}

TEST_CASE("check exit codes") {
	TempDir dir;
	CHECK(run({"check", "--schedule", dir.write("empty.json", R"({"jobs": []})")}).code == 1);
	CHECK(run({"check", "--schedule", dir.write("bad.json", R"({"jobs": [{"size": 6, "start": 0}, {"size": 5, "start": 1}]})")}).code == 1);
	Run ok = run({"check", "--schedule",
	              dir.write("sample.json", R"({"jobs": [{"size": 6, "start": 0}, {"size": 4, "start": 4}, {"size": 3, "start": 7}, {"size": 5, "start": "10"}]})")});
	CHECK(ok.code == 0);
	CHECK(parse(ok.out)["makespan"] == 15);
	CHECK(run({"check", "--schedule", dir.write("float.json", R"({"jobs": [{"size": 6, "start": 0.5}]})")}).code == 1);
	CHECK(run({"check", "--schedule", dir.file("missing.json")}).code == 1);
}

TEST_CASE("usage errors") {
	CHECK(run({}).code == 2);
	CHECK(run({"solve"}).code == 2);
	CHECK(run({"solve", "--instance", "x", "--algo", "magic"}).code == 2);
	Run r = run({"gen", "--kind", "random", "--bogus", "1"});
	CHECK(r.code == 2);
	CHECK(r.err.find("--bogus") != std::string::npos);
	CHECK(run({"bench"}).code == 2);
}

TEST_CASE("simulate and render") {
	TempDir dir;
	const std::string sample = dir.write("sample.json", R"({"jobs": [{"size": 6, "start": 0}, {"size": 4, "start": 4}, {"size": 3, "start": 7}, {"size": 5, "start": 10}]})");
	const std::string dem = dir.write("d.json", R"({"demands": [5, 1, 2, 4]})");
	REQUIRE(run({"simulate", "--schedule", sample, "--demands", dem, "--out", dir.file("trace.json")}).code == 0);
	const auto trace = io::read_json(dir.file("trace.json"));
	CHECK(trace["jobs"][1]["status"] == "canceled");
	CHECK(trace["jobs"][1]["canceled_by"] == 0);
	CHECK(trace["completion"] == 14);

	Run r1 = run({"simulate", "--schedule", sample, "--random", "--seed", "5"});
	Run r2 = run({"simulate", "--schedule", sample, "--random", "--seed", "5"});
	CHECK(r1.code == 0);
	CHECK(r1.out == r2.out);
	CHECK(run({"simulate", "--schedule", sample}).code == 2);

	Run svg = run({"render", "--schedule", sample, "--trace", dir.file("trace.json")});
	REQUIRE(svg.code == 0);
	std::size_t polygons = 0, rects = 0;
	for (std::size_t pos = 0; (pos = svg.out.find("<polygon", pos)) != std::string::npos; ++pos) ++polygons;
	for (std::size_t pos = 0; (pos = svg.out.find("<rect", pos)) != std::string::npos; ++pos) ++rects;
	CHECK(polygons == 4);
	CHECK(rects == 3);

	Run ascii = run({"render", "--schedule", sample, "--format", "ascii"});
	CHECK(ascii.code == 0);
	CHECK(ascii.out.find("> 15") != std::string::npos);

	const std::string bad = dir.write("bad.json", R"({"jobs": [{"size": 6, "start": 0}, {"size": 5, "start": 1}]})");
	Run rb = run({"render", "--schedule", bad});
	CHECK(rb.code == 1);
	CHECK(rb.err.find("(0,1)") != std::string::npos);
}

TEST_CASE("bench ratio-search") {
	TempDir dir;
	Run r = run({"bench", "ratio-search", "--n", "6", "--iterations", "40", "--seed", "1", "--out", dir.file("rep.json")});
	REQUIRE(r.code == 0);
	const RatioSearchReport rep = report_from_json(io::read_json(dir.file("rep.json")));
	CHECK(rep.best.ratio >= Rational(21, 20));

	Run bounded = run({"bench", "ratio-search", "--n", "8", "--iterations", "30", "--bound", "2", "--threads", "3"});
	CHECK(io::rational_from_json(parse(bounded.out)["best"]["ratio"]) == 1);

	Run single = run({"bench", "ratio-search", "--n", "1", "--iterations", "5", "--no-fixture"});
	CHECK(io::rational_from_json(parse(single.out)["best"]["ratio"]) == 1);
}

TEST_CASE("ratio search is independent of the thread count") {
	RatioSearchOptions opt;
	opt.n = 7;
	opt.iterations = 60;
	opt.seed = 8;
	opt.max_size = 12;
	opt.seed_fixture = false;
	const RatioSearchReport one = ratio_search(opt);
	opt.threads = 4;
	const RatioSearchReport four = ratio_search(opt);
	CHECK(one.best.instance == four.best.instance);
	CHECK(one.best.ratio == four.best.ratio);
	CHECK(one.best.ratio == Rational(one.best.greedy, one.best.exact));
}

TEST_CASE("tampered reports are rejected on load") {
	RatioSearchOptions opt;
	opt.n = 4;
	opt.iterations = 3;
	auto doc = to_json(ratio_search(opt));
	doc["best"]["ratio"] = "22/20";
	CHECK_THROWS_AS(report_from_json(doc), std::invalid_argument);
}

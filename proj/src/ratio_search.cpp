#include "tsched/ratio_search.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "tsched/exact.hpp"
#include "tsched/generate.hpp"
#include "tsched/greedy.hpp"
#include "tsched/io.hpp"

namespace tsched {

namespace {

const Rational kReferenceRatio(21, 20);

// True when a should replace b as the reported witness.
bool better(const RatioWitness& a, const RatioWitness& b) {
	if (a.ratio != b.ratio) return a.ratio > b.ratio;
	return std::lexicographical_compare(a.instance.sizes().begin(), a.instance.sizes().end(), b.instance.sizes().begin(),
	                                    b.instance.sizes().end());
}

} // namespace

RatioWitness evaluate_ratio(const Instance& instance) {
	RatioWitness w;
	w.instance = instance;
	w.greedy = greedy_schedule(instance).makespan;
	w.exact = optimal_makespan(instance).makespan;
	w.ratio = Rational(w.greedy, w.exact);
	return w;
}

RatioSearchReport ratio_search(const RatioSearchOptions& options) {
	if (options.n == 0) throw std::invalid_argument("n must be positive");
	if (options.n > ExactOptions{}.max_jobs) throw LimitExceeded("ratio search needs n within the exact oracle limit");

	RatioSearchReport report;
	report.iterations = options.iterations;
	report.seed = options.seed;

	std::vector<std::optional<RatioWitness>> results(options.iterations);
	const unsigned threads = std::max(1u, options.threads);
	auto work = [&](unsigned tid) {
		for (std::size_t i = tid; i < options.iterations; i += threads) {
			GeneratorSpec spec;
			spec.kind = options.ratio_bound ? GeneratorKind::RatioBounded : GeneratorKind::Random;
			spec.n = options.n;
			spec.seed = derive_seed(options.seed, i);
			spec.max_size = options.max_size;
			if (options.ratio_bound) spec.ratio_bound = *options.ratio_bound;
			results[i] = evaluate_ratio(generate(spec));
		}
	};
	if (threads == 1) {
		work(0);
	} else {
		std::vector<std::jthread> pool;
		for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
	}

	bool have_best = false;
	auto consider = [&](const RatioWitness& w) {
		if (!have_best || better(w, report.best)) {
			report.best = w;
			have_best = true;
		}
		if (w.ratio > kReferenceRatio) report.findings.push_back(w);
	};

	const Instance seeded = fixture("greedy-gap-9");
	if (options.seed_fixture && (!options.ratio_bound || binary_tree_ratio(seeded) <= *options.ratio_bound))
		consider(evaluate_ratio(seeded));
	for (const auto& r : results) consider(*r);
	return report;
}

namespace {

nlohmann::json witness_json(const RatioWitness& w) {
	return {{"instance", io::to_json(w.instance)}, {"greedy", w.greedy}, {"exact", w.exact}, {"ratio", io::rational_to_json(w.ratio)}};
}

RatioWitness witness_from_json(const nlohmann::json& doc) {
	RatioWitness stored;
	stored.instance = io::instance_from_json(doc.at("instance"));
	stored.ratio = io::rational_from_json(doc.at("ratio"));
	RatioWitness fresh = evaluate_ratio(stored.instance);
	if (fresh.ratio != stored.ratio)
		throw std::invalid_argument("stored ratio " + stored.ratio.to_string() + " does not match recomputed " +
		                            fresh.ratio.to_string());
	return fresh;
}

} // namespace

nlohmann::json to_json(const RatioSearchReport& report) {
	nlohmann::json findings = nlohmann::json::array();
	for (const auto& f : report.findings) findings.push_back(witness_json(f));
	return {{"best", witness_json(report.best)}, {"iterations", report.iterations}, {"seed", report.seed}, {"findings", findings}};
}

RatioSearchReport report_from_json(const nlohmann::json& doc) {
	RatioSearchReport report;
	report.best = witness_from_json(doc.at("best"));
	report.iterations = doc.at("iterations").get<std::size_t>();
	report.seed = doc.at("seed").get<std::uint64_t>();
	for (const auto& f : doc.at("findings")) report.findings.push_back(witness_from_json(f));
	return report;
}

} // namespace tsched

#ifndef TSCHED_RATIO_SEARCH_HPP
#define TSCHED_RATIO_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "tsched/core.hpp"

namespace tsched {

struct RatioSearchOptions {
	std::size_t n = 8;
	std::size_t iterations = 1000;
	std::uint64_t seed = 0;
	Size max_size = 50;
	/// Restrict random instances (and the fixture) to binary tree ratio <= bound.
	std::optional<Rational> ratio_bound;
	/// Add the 9-job instance with ratio 42/40 to the pool when it passes the filter.
	bool seed_fixture = true;
	unsigned threads = 1;
};

struct RatioWitness {
	Instance instance{std::vector<Size>{1}};
	Size greedy = 1;
	Size exact = 1;
	Rational ratio = 1;
};

struct RatioSearchReport {
	RatioWitness best;
	std::size_t iterations = 0;
	std::uint64_t seed = 0;
	/// Instances beating 21/20, in discovery order.
	std::vector<RatioWitness> findings;
};

/// Evaluates greedy / optimal on random instances and keeps the worst.
/// Ties go to the lexicographically smallest size vector; results do not
/// depend on the thread count.
RatioSearchReport ratio_search(const RatioSearchOptions& options);

RatioWitness evaluate_ratio(const Instance& instance);

nlohmann::json to_json(const RatioSearchReport& report);
/// Recomputes the witness ratio and throws std::invalid_argument if it
/// disagrees with the stored one.
RatioSearchReport report_from_json(const nlohmann::json& doc);

} // namespace tsched

#endif

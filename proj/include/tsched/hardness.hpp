#ifndef TSCHED_HARDNESS_HPP
#define TSCHED_HARDNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsched/core.hpp"

namespace tsched {

/// Numerical 3-dimensional matching: split a, b, c into n triplets
/// (one entry of each) that all sum to D.
struct ThreeDMInstance {
	std::int64_t D = 0;
	std::vector<std::int64_t> a;
	std::vector<std::int64_t> b;
	std::vector<std::int64_t> c;

	std::size_t n() const { return a.size(); }

	/// Throws std::invalid_argument unless D >= 4, |a| = |b| = |c| >= 1,
	/// every value lies strictly between D/4 and D/2, and the total is nD.
	void validate() const;
};

/// Indices are 0-based positions in a, b, c.
struct Triplet {
	std::size_t i = 0;
	std::size_t j = 0;
	std::size_t k = 0;
	friend bool operator==(const Triplet&, const Triplet&) = default;
};

using Matching = std::vector<Triplet>;

/// Throws std::invalid_argument unless the triplets cover each coordinate
/// exactly once and every triplet sums to D.
void validate_matching(const ThreeDMInstance& tdm, const Matching& matching);

enum class JobType { E, F, A, B, C };

std::string to_string(JobType type);
JobType job_type_from_string(const std::string& name);

struct JobLabel {
	JobType type = JobType::E;
	/// Source index for A, B, C; the copy number for E and F.
	std::size_t index = 0;
	Size size = 0;
};

/// Job sizes of the reduction for a given M.
struct ReductionSizes {
	std::int64_t M = 0;
	std::int64_t D = 0;

	Size e() const { return 8 * M + 5 * D; }
	Size f() const { return 4 * M; }
	Size a(std::int64_t ai) const { return 2 * M + 2 * ai + D; }
	Size b(std::int64_t bj) const { return 2 * M + bj; }
	Size c(std::int64_t ck) const { return M + ck + D; }
	Size block() const { return e(); }
};

struct EncodedInstance {
	Instance instance;
	/// One label per job, ordered like instance.sizes().
	std::vector<JobLabel> labels;
	std::int64_t M = 0;
	/// n * (8M + 5D), reachable iff the matching instance is solvable.
	Size target = 0;
};

/// Smallest admissible M, ceil(5D/4).
std::int64_t minimum_M(std::int64_t D);

EncodedInstance encode(const ThreeDMInstance& tdm, std::int64_t M);

/// Certificate schedule: block t starts at t(8M+5D) and holds E, A_i, C_k,
/// F, B_j in that order with consecutive gaps A_i, C_k, C_k, B_j, B_j.
Schedule schedule_from_matching(const ThreeDMInstance& tdm, std::int64_t M, const Matching& matching);

class DecodeError : public std::runtime_error {
public:
	DecodeError(std::optional<std::size_t> block, const std::string& what);
	std::optional<std::size_t> block() const { return block_; }

private:
	std::optional<std::size_t> block_;
};

/// Reads the matching off a feasible schedule of makespan at most
/// n(8M+5D) for the encoded instance; blocks are delimited by E starts.
Matching matching_from_schedule(const ThreeDMInstance& tdm, std::int64_t M, const Schedule& schedule);

/// Tries all pairs of permutations of b and c. Limit: n <= 6.
std::optional<Matching> solve_3dm_bruteforce(const ThreeDMInstance& tdm);

} // namespace tsched

#endif

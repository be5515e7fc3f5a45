#ifndef TSCHED_QPTAS_HPP
#define TSCHED_QPTAS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "tsched/core.hpp"
#include "tsched/rational.hpp"

namespace tsched {

/// Thrown when the dynamic program would memoize more states than allowed.
class BudgetExceeded : public std::runtime_error {
public:
	BudgetExceeded(std::size_t attempted, std::size_t budget);
	std::size_t attempted() const { return attempted_; }

private:
	std::size_t attempted_;
};

struct SizeSplit {
	/// Jobs with size >= eps * p_1 / n, non-increasing.
	std::vector<Size> large;
	/// Jobs below the threshold, non-increasing.
	std::vector<Size> small;
	Rational threshold;
};

SizeSplit split_small(const Instance& instance, const Rational& eps);

/// Sizes rounded up to unit * (1 + eps)^k.
struct RoundedInstance {
	Rational eps;
	Rational unit;
	/// Sizes that were rounded, non-increasing, with their rounded values and
	/// exponents at the same positions.
	std::vector<Size> original;
	std::vector<Rational> rounded;
	std::vector<unsigned> exponent;
	/// Jobs left out of the rounding (below the small-job threshold).
	std::vector<Size> small;
	/// Distinct rounded sizes, decreasing.
	std::vector<Rational> classes;
	/// Number of jobs per entry of classes.
	std::vector<int> class_count;
};

/// Rounds every size with the given unit (default: the smallest size).
/// Sizes below the unit are rejected.
RoundedInstance round_sizes(std::span<const Size> sizes, const Rational& eps,
                            std::optional<Rational> unit = std::nullopt);

/// Splits off small jobs and rounds the remaining ones with the smallest
/// large size as unit.
RoundedInstance round_sizes(const Instance& instance, const Rational& eps);

/// Smallest m with (1 + eps)^m >= n / eps, so that at most m + 1 classes
/// survive the split and rounding.
unsigned class_count_bound(std::size_t n, const Rational& eps);

/// Start times restricted to {0, K, ..., max_index * K}.
struct Grid {
	Rational step;
	std::int64_t max_index = 0;

	std::size_t point_count() const { return static_cast<std::size_t>(max_index) + 1; }
	Rational point(std::int64_t index) const { return step * index; }
};

/// K = eps * p_max / n and max_index = ceil(n^2 / eps).
Grid make_grid(const Rational& largest_size, std::size_t n, const Rational& eps);

struct DpStats {
	std::size_t classes = 0;
	std::size_t grid_points = 0;
	std::size_t states = 0;
};

struct DpResult {
	/// Optimal makespan over grid-canonical schedules of the rounded sizes.
	Rational makespan;
	/// Rounded jobs in placement order with their grid starts.
	std::vector<std::size_t> class_of_job;
	std::vector<std::int64_t> grid_index;
	DpStats stats;
};

struct QptasOptions {
	std::size_t max_states = 5'000'000;
};

/// Configuration DP over (rightmost grid index per class, remaining counts),
/// memoized from the empty configuration.
DpResult dp_solve(const RoundedInstance& rounded, const Grid& grid, const QptasOptions& options = {});

struct QptasResult {
	Schedule schedule;
	Rational makespan;
	/// Makespan of the large jobs alone, in rounded sizes.
	Rational dp_makespan;
	/// Makespan of the large jobs alone, in original sizes.
	Rational large_makespan;
	Grid grid;
	DpStats stats;
};

/// Full pipeline: split, round, DP, emit large jobs with their original sizes
/// at grid starts, then append small jobs one after another at the makespan.
QptasResult qptas_schedule(const Instance& instance, const Rational& eps, const QptasOptions& options = {});

} // namespace tsched

#endif

#ifndef TSCHED_CORE_HPP
#define TSCHED_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tsched/rational.hpp"

namespace tsched {

using Size = std::int64_t;

/// Thrown when an input exceeds the size limit of an exhaustive method.
class LimitExceeded : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Multiset of positive job sizes (criticality levels), kept sorted
/// non-increasing so that sizes()[0] is the most critical job.
class Instance {
public:
	/// Throws std::invalid_argument on an empty list or a size <= 0.
	explicit Instance(std::vector<Size> raw_sizes);

	std::span<const Size> sizes() const { return sizes_; }
	std::size_t size() const { return sizes_.size(); }
	Size operator[](std::size_t i) const { return sizes_[i]; }
	Size largest() const { return sizes_.front(); }
	Size total() const;

	friend bool operator==(const Instance&, const Instance&) = default;

private:
	std::vector<Size> sizes_;
};

struct ScheduledJob {
	Size size = 0;
	Rational start;

	Rational end() const { return start + size; }
	friend bool operator==(const ScheduledJob&, const ScheduledJob&) = default;
};

/// Start times for a list of jobs. Feasibility is not enforced here; use
/// check_feasible() to diagnose a schedule.
class Schedule {
public:
	Schedule() = default;
	/// Throws std::invalid_argument on a non-positive size or negative start.
	explicit Schedule(std::vector<ScheduledJob> jobs);

	std::span<const ScheduledJob> jobs() const { return jobs_; }
	const ScheduledJob& operator[](std::size_t i) const { return jobs_[i]; }
	std::size_t size() const { return jobs_.size(); }
	bool empty() const { return jobs_.empty(); }

	/// Job sizes as an instance (sorted).
	Instance instance() const;

	friend bool operator==(const Schedule&, const Schedule&) = default;

private:
	std::vector<ScheduledJob> jobs_;
};

struct Gap {
	Rational start;
	Rational length;
};

using GapList = std::vector<Gap>;

/// Index pair (i, j), i < j, into Schedule::jobs().
using Violation = std::pair<std::size_t, std::size_t>;

/// Every pair of jobs with |s_i - s_j| < min(p_i, p_j); empty means feasible.
std::vector<Violation> check_feasible(const Schedule& schedule);

inline bool is_feasible(const Schedule& schedule) {
	return check_feasible(schedule).empty();
}

/// max_j (s_j + p_j). Throws std::invalid_argument on an empty schedule.
Rational makespan(const Schedule& schedule);

/// Gaps between successive starts plus the final gap up to the makespan,
/// ordered by start. Throws std::invalid_argument on coincident starts.
GapList gaps(const Schedule& schedule);

/// max over i = 2..n of p_ceil(i/2) / p_i; 1 for a single job.
Rational binary_tree_ratio(const Instance& instance);

/// m + 2S where S sums the smaller half of the sizes and m is the median
/// size for odd n (0 for even n). Never exceeds the optimal makespan.
Size lower_bound(const Instance& instance);

} // namespace tsched

#endif

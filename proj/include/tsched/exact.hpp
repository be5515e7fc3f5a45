#ifndef TSCHED_EXACT_HPP
#define TSCHED_EXACT_HPP

#include <cstddef>
#include <span>

#include "tsched/core.hpp"

namespace tsched {

/// Places jobs left to right in the given order, each at the earliest time
/// compatible with all jobs already placed. Starts strictly increase.
Schedule canonical_schedule_for_order(std::span<const Size> ordered_sizes);

struct ExactOptions {
	std::size_t max_jobs = 12;
	/// Additionally prune with last start + lower_bound(last job + unplaced).
	bool suffix_bound = false;
};

struct ExactResult {
	Size makespan = 0;
	Schedule witness;
	std::size_t nodes = 0;
};

/// Branch and bound over job orders with duplicate sizes branched once per
/// depth, seeded with the greedy makespan.
ExactResult optimal_makespan(const Instance& instance, const ExactOptions& options = {});

/// Exhaustive search over integer start vectors in [0, horizon]^n.
/// Conclusive only when horizon >= total size. Limits: n <= 4, horizon <= 30.
Size grid_exhaustive_optimum(const Instance& instance, Size horizon);

} // namespace tsched

#endif

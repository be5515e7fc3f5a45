#ifndef TSCHED_SIMULATE_HPP
#define TSCHED_SIMULATE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tsched/core.hpp"

namespace tsched {

/// Actual execution time per job, indexed like Schedule::jobs(); each
/// entry must satisfy 1 <= d_j <= p_j.
using DemandVector = std::vector<Rational>;

struct JobOutcome {
	bool executed = false;
	/// Execution interval [start, end) when executed.
	Rational start;
	Rational end;
	/// Index of the executed job whose interval covered this job's start.
	std::optional<std::size_t> canceled_by;
};

struct ExecutionTrace {
	std::vector<JobOutcome> jobs;
	/// End of the last executed interval.
	Rational completion;
};

/// Runs jobs in start order. A job whose start falls inside the interval of
/// the last executed job is canceled; otherwise it runs for its demand.
/// Throws std::invalid_argument for an infeasible schedule or a demand out
/// of range, and std::logic_error if a job cancels a job that is at least
/// as critical (impossible for feasible input).
ExecutionTrace simulate(const Schedule& schedule, const DemandVector& demands);

} // namespace tsched

#endif

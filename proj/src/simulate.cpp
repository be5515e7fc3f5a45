#include "tsched/simulate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tsched {

ExecutionTrace simulate(const Schedule& schedule, const DemandVector& demands) {
	if (demands.size() != schedule.size())
		throw std::invalid_argument("demand vector has " + std::to_string(demands.size()) + " entries for " +
		                            std::to_string(schedule.size()) + " jobs");
	for (std::size_t j = 0; j < demands.size(); ++j) {
		if (demands[j] < 1 || demands[j] > schedule[j].size)
			throw std::invalid_argument("demand " + demands[j].to_string() + " of job " + std::to_string(j) +
			                            " outside [1, " + std::to_string(schedule[j].size) + "]");
	}
	if (const auto violations = check_feasible(schedule); !violations.empty())
		throw std::invalid_argument("cannot simulate an infeasible schedule (" + std::to_string(violations.size()) +
		                            " violating pairs)");

	std::vector<std::size_t> order(schedule.size());
	std::iota(order.begin(), order.end(), 0);
	std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return schedule[a].start < schedule[b].start; });

	ExecutionTrace trace;
	trace.jobs.resize(schedule.size());
	Rational busy_until(0);
	std::optional<std::size_t> running;
	for (std::size_t j : order) {
		JobOutcome& out = trace.jobs[j];
		if (running && schedule[j].start < busy_until) {
			if (schedule[j].size >= schedule[*running].size)
				throw std::logic_error("job " + std::to_string(j) + " canceled by a job of no higher criticality");
			out.canceled_by = running;
			continue;
		}
		out.executed = true;
		out.start = schedule[j].start;
		out.end = schedule[j].start + demands[j];
		busy_until = out.end;
		running = j;
	}
	trace.completion = busy_until;
	return trace;
}

} // namespace tsched

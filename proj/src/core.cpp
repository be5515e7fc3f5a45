#include "tsched/core.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tsched {

Instance::Instance(std::vector<Size> raw_sizes) : sizes_(std::move(raw_sizes)) {
	if (sizes_.empty()) throw std::invalid_argument("instance must contain at least one job");
	for (Size p : sizes_) {
		if (p <= 0) throw std::invalid_argument("non-positive job size " + std::to_string(p));
	}
	std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
}

Size Instance::total() const {
	return std::accumulate(sizes_.begin(), sizes_.end(), Size{0});
}

Schedule::Schedule(std::vector<ScheduledJob> jobs) : jobs_(std::move(jobs)) {
	for (const auto& job : jobs_) {
		if (job.size <= 0) throw std::invalid_argument("non-positive job size " + std::to_string(job.size));
		if (job.start < 0) throw std::invalid_argument("negative start time " + job.start.to_string());
	}
}

Instance Schedule::instance() const {
	std::vector<Size> sizes;
	sizes.reserve(jobs_.size());
	for (const auto& job : jobs_) sizes.push_back(job.size);
	return Instance(std::move(sizes));
}

std::vector<Violation> check_feasible(const Schedule& schedule) {
	std::vector<Violation> violations;
	const auto jobs = schedule.jobs();
	for (std::size_t i = 0; i < jobs.size(); ++i) {
		for (std::size_t j = i + 1; j < jobs.size(); ++j) {
			Rational distance = jobs[i].start - jobs[j].start;
			if (distance < 0) distance = -distance;
			if (distance < std::min(jobs[i].size, jobs[j].size)) violations.emplace_back(i, j);
		}
	}
	return violations;
}

Rational makespan(const Schedule& schedule) {
	if (schedule.empty()) throw std::invalid_argument("makespan of an empty schedule");
	Rational result = schedule[0].end();
	for (const auto& job : schedule.jobs()) result = std::max(result, job.end());
	return result;
}

GapList gaps(const Schedule& schedule) {
	if (schedule.empty()) throw std::invalid_argument("gaps of an empty schedule");
	std::vector<Rational> starts;
	starts.reserve(schedule.size());
	for (const auto& job : schedule.jobs()) starts.push_back(job.start);
	std::sort(starts.begin(), starts.end());
	if (std::adjacent_find(starts.begin(), starts.end()) != starts.end())
		throw std::invalid_argument("coincident start times");

	GapList result;
	result.reserve(starts.size());
	for (std::size_t k = 0; k + 1 < starts.size(); ++k) result.push_back({starts[k], starts[k + 1] - starts[k]});
	result.push_back({starts.back(), makespan(schedule) - starts.back()});
	return result;
}

Rational binary_tree_ratio(const Instance& instance) {
	Rational ratio(1);
	// 1-based i = 2..n; parent index ceil(i/2).
	for (std::size_t i = 2; i <= instance.size(); ++i) {
		std::size_t parent = (i + 1) / 2;
		ratio = std::max(ratio, Rational(instance[parent - 1], instance[i - 1]));
	}
	return ratio;
}

Size lower_bound(const Instance& instance) {
	const std::size_t n = instance.size();
	const auto sizes = instance.sizes();
	// S = p_{ceil(n/2)+1} + ... + p_n (1-based), i.e. 0-based indices from ceil(n/2).
	Size smaller_half = std::accumulate(sizes.begin() + static_cast<std::ptrdiff_t>((n + 1) / 2), sizes.end(), Size{0});
	Size median = (n % 2 == 1) ? instance[(n + 1) / 2 - 1] : 0;
	return median + 2 * smaller_half;
}

} // namespace tsched

#include "tsched/exact.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "tsched/greedy.hpp"

namespace tsched {

Schedule canonical_schedule_for_order(std::span<const Size> ordered_sizes) {
	std::vector<ScheduledJob> jobs;
	jobs.reserve(ordered_sizes.size());
	std::vector<Size> starts;
	for (std::size_t k = 0; k < ordered_sizes.size(); ++k) {
		Size start = 0;
		for (std::size_t i = 0; i < k; ++i) start = std::max(start, starts[i] + std::min(ordered_sizes[i], ordered_sizes[k]));
		starts.push_back(start);
		jobs.push_back({ordered_sizes[k], Rational(start)});
	}
	return Schedule(std::move(jobs));
}

namespace {

class OrderSearch {
public:
	OrderSearch(const Instance& instance, const ExactOptions& options) : options_(options) {
		for (Size p : instance.sizes()) {
			if (!values_.empty() && values_.back() == p) ++remaining_.back();
			else {
				values_.push_back(p);
				remaining_.push_back(1);
			}
		}
		n_ = instance.size();
		placed_sizes_.reserve(n_);
		placed_starts_.reserve(n_);
	}

	void seed(Size makespan, std::vector<Size> order) {
		best_ = makespan;
		best_order_ = std::move(order);
	}

	void run() { descend(0); }

	Size best() const { return best_; }
	const std::vector<Size>& best_order() const { return best_order_; }
	std::size_t nodes() const { return nodes_; }

private:
	void descend(Size partial_makespan) {
		++nodes_;
		if (placed_sizes_.size() == n_) {
			if (partial_makespan < best_) {
				best_ = partial_makespan;
				best_order_ = placed_sizes_;
			}
			return;
		}
		for (std::size_t g = 0; g < values_.size(); ++g) {
			if (remaining_[g] == 0) continue;
			const Size p = values_[g];
			Size start = 0;
			for (std::size_t i = 0; i < placed_sizes_.size(); ++i)
				start = std::max(start, placed_starts_[i] + std::min(placed_sizes_[i], p));
			const Size next_makespan = std::max(partial_makespan, start + p);
			if (next_makespan >= best_) continue;

			--remaining_[g];
			if (options_.suffix_bound && start + suffix_bound(p) >= best_) {
				++remaining_[g];
				continue;
			}
			placed_sizes_.push_back(p);
			placed_starts_.push_back(start);
			descend(next_makespan);
			placed_sizes_.pop_back();
			placed_starts_.pop_back();
			++remaining_[g];
		}
	}

	// The placed job plus everything after it is itself a feasible schedule
	// starting at its start time.
	Size suffix_bound(Size just_placed) const {
		std::vector<Size> rest{just_placed};
		for (std::size_t g = 0; g < values_.size(); ++g) rest.insert(rest.end(), static_cast<std::size_t>(remaining_[g]), values_[g]);
		return lower_bound(Instance(std::move(rest)));
	}

	ExactOptions options_;
	std::size_t n_ = 0;
	std::vector<Size> values_;
	std::vector<int> remaining_;
	std::vector<Size> placed_sizes_;
	std::vector<Size> placed_starts_;
	Size best_ = std::numeric_limits<Size>::max();
	std::vector<Size> best_order_;
	std::size_t nodes_ = 0;
};

} // namespace

ExactResult optimal_makespan(const Instance& instance, const ExactOptions& options) {
	if (instance.size() > options.max_jobs)
		throw LimitExceeded("exact search limited to " + std::to_string(options.max_jobs) + " jobs, got " +
		                    std::to_string(instance.size()));

	const GreedyResult greedy = greedy_schedule(instance);
	std::vector<std::size_t> by_start(instance.size());
	for (std::size_t i = 0; i < by_start.size(); ++i) by_start[i] = i;
	std::sort(by_start.begin(), by_start.end(), [&](std::size_t a, std::size_t b) {
		return greedy.schedule[a].start < greedy.schedule[b].start;
	});
	std::vector<Size> greedy_order;
	for (std::size_t i : by_start) greedy_order.push_back(greedy.schedule[i].size);

	OrderSearch search(instance, options);
	search.seed(greedy.makespan, std::move(greedy_order));
	search.run();

	ExactResult result;
	result.makespan = search.best();
	result.witness = canonical_schedule_for_order(search.best_order());
	result.nodes = search.nodes();
	return result;
}

namespace {

bool grid_search(std::span<const Size> sizes, Size horizon, std::vector<Size>& starts, Size partial, Size& best) {
	const std::size_t k = starts.size();
	if (k == sizes.size()) {
		best = std::min(best, partial);
		return true;
	}
	bool any = false;
	for (Size s = 0; s <= horizon; ++s) {
		bool ok = true;
		for (std::size_t i = 0; i < k && ok; ++i) {
			Size distance = s > starts[i] ? s - starts[i] : starts[i] - s;
			ok = distance >= std::min(sizes[i], sizes[k]);
		}
		if (!ok) continue;
		starts.push_back(s);
		any |= grid_search(sizes, horizon, starts, std::max(partial, s + sizes[k]), best);
		starts.pop_back();
	}
	return any;
}

} // namespace

Size grid_exhaustive_optimum(const Instance& instance, Size horizon) {
	if (instance.size() > 4) throw LimitExceeded("grid search limited to 4 jobs");
	if (horizon > 30) throw LimitExceeded("grid search limited to horizon 30");
	if (horizon < 0) throw std::invalid_argument("negative horizon");
	Size best = std::numeric_limits<Size>::max();
	std::vector<Size> starts;
	if (!grid_search(instance.sizes(), horizon, starts, 0, best))
		throw std::invalid_argument("no feasible schedule within horizon " + std::to_string(horizon));
	return best;
}

} // namespace tsched

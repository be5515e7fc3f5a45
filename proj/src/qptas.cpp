#include "tsched/qptas.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>

namespace tsched {

BudgetExceeded::BudgetExceeded(std::size_t attempted, std::size_t budget)
    : std::runtime_error("dynamic program exceeded its state budget: " + std::to_string(attempted) +
                         " states attempted, budget " + std::to_string(budget)),
      attempted_(attempted) {}

namespace {

void require_positive(const Rational& eps) {
	if (eps <= 0) throw std::invalid_argument("eps must be positive, got " + eps.to_string());
}

} // namespace

SizeSplit split_small(const Instance& instance, const Rational& eps) {
	require_positive(eps);
	SizeSplit split;
	split.threshold = eps * instance.largest() / static_cast<std::int64_t>(instance.size());
	for (Size p : instance.sizes()) {
		if (Rational(p) < split.threshold) split.small.push_back(p);
		else split.large.push_back(p);
	}
	return split;
}

RoundedInstance round_sizes(std::span<const Size> sizes, const Rational& eps, std::optional<Rational> unit) {
	require_positive(eps);
	RoundedInstance r;
	r.eps = eps;
	r.original.assign(sizes.begin(), sizes.end());
	std::sort(r.original.begin(), r.original.end(), std::greater<>());
	if (r.original.empty()) {
		r.unit = unit.value_or(Rational(1));
		return r;
	}
	r.unit = unit.value_or(Rational(r.original.back()));
	if (r.unit <= 0) throw std::invalid_argument("rounding unit must be positive");

	const Rational base = Rational(1) + eps;
	// powers[k] = unit * (1 + eps)^k, grown on demand.
	std::vector<Rational> powers{r.unit};
	for (Size p : r.original) {
		if (Rational(p) < r.unit) throw std::invalid_argument("size " + std::to_string(p) + " below rounding unit");
		unsigned k = 0;
		while (true) {
			if (k == powers.size()) powers.push_back(powers.back() * base);
			if (powers[k] >= p) break;
			++k;
		}
		r.rounded.push_back(powers[k]);
		r.exponent.push_back(k);
		if (r.classes.empty() || r.classes.back() != powers[k]) {
			r.classes.push_back(powers[k]);
			r.class_count.push_back(1);
		} else {
			++r.class_count.back();
		}
	}
	return r;
}

RoundedInstance round_sizes(const Instance& instance, const Rational& eps) {
	SizeSplit split = split_small(instance, eps);
	RoundedInstance r = round_sizes(split.large, eps);
	r.small = std::move(split.small);
	return r;
}

unsigned class_count_bound(std::size_t n, const Rational& eps) {
	require_positive(eps);
	const Rational target = Rational(static_cast<std::int64_t>(n)) / eps;
	const Rational base = Rational(1) + eps;
	unsigned m = 0;
	for (Rational power(1); power < target; power *= base) ++m;
	return m;
}

Grid make_grid(const Rational& largest_size, std::size_t n, const Rational& eps) {
	require_positive(eps);
	if (n == 0) throw std::invalid_argument("grid for an empty instance");
	const auto count = static_cast<std::int64_t>(n);
	Grid grid;
	grid.step = eps * largest_size / count;
	grid.max_index = (Rational(count * count) / eps).ceil();
	return grid;
}

namespace {

struct KeyHash {
	std::size_t operator()(const std::vector<std::int32_t>& key) const noexcept {
		std::size_t h = key.size();
		for (std::int32_t v : key) h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
		return h;
	}
};

struct Memo {
	Rational value;
	// Class placed next; -1 when no feasible continuation exists on the grid.
	std::int32_t choice = -1;
	std::int32_t index = 0;
};

// State layout: [rightmost grid index per class (-1 = empty sentinel),
// remaining count per class].
class ConfigurationDp {
public:
	ConfigurationDp(const RoundedInstance& rounded, const Grid& grid, const QptasOptions& options)
	    : classes_(rounded.classes), grid_(grid), options_(options) {
		const std::size_t z = classes_.size();
		// Separation, in grid steps, required after a class-x job before a class-y job.
		offset_.assign(z, std::vector<std::int32_t>(z));
		for (std::size_t x = 0; x < z; ++x) {
			for (std::size_t y = 0; y < z; ++y) {
				offset_[x][y] = static_cast<std::int32_t>((std::min(classes_[x], classes_[y]) / grid_.step).ceil());
			}
		}
	}

	const Memo& solve(std::vector<std::int32_t>& state) {
		if (auto it = memo_.find(state); it != memo_.end()) return it->second;

		const std::size_t z = classes_.size();
		Memo best;
		bool any_left = false;
		for (std::size_t c = 0; c < z; ++c) {
			if (state[z + c] == 0) continue;
			any_left = true;
			std::int64_t index = 0;
			for (std::size_t x = 0; x < z; ++x) {
				if (state[x] >= 0) index = std::max<std::int64_t>(index, state[x] + offset_[x][c]);
			}
			if (index > grid_.max_index) continue;

			const std::int32_t saved = state[c];
			state[c] = static_cast<std::int32_t>(index);
			--state[z + c];
			const Memo& sub = solve(state);
			const bool feasible = sub.choice >= 0 || remaining_after(state) == 0;
			const Rational value = sub.value;
			++state[z + c];
			state[c] = saved;

			if (feasible && (best.choice < 0 || value < best.value)) {
				best.value = value;
				best.choice = static_cast<std::int32_t>(c);
				best.index = static_cast<std::int32_t>(index);
			}
		}
		if (!any_left) best.value = configuration_makespan(state);

		if (memo_.size() >= options_.max_states) throw BudgetExceeded(memo_.size() + 1, options_.max_states);
		return memo_.emplace(state, best).first->second;
	}

	std::size_t states() const { return memo_.size(); }

private:
	std::size_t remaining_after(const std::vector<std::int32_t>& state) const {
		std::size_t left = 0;
		for (std::size_t c = 0; c < classes_.size(); ++c) left += static_cast<std::size_t>(state[classes_.size() + c]);
		return left;
	}

	Rational configuration_makespan(const std::vector<std::int32_t>& state) const {
		Rational result(0);
		for (std::size_t x = 0; x < classes_.size(); ++x) {
			if (state[x] >= 0) result = std::max(result, grid_.point(state[x]) + classes_[x]);
		}
		return result;
	}

	const std::vector<Rational>& classes_;
	Grid grid_;
	QptasOptions options_;
	std::vector<std::vector<std::int32_t>> offset_;
	std::unordered_map<std::vector<std::int32_t>, Memo, KeyHash> memo_;
};

} // namespace

DpResult dp_solve(const RoundedInstance& rounded, const Grid& grid, const QptasOptions& options) {
	const std::size_t z = rounded.classes.size();
	DpResult result;
	result.stats.classes = z;
	result.stats.grid_points = grid.point_count();
	if (z == 0) {
		result.makespan = 0;
		return result;
	}

	ConfigurationDp dp(rounded, grid, options);
	std::vector<std::int32_t> state(2 * z, -1);
	for (std::size_t c = 0; c < z; ++c) state[z + c] = rounded.class_count[c];

	const Memo root = dp.solve(state);
	if (root.choice < 0) throw std::runtime_error("no schedule of the large jobs fits on the start-time grid");
	result.makespan = root.value;

	// Replay the memoized choices from the empty configuration.
	while (true) {
		const Memo& step = dp.solve(state);
		if (step.choice < 0) break;
		result.class_of_job.push_back(static_cast<std::size_t>(step.choice));
		result.grid_index.push_back(step.index);
		state[static_cast<std::size_t>(step.choice)] = step.index;
		--state[z + static_cast<std::size_t>(step.choice)];
	}
	result.stats.states = dp.states();
	return result;
}

QptasResult qptas_schedule(const Instance& instance, const Rational& eps, const QptasOptions& options) {
	const RoundedInstance rounded = round_sizes(instance, eps);

	QptasResult result;
	const Rational largest = rounded.classes.empty() ? Rational(instance.largest()) : rounded.classes.front();
	result.grid = make_grid(largest, instance.size(), eps);

	const DpResult dp = dp_solve(rounded, result.grid, options);
	result.dp_makespan = dp.makespan;
	result.stats = dp.stats;

	// Hand out original sizes class by class; every original is at most its
	// rounded class size, so separations only shrink.
	std::vector<std::vector<Size>> pool(rounded.classes.size());
	for (std::size_t i = 0; i < rounded.original.size(); ++i) {
		const auto cls = std::find(rounded.classes.begin(), rounded.classes.end(), rounded.rounded[i]);
		pool[static_cast<std::size_t>(cls - rounded.classes.begin())].push_back(rounded.original[i]);
	}

	std::vector<ScheduledJob> jobs;
	Rational current(0);
	for (std::size_t k = 0; k < dp.class_of_job.size(); ++k) {
		auto& bucket = pool[dp.class_of_job[k]];
		const Size size = bucket.back();
		bucket.pop_back();
		jobs.push_back({size, result.grid.point(dp.grid_index[k])});
		current = std::max(current, jobs.back().end());
	}
	result.large_makespan = current;

	for (Size p : rounded.small) {
		jobs.push_back({p, current});
		current += p;
	}
	result.schedule = Schedule(std::move(jobs));
	result.makespan = current;
	return result;
}

} // namespace tsched

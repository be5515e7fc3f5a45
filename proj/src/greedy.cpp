#include "tsched/greedy.hpp"

#include <sstream>

namespace tsched {

namespace {

struct Slot {
	std::size_t job;
	Size start;
	// Job owning the gap that starts at this slot.
	std::size_t gap_owner;
};

Size gap_length(const std::vector<Slot>& slots, std::size_t k, Size current_makespan) {
	return (k + 1 < slots.size() ? slots[k + 1].start : current_makespan) - slots[k].start;
}

std::vector<Size> gap_lengths(const std::vector<Slot>& slots, Size current_makespan) {
	std::vector<Size> lengths;
	lengths.reserve(slots.size());
	for (std::size_t k = 0; k < slots.size(); ++k) lengths.push_back(gap_length(slots, k, current_makespan));
	return lengths;
}

} // namespace

GapInsertion insert_into_gap(Size gap_length, Size job_size) {
	GapInsertion result;
	result.offset = job_size;
	result.left_gap = job_size;
	if (gap_length >= 2 * job_size) {
		result.right_gap = gap_length - job_size;
	} else {
		result.right_gap = job_size;
		result.shift = 2 * job_size - gap_length;
	}
	return result;
}

GreedyResult greedy_schedule(const Instance& instance) {
	const auto sizes = instance.sizes();
	std::vector<Slot> slots{{0, 0, 0}};
	Size current_makespan = sizes[0];

	GreedyResult result;
	result.trace.push_back({0, sizes[0], 0, 0, 0, 0, std::nullopt, current_makespan, {current_makespan}});

	for (std::size_t j = 1; j < sizes.size(); ++j) {
		const Size p = sizes[j];
		std::size_t best = 0;
		Size best_length = gap_length(slots, 0, current_makespan);
		for (std::size_t k = 1; k < slots.size(); ++k) {
			Size length = gap_length(slots, k, current_makespan);
			if (length > best_length) {
				best = k;
				best_length = length;
			}
		}

		// Gaps of equal length are interchangeable, so ownership among them is
		// relabelled to hand the chosen gap to the lowest-index owner.
		for (std::size_t k = 0; k < slots.size(); ++k) {
			if (gap_length(slots, k, current_makespan) == best_length && slots[k].gap_owner < slots[best].gap_owner)
				std::swap(slots[k].gap_owner, slots[best].gap_owner);
		}

		const Size gap_start = slots[best].start;
		const GapInsertion ins = insert_into_gap(best_length, p);
		const Size placed_at = gap_start + ins.offset;
		const std::size_t parent = slots[best].gap_owner;

		for (std::size_t k = best + 1; k < slots.size(); ++k) slots[k].start += ins.shift;
		current_makespan += ins.shift;
		slots[best].gap_owner = j;
		slots.insert(slots.begin() + static_cast<std::ptrdiff_t>(best + 1), Slot{j, placed_at, j});

		result.trace.push_back({j, p, gap_start, best_length, placed_at, ins.shift, parent, current_makespan,
		                        gap_lengths(slots, current_makespan)});
	}

	std::vector<ScheduledJob> jobs(sizes.size());
	for (const auto& slot : slots) jobs[slot.job] = {sizes[slot.job], Rational(slot.start)};
	result.schedule = Schedule(std::move(jobs));
	result.makespan = current_makespan;
	return result;
}

std::size_t GreedyTree::edge_count() const {
	std::size_t edges = 0;
	for (const auto& c : children) edges += c.size();
	return edges;
}

GreedyTree greedy_tree(const GreedyTrace& trace) {
	GreedyTree tree;
	tree.children.resize(trace.size());
	for (const auto& step : trace) {
		if (step.parent) tree.children[*step.parent].push_back(step.job);
		else tree.root = step.job;
	}
	return tree;
}

std::string to_dot(const GreedyTree& tree, const GreedyTrace& trace) {
	std::ostringstream out;
	out << "digraph greedy {\n";
	for (const auto& step : trace) out << "  j" << step.job + 1 << " [label=\"" << step.job + 1 << " (p=" << step.size << ")\"];\n";
	for (std::size_t parent = 0; parent < tree.children.size(); ++parent) {
		for (std::size_t child : tree.children[parent]) out << "  j" << parent + 1 << " -> j" << child + 1 << ";\n";
	}
	out << "}\n";
	return out.str();
}

} // namespace tsched

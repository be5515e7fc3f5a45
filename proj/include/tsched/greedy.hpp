#ifndef TSCHED_GREEDY_HPP
#define TSCHED_GREEDY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tsched/core.hpp"

namespace tsched {

/// One insertion step of the greedy algorithm. Job indices are 0-based
/// positions in the sorted instance, which is also the placement order.
struct GreedyStep {
	std::size_t job = 0;
	Size size = 0;
	/// The gap chosen for the job, as it was just before the insertion.
	Size gap_start = 0;
	Size gap_length = 0;
	/// Start assigned at insertion time (later shifts may move it right).
	Size placed_at = 0;
	/// 2p - x when positive, else 0.
	Size shift = 0;
	/// Owner of the chosen gap; empty for the first job.
	std::optional<std::size_t> parent;
	Size makespan_after = 0;
	/// Gap lengths in start order right after this step.
	std::vector<Size> gaps_after;
};

using GreedyTrace = std::vector<GreedyStep>;

struct GreedyResult {
	Schedule schedule;
	GreedyTrace trace;
	Size makespan = 0;
};

/// Largest-first insertion into the largest current gap (earliest on ties),
/// delaying all later jobs by 2p - x whenever the gap is too short.
GreedyResult greedy_schedule(const Instance& instance);

struct GapInsertion {
	/// Offset of the job from the gap start, always p.
	Size offset = 0;
	Size left_gap = 0;
	Size right_gap = 0;
	Size shift = 0;
};

/// How a gap of length x splits when a job of size p is placed at x_start + p.
GapInsertion insert_into_gap(Size gap_length, Size job_size);

/// Parent/child relation between jobs induced by gap ownership: the gaps a
/// job creates when inserted belong to that job, and a job inserted into a
/// gap becomes a child of the gap's owner. Among equally long gaps the
/// lowest-index owner is charged first.
struct GreedyTree {
	std::size_t root = 0;
	/// children[i] in placement order.
	std::vector<std::vector<std::size_t>> children;

	std::size_t node_count() const { return children.size(); }
	std::size_t edge_count() const;
};

GreedyTree greedy_tree(const GreedyTrace& trace);

/// Graphviz text; nodes are labelled with 1-based job numbers and sizes.
std::string to_dot(const GreedyTree& tree, const GreedyTrace& trace);

} // namespace tsched

#endif

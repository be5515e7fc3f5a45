#include "doctest.h"

#include <random>

#include "tsched/exact.hpp"
#include "tsched/qptas.hpp"

using namespace tsched;

TEST_CASE("rounding with an explicit unit") {
	const std::vector<Size> powers{4, 2, 1};
	const RoundedInstance r = round_sizes(powers, Rational(1), Rational(1));
	CHECK(r.rounded == std::vector<Rational>{4, 2, 1});
	CHECK(r.exponent == std::vector<unsigned>{2, 1, 0});

	const std::vector<Size> three{3};
	CHECK(round_sizes(three, Rational(1), Rational(1)).rounded == std::vector<Rational>{4});
	// Default unit is the smallest size itself.
	CHECK(round_sizes(three, Rational(1)).rounded == std::vector<Rational>{3});
	CHECK_THROWS(round_sizes(three, Rational(1), Rational(4)));
	CHECK_THROWS(round_sizes(three, Rational(0)));
}

TEST_CASE("rounding the four-job instance with eps 1/2") {
	const RoundedInstance r = round_sizes(Instance({6, 5, 4, 3}), Rational(1, 2));
	CHECK(r.small.empty());
	CHECK(r.unit == 3);
	CHECK(r.rounded == std::vector<Rational>{Rational(27, 4), Rational(27, 4), Rational(9, 2), 3});
	CHECK(r.classes == std::vector<Rational>{Rational(27, 4), Rational(9, 2), 3});
	CHECK(r.class_count == std::vector<int>{2, 1, 1});
	CHECK(r.classes.size() <= class_count_bound(4, Rational(1, 2)) + 1);
}

TEST_CASE("class count bound") {
	CHECK(class_count_bound(4, Rational(1, 2)) == 6);
	CHECK(class_count_bound(7, Rational(1, 4)) == 15);
	CHECK(class_count_bound(9, Rational(1)) == 4);
}

TEST_CASE("small-job split") {
	SizeSplit s = split_small(Instance({100, 1}), Rational(1, 2));
	CHECK(s.threshold == 25);
	CHECK(s.large == std::vector<Size>{100});
	CHECK(s.small == std::vector<Size>{1});

	CHECK(split_small(Instance({4, 4, 4}), Rational(1)).small.empty());
	s = split_small(Instance({20, 20, 10, 5, 5, 4, 4, 4, 4}), Rational(1, 2));
	CHECK(s.threshold == Rational(10, 9));
	CHECK(s.small.empty());
}

TEST_CASE("grid") {
	const Grid g = make_grid(Rational(27, 4), 4, Rational(1, 2));
	CHECK(g.step == Rational(27, 32));
	CHECK(g.max_index == 32);
	CHECK(g.point_count() == 33);
}

TEST_CASE("dp on tiny rounded instances") {
	const std::vector<Size> one{5};
	RoundedInstance r = round_sizes(one, Rational(1, 2));
	DpResult d = dp_solve(r, make_grid(Rational(5), 1, Rational(1, 2)));
	CHECK(d.makespan == 5);
	CHECK(d.grid_index == std::vector<std::int64_t>{0});

	// Step 1 puts q on the grid, so two equal jobs need exactly 2q.
	const std::vector<Size> two{3, 3};
	r = round_sizes(two, Rational(1));
	Grid grid{Rational(1), 10};
	d = dp_solve(r, grid);
	CHECK(d.makespan == 6);
	CHECK(d.grid_index == std::vector<std::int64_t>{0, 3});
	CHECK(d.stats.classes == 1);
}

TEST_CASE("dp budget is enforced") {
	const std::vector<Size> sizes{9, 8, 7, 6, 5};
	const RoundedInstance r = round_sizes(sizes, Rational(1, 4));
	try {
		dp_solve(r, make_grid(r.classes.front(), 5, Rational(1, 4)), {10});
		FAIL("expected BudgetExceeded");
	} catch (const BudgetExceeded& e) {
		CHECK(e.attempted() == 11);
	}
}

TEST_CASE("qptas on small instances") {
	const QptasResult single = qptas_schedule(Instance({7}), Rational(1, 3));
	CHECK(single.makespan == 7);
	CHECK(single.schedule[0].start == 0);

	const QptasResult four = qptas_schedule(Instance({6, 5, 4, 3}), Rational(1, 2));
	CHECK(is_feasible(four.schedule));
	CHECK(four.makespan >= 14);
	CHECK(four.makespan <= (Rational(27, 8) * 14).ceil());
	CHECK(four.dp_makespan >= 14);
	CHECK(four.dp_makespan <= Rational(9, 4) * 14);

	const QptasResult nine = qptas_schedule(Instance({20, 20, 10, 5, 5, 4, 4, 4, 4}), Rational(1));
	CHECK(is_feasible(nine.schedule));
	CHECK(nine.makespan >= 40);
	CHECK(nine.makespan <= 8 * 40);
}

TEST_CASE("qptas keeps small jobs behind the large ones") {
	const QptasResult r = qptas_schedule(Instance({100, 1}), Rational(1, 2));
	CHECK(is_feasible(r.schedule));
	CHECK(r.large_makespan == 100);
	CHECK(r.makespan == 101);
	CHECK(r.makespan - r.large_makespan <= Rational(1, 2) * 100);
}

TEST_CASE("qptas properties on random instances") {
	std::mt19937_64 rng(17);
	for (int trial = 0; trial < 60; ++trial) {
		const std::size_t n = 1 + rng() % 6;
		std::vector<Size> sizes;
		for (std::size_t i = 0; i < n; ++i) sizes.push_back(1 + static_cast<Size>(rng() % 40));
		const Instance inst(sizes);
		const Rational eps = std::vector<Rational>{1, Rational(1, 2), Rational(1, 4)}[trial % 3];
		const QptasResult r = qptas_schedule(inst, eps);
		const Size opt = optimal_makespan(inst).makespan;
		const Rational factor = Rational(1) + eps;

		CHECK(is_feasible(r.schedule));
		CHECK(r.schedule.instance() == inst);
		CHECK(r.makespan == makespan(r.schedule));
		CHECK(r.makespan >= opt);
		CHECK(r.makespan <= factor * factor * factor * opt);
		CHECK(r.large_makespan <= r.dp_makespan);
		CHECK(r.makespan - r.large_makespan <= eps * inst.largest());
		CHECK(r.stats.classes <= class_count_bound(n, eps) + 1);
		CHECK(r.stats.grid_points <= static_cast<std::size_t>((Rational(static_cast<std::int64_t>(n * n)) / eps).ceil()) + 1);
		for (const auto& job : r.schedule.jobs()) {
			if (Rational(job.size) < eps * inst.largest() / static_cast<std::int64_t>(n)) continue;
			const Rational index = job.start / r.grid.step;
			CHECK(index.is_integer());
			CHECK(index <= r.grid.max_index);
		}
	}
}

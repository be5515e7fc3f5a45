#include "doctest.h"

#include <algorithm>
#include <random>

#include "tsched/exact.hpp"
#include "tsched/hardness.hpp"

using namespace tsched;

namespace {

const ThreeDMInstance kSingle{10, {3}, {3}, {4}};
const ThreeDMInstance kSolvable{10, {3, 4}, {3, 3}, {4, 3}};
const ThreeDMInstance kUnsolvable{14, {4, 6}, {5, 5}, {4, 4}};

std::vector<Size> sizes_of(const Instance& inst) {
	return {inst.sizes().begin(), inst.sizes().end()};
}

// Random valid 3DM instance built from a planted matching.
ThreeDMInstance planted(std::mt19937_64& rng, std::size_t n, std::int64_t D) {
	ThreeDMInstance tdm{D, {}, {}, {}};
	for (std::size_t t = 0; t < n; ++t) {
		while (true) {
			std::int64_t a = D / 4 + 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(D / 4));
			std::int64_t b = D / 4 + 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(D / 4));
			std::int64_t c = D - a - b;
			if (4 * a > D && 2 * a < D && 4 * b > D && 2 * b < D && 4 * c > D && 2 * c < D) {
				tdm.a.push_back(a);
				tdm.b.push_back(b);
				tdm.c.push_back(c);
				break;
			}
		}
	}
	std::shuffle(tdm.b.begin(), tdm.b.end(), rng);
	std::shuffle(tdm.c.begin(), tdm.c.end(), rng);
	return tdm;
}

} // namespace

TEST_CASE("3DM validation") {
	CHECK_NOTHROW(kSingle.validate());
	CHECK_THROWS(ThreeDMInstance{10, {5}, {3}, {2}}.validate());   // 5 is not < D/2
	CHECK_THROWS(ThreeDMInstance{10, {3}, {3}, {3}}.validate());   // sum 9 != 10
	CHECK_THROWS(ThreeDMInstance{3, {1}, {1}, {1}}.validate());    // D < 4
	CHECK_THROWS(ThreeDMInstance{10, {3, 3}, {3}, {4}}.validate()); // ragged
}

TEST_CASE("encoding sizes") {
	const EncodedInstance one = encode(kSingle, 13);
	CHECK(sizes_of(one.instance) == std::vector<Size>{154, 52, 42, 29, 27});
	CHECK(one.target == 154);
	CHECK(one.labels[0].type == JobType::E);
	CHECK(one.labels[4].type == JobType::C);

	const EncodedInstance two = encode(kUnsolvable, 18);
	CHECK(sizes_of(two.instance) == std::vector<Size>{214, 214, 72, 72, 62, 58, 41, 41, 36, 36});
	CHECK(two.target == 428);

	CHECK(minimum_M(10) == 13);
	CHECK(minimum_M(14) == 18);
	CHECK_THROWS(encode(kSingle, 12));
	CHECK_THROWS(encode(kUnsolvable, 17));
}

TEST_CASE("certificate schedule for the single-triplet instance") {
	const Schedule s = schedule_from_matching(kSingle, 13, {{0, 0, 0}});
	std::vector<std::pair<Size, Size>> got;
	for (const auto& job : s.jobs()) got.emplace_back(job.size, job.start.to_integer());
	CHECK(got == std::vector<std::pair<Size, Size>>{{154, 0}, {42, 42}, {27, 69}, {52, 96}, {29, 125}});
	CHECK(makespan(s) == 154);
	CHECK(is_feasible(s));
	CHECK(matching_from_schedule(kSingle, 13, s) == Matching{{0, 0, 0}});
	CHECK_THROWS(schedule_from_matching(kSolvable, 13, {{0, 0, 0}, {1, 1, 2}}));
}

TEST_CASE("brute-force 3DM") {
	CHECK(solve_3dm_bruteforce(kSingle) == Matching{{0, 0, 0}});
	CHECK(solve_3dm_bruteforce(kSolvable) == Matching{{0, 0, 0}, {1, 1, 1}});
	CHECK_FALSE(solve_3dm_bruteforce(kUnsolvable).has_value());
}

TEST_CASE("decoder rejects loose or foreign schedules") {
	// All jobs back to back: feasible but far too long.
	const EncodedInstance enc = encode(kSingle, 13);
	std::vector<ScheduledJob> jobs;
	Size t = 0;
	for (Size p : enc.instance.sizes()) {
		jobs.push_back({p, Rational(t)});
		t += p;
	}
	CHECK_THROWS_AS(matching_from_schedule(kSingle, 13, Schedule(jobs)), DecodeError);
	CHECK_THROWS_AS(matching_from_schedule(kSingle, 13, Schedule({{154, 0}})), DecodeError);
	CHECK_THROWS_AS(matching_from_schedule(kSingle, 13, Schedule{}), DecodeError);
}

TEST_CASE("decoder rejects a certificate with a moved job") {
	const Schedule good = schedule_from_matching(kSolvable, 13, {{0, 0, 0}, {1, 1, 1}});
	std::vector<ScheduledJob> jobs(good.jobs().begin(), good.jobs().end());
	// Second block's F onto the first block's F start.
	jobs[8].start = jobs[3].start;
	try {
		matching_from_schedule(kSolvable, 13, Schedule(jobs));
		FAIL("expected DecodeError");
	} catch (const DecodeError& e) {
		CHECK_FALSE(e.block().has_value());
		CHECK(std::string(e.what()).find("infeasible") != std::string::npos);
	}
}

TEST_CASE("reduction properties on planted instances") {
	std::mt19937_64 rng(23);
	for (int trial = 0; trial < 100; ++trial) {
		const std::size_t n = 1 + rng() % 4;
		const std::int64_t D = 12 + static_cast<std::int64_t>(rng() % 30);
		const ThreeDMInstance tdm = planted(rng, n, D);
		const std::int64_t M = minimum_M(D) + static_cast<std::int64_t>(rng() % 20);
		const EncodedInstance enc = encode(tdm, M);
		const ReductionSizes sz{M, D};

		// Sorted types come out grouped E, F, A, B, C.
		std::vector<JobType> types;
		for (const auto& l : enc.labels) types.push_back(l.type);
		CHECK(std::is_sorted(types.begin(), types.end()));
		CHECK(enc.instance.size() == 5 * n);

		// Ratio exceeds 2 by exactly 5D/(4M).
		CHECK(binary_tree_ratio(enc.instance) - 2 == Rational(5 * D, 4 * M));

		const auto matching = solve_3dm_bruteforce(tdm);
		REQUIRE(matching.has_value());
		const Schedule cert = schedule_from_matching(tdm, M, *matching);
		CHECK(is_feasible(cert));
		CHECK(makespan(cert) == enc.target);
		CHECK(makespan(cert) == static_cast<Size>(n) * sz.block());
		const Matching back = matching_from_schedule(tdm, M, cert);
		validate_matching(tdm, back);
		for (std::size_t t = 0; t < n; ++t) {
			CHECK(tdm.a[back[t].i] == tdm.a[(*matching)[t].i]);
			CHECK(tdm.b[back[t].j] == tdm.b[(*matching)[t].j]);
			CHECK(tdm.c[back[t].k] == tdm.c[(*matching)[t].k]);
		}
	}
}

TEST_CASE("tight schedules exist exactly for solvable instances (n = 1)") {
	CHECK(optimal_makespan(encode(kSingle, 13).instance).makespan == 154);
	// With n = 1 the promise forces a + b + c = D, so every valid instance is solvable.
	const ThreeDMInstance other{20, {6}, {7}, {7}};
	CHECK(solve_3dm_bruteforce(other).has_value());
	CHECK(optimal_makespan(encode(other, 25).instance).makespan == encode(other, 25).target);
}

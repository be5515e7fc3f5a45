#include "tsched/hardness.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace tsched {

void ThreeDMInstance::validate() const {
	if (D < 4) throw std::invalid_argument("3DM requires D >= 4");
	if (a.empty()) throw std::invalid_argument("3DM requires n >= 1");
	if (b.size() != a.size() || c.size() != a.size()) throw std::invalid_argument("3DM lists a, b, c differ in length");
	std::int64_t total = 0;
	for (const auto* list : {&a, &b, &c}) {
		for (std::int64_t v : *list) {
			if (!(4 * v > D && 2 * v < D))
				throw std::invalid_argument("3DM value " + std::to_string(v) + " not strictly between D/4 and D/2");
			total += v;
		}
	}
	if (total != static_cast<std::int64_t>(n()) * D)
		throw std::invalid_argument("3DM values sum to " + std::to_string(total) + ", expected nD");
}

void validate_matching(const ThreeDMInstance& tdm, const Matching& matching) {
	const std::size_t n = tdm.n();
	if (matching.size() != n) throw std::invalid_argument("matching must contain n triplets");
	std::vector<bool> used_a(n), used_b(n), used_c(n);
	for (const auto& t : matching) {
		if (t.i >= n || t.j >= n || t.k >= n) throw std::invalid_argument("matching index out of range");
		if (used_a[t.i] || used_b[t.j] || used_c[t.k]) throw std::invalid_argument("matching reuses an index");
		used_a[t.i] = used_b[t.j] = used_c[t.k] = true;
		if (tdm.a[t.i] + tdm.b[t.j] + tdm.c[t.k] != tdm.D) throw std::invalid_argument("triplet does not sum to D");
	}
}

std::string to_string(JobType type) {
	switch (type) {
	case JobType::E: return "E";
	case JobType::F: return "F";
	case JobType::A: return "A";
	case JobType::B: return "B";
	case JobType::C: return "C";
	}
	return "?";
}

JobType job_type_from_string(const std::string& name) {
	for (JobType t : {JobType::E, JobType::F, JobType::A, JobType::B, JobType::C}) {
		if (to_string(t) == name) return t;
	}
	throw std::invalid_argument("unknown job type '" + name + "'");
}

std::int64_t minimum_M(std::int64_t D) {
	return (5 * D + 3) / 4;
}

EncodedInstance encode(const ThreeDMInstance& tdm, std::int64_t M) {
	tdm.validate();
	if (M < minimum_M(tdm.D))
		throw std::invalid_argument("M = " + std::to_string(M) + " below ceil(5D/4) = " + std::to_string(minimum_M(tdm.D)));

	const ReductionSizes sz{M, tdm.D};
	std::vector<JobLabel> labels;
	for (std::size_t t = 0; t < tdm.n(); ++t) {
		labels.push_back({JobType::E, t, sz.e()});
		labels.push_back({JobType::F, t, sz.f()});
		labels.push_back({JobType::A, t, sz.a(tdm.a[t])});
		labels.push_back({JobType::B, t, sz.b(tdm.b[t])});
		labels.push_back({JobType::C, t, sz.c(tdm.c[t])});
	}
	std::stable_sort(labels.begin(), labels.end(), [](const JobLabel& x, const JobLabel& y) { return x.size > y.size; });

	std::vector<Size> sizes;
	for (const auto& l : labels) sizes.push_back(l.size);
	return {Instance(std::move(sizes)), std::move(labels), M, static_cast<Size>(tdm.n()) * sz.e()};
}

Schedule schedule_from_matching(const ThreeDMInstance& tdm, std::int64_t M, const Matching& matching) {
	tdm.validate();
	validate_matching(tdm, matching);
	const ReductionSizes sz{M, tdm.D};

	std::vector<ScheduledJob> jobs;
	for (std::size_t t = 0; t < matching.size(); ++t) {
		const auto& [i, j, k] = matching[t];
		const Size offset = static_cast<Size>(t) * sz.block();
		const Size a = sz.a(tdm.a[i]), b = sz.b(tdm.b[j]), c = sz.c(tdm.c[k]);
		jobs.push_back({sz.e(), Rational(offset)});
		jobs.push_back({a, Rational(offset + a)});
		jobs.push_back({c, Rational(offset + a + c)});
		jobs.push_back({sz.f(), Rational(offset + a + 2 * c)});
		jobs.push_back({b, Rational(offset + a + 2 * c + b)});
	}
	return Schedule(std::move(jobs));
}

DecodeError::DecodeError(std::optional<std::size_t> block, const std::string& what)
    : std::runtime_error(block ? "block " + std::to_string(*block) + ": " + what : what), block_(block) {}

Matching matching_from_schedule(const ThreeDMInstance& tdm, std::int64_t M, const Schedule& schedule) {
	const EncodedInstance encoded = encode(tdm, M);
	const ReductionSizes sz{M, tdm.D};
	const std::size_t n = tdm.n();

	if (schedule.empty()) throw DecodeError(std::nullopt, "empty schedule");
	if (!(schedule.instance() == encoded.instance)) throw DecodeError(std::nullopt, "job sizes do not match the encoded instance");
	if (!is_feasible(schedule)) throw DecodeError(std::nullopt, "schedule is infeasible");
	if (makespan(schedule) > encoded.target)
		throw DecodeError(std::nullopt, "makespan " + makespan(schedule).to_string() + " exceeds target " +
		                                    std::to_string(encoded.target));

	// Type ranges are disjoint for admissible M, so size identifies the type;
	// equal values within a type are handed out in index order.
	std::map<Size, JobType> type_of;
	std::map<Size, std::deque<std::size_t>> pool_a, pool_b, pool_c;
	type_of[sz.e()] = JobType::E;
	type_of[sz.f()] = JobType::F;
	for (std::size_t t = 0; t < n; ++t) {
		type_of[sz.a(tdm.a[t])] = JobType::A;
		type_of[sz.b(tdm.b[t])] = JobType::B;
		type_of[sz.c(tdm.c[t])] = JobType::C;
		pool_a[sz.a(tdm.a[t])].push_back(t);
		pool_b[sz.b(tdm.b[t])].push_back(t);
		pool_c[sz.c(tdm.c[t])].push_back(t);
	}

	std::vector<Rational> e_starts;
	for (const auto& job : schedule.jobs()) {
		if (type_of.at(job.size) == JobType::E) e_starts.push_back(job.start);
	}
	std::sort(e_starts.begin(), e_starts.end());

	struct Block {
		std::vector<Size> f, a, b, c;
	};
	std::vector<Block> blocks(n);
	for (const auto& job : schedule.jobs()) {
		const JobType type = type_of.at(job.size);
		if (type == JobType::E) continue;
		auto after = std::upper_bound(e_starts.begin(), e_starts.end(), job.start);
		if (after == e_starts.begin()) throw DecodeError(std::nullopt, "job starts before the first E job");
		Block& block = blocks[static_cast<std::size_t>(after - e_starts.begin() - 1)];
		switch (type) {
		case JobType::F: block.f.push_back(job.size); break;
		case JobType::A: block.a.push_back(job.size); break;
		case JobType::B: block.b.push_back(job.size); break;
		case JobType::C: block.c.push_back(job.size); break;
		case JobType::E: break;
		}
	}

	Matching matching;
	for (std::size_t t = 0; t < n; ++t) {
		const Block& block = blocks[t];
		if (block.f.size() != 1 || block.a.size() != 1 || block.b.size() != 1 || block.c.size() != 1)
			throw DecodeError(t, "expected one job each of F, A, B, C; found " + std::to_string(block.f.size()) + ", " +
			                         std::to_string(block.a.size()) + ", " + std::to_string(block.b.size()) + ", " +
			                         std::to_string(block.c.size()));
		auto take = [](std::deque<std::size_t>& pool) {
			std::size_t index = pool.front();
			pool.pop_front();
			return index;
		};
		Triplet triplet{take(pool_a[block.a[0]]), take(pool_b[block.b[0]]), take(pool_c[block.c[0]])};
		if (tdm.a[triplet.i] + tdm.b[triplet.j] + tdm.c[triplet.k] != tdm.D)
			throw DecodeError(t, "triplet does not sum to D");
		matching.push_back(triplet);
	}
	return matching;
}

std::optional<Matching> solve_3dm_bruteforce(const ThreeDMInstance& tdm) {
	tdm.validate();
	const std::size_t n = tdm.n();
	if (n > 6) throw LimitExceeded("brute-force 3DM limited to n <= 6");

	std::vector<std::size_t> pb(n), pc(n);
	std::iota(pb.begin(), pb.end(), 0);
	do {
		std::iota(pc.begin(), pc.end(), 0);
		do {
			bool ok = true;
			for (std::size_t i = 0; i < n && ok; ++i) ok = tdm.a[i] + tdm.b[pb[i]] + tdm.c[pc[i]] == tdm.D;
			if (ok) {
				Matching m;
				for (std::size_t i = 0; i < n; ++i) m.push_back({i, pb[i], pc[i]});
				return m;
			}
		} while (std::next_permutation(pc.begin(), pc.end()));
	} while (std::next_permutation(pb.begin(), pb.end()));
	return std::nullopt;
}

} // namespace tsched

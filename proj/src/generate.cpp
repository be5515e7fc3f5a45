#include "tsched/generate.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsched {

GeneratorKind generator_kind_from_string(const std::string& name) {
	if (name == "random") return GeneratorKind::Random;
	if (name == "ratio-bounded") return GeneratorKind::RatioBounded;
	if (name == "reduction") return GeneratorKind::Reduction;
	if (name == "fixture") return GeneratorKind::Fixture;
	throw std::invalid_argument("unknown generator kind '" + name + "'");
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
	if (lo > hi) throw std::invalid_argument("empty range");
	const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
	if (range == 0) return static_cast<std::int64_t>(rng());
	const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % range;
	std::uint64_t draw;
	do {
		draw = rng();
	} while (draw >= limit);
	return lo + static_cast<std::int64_t>(draw % range);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
	// splitmix64 finalizer
	std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}

std::vector<std::string> fixture_names() {
	return {"four-jobs", "greedy-gap-9", "weak-lower-bound"};
}

Instance fixture(const std::string& name) {
	if (name == "four-jobs") return Instance({6, 5, 4, 3});
	if (name == "greedy-gap-9") return Instance({20, 20, 10, 5, 5, 4, 4, 4, 4});
	if (name == "weak-lower-bound") return Instance({1000, 1});
	throw std::invalid_argument("unknown fixture '" + name + "'");
}

Instance generate(const GeneratorSpec& spec) {
	switch (spec.kind) {
	case GeneratorKind::Fixture: return fixture(spec.fixture);
	case GeneratorKind::Reduction:
		if (!spec.tdm) throw std::invalid_argument("reduction generator needs a 3DM instance");
		return encode(*spec.tdm, spec.M).instance;
	default: break;
	}

	if (spec.n == 0) throw std::invalid_argument("n must be positive");
	if (spec.max_size < 1) throw std::invalid_argument("max size must be positive");
	std::mt19937_64 rng(spec.seed);
	std::vector<Size> sizes;
	sizes.reserve(spec.n);

	if (spec.kind == GeneratorKind::Random) {
		for (std::size_t i = 0; i < spec.n; ++i) sizes.push_back(uniform_int(rng, 1, spec.max_size));
		return Instance(std::move(sizes));
	}

	if (spec.ratio_bound < 1) throw std::invalid_argument("ratio bound must be at least 1");
	sizes.push_back(uniform_int(rng, 1, spec.max_size));
	for (std::size_t i = 2; i <= spec.n; ++i) {
		const Size parent = sizes[(i + 1) / 2 - 1];
		const Size lo = (Rational(parent) / spec.ratio_bound).ceil();
		// Capping at the previous size keeps the draw order sorted, so the
		// ratio is checked against the same parent after sorting.
		const Size hi = sizes.back();
		sizes.push_back(uniform_int(rng, lo, hi));
	}
	return Instance(std::move(sizes));
}

} // namespace tsched

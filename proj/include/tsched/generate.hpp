#ifndef TSCHED_GENERATE_HPP
#define TSCHED_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tsched/core.hpp"
#include "tsched/hardness.hpp"

namespace tsched {

enum class GeneratorKind { Random, RatioBounded, Reduction, Fixture };

GeneratorKind generator_kind_from_string(const std::string& name);

struct GeneratorSpec {
	GeneratorKind kind = GeneratorKind::Random;
	std::size_t n = 8;
	std::uint64_t seed = 0;
	Size max_size = 50;
	/// Upper limit on the binary tree ratio for RatioBounded; must be >= 1.
	Rational ratio_bound = 2;
	/// Fixture name for Fixture.
	std::string fixture;
	/// Source instance and M for Reduction.
	std::optional<ThreeDMInstance> tdm;
	std::int64_t M = 0;
};

/// Same spec, same instance, on every platform.
Instance generate(const GeneratorSpec& spec);

/// Names accepted by GeneratorSpec::fixture.
std::vector<std::string> fixture_names();
Instance fixture(const std::string& name);

/// Uniform integer in [lo, hi] by rejection sampling on the raw engine
/// output, so results do not depend on the standard library.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Decorrelated per-item seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace tsched

#endif

#pragma once

#include "egz/instance_io.hpp"
#include "egz/modmath.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace egz {

enum class Distribution : std::uint8_t { Uniform, AdversarialFewResidues, SingleResidueHeavy };

std::optional<Distribution> parse_distribution(std::string_view name);
const char* to_string(Distribution d);

/// Deterministic for a fixed (n, seed, dist) on every platform.
///   uniform: values uniform on [-2^40, 2^40]
///   adversarial-few-residues: at most three residue classes mod n
///   single-residue-heavy: at least n values share one residue class
Instance generate_instance(std::uint64_t n, std::uint64_t seed, Distribution dist);

/// p - 1 nonzero differences mod p with the same three shapes, for
/// benchmarking the target solver directly.
std::vector<Residue> generate_differences(std::uint64_t p, std::uint64_t seed, Distribution dist);

}  // namespace egz

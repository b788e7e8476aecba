#pragma once

// Brute-force references. Deliberately independent of the solver code: no
// shared arithmetic beyond what is written here.

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace egz::oracle {

/// Subset of positions (0-based, ascending) whose values sum to tau mod p, or
/// nullopt. Bitmask enumeration for up to 24 values, DP with parent pointers beyond.
std::optional<std::vector<std::uint32_t>> brute_subset_sum(std::uint64_t p,
                                                           std::span<const std::uint64_t> d,
                                                           std::uint64_t tau);

/// Exhaustive 2^len enumeration; len <= 24.
std::optional<std::vector<std::uint32_t>> bitmask_subset_sum(std::uint64_t p,
                                                             std::span<const std::uint64_t> d,
                                                             std::uint64_t tau);

/// O(len * p) reachability DP with parent pointers.
std::optional<std::vector<std::uint32_t>> dp_subset_sum(std::uint64_t p,
                                                        std::span<const std::uint64_t> d,
                                                        std::uint64_t tau);

/// n positions whose values sum to 0 mod n, via DP over (position, count,
/// residue). Intended for n <= 12.
std::optional<std::vector<std::uint32_t>> brute_egz(std::uint64_t n,
                                                    std::span<const std::int64_t> values);

/// Exact sumset AP(v1, l1) + ... in Z_p, where AP(v, l) = {0, v, ..., l*v}.
std::set<std::uint64_t> brute_sumset(std::uint64_t p,
                                     std::span<const std::pair<std::uint64_t, std::uint64_t>> aps);

}  // namespace egz::oracle

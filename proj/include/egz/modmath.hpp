#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace egz {

/// Canonical representative of a residue class, always in [0, modulus).
using Residue = std::uint64_t;

/// Canonical representative of `a` modulo `n`, in [0, n). Throws InputError when n = 0.
Residue mod_reduce(std::int64_t a, std::uint64_t n);

inline Residue add_mod(Residue a, Residue b, std::uint64_t m) {
  const Residue s = a + b;  // a, b < m <= 2^63
  return s >= m ? s - m : s;
}

inline Residue sub_mod(Residue a, Residue b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

inline Residue mul_mod(Residue a, Residue b, std::uint64_t m) {
  return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % m);
}

struct ExtGcd {
  std::int64_t g;
  std::int64_t s;
  std::int64_t t;
};

/// Bezout triple: g = gcd(a, b) = s*a + t*b. Both arguments must be positive.
ExtGcd ext_gcd(std::int64_t a, std::int64_t b);

/// Inverse of `a` modulo `m`. Throws NotInvertible when gcd(a, m) != 1.
Residue mod_inverse(Residue a, std::uint64_t m);

/// Smallest-prime-factor table over [0, limit], built with a linear sieve.
class SpfTable {
 public:
  SpfTable() = default;
  explicit SpfTable(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  bool empty() const { return spf_.empty(); }

  /// Smallest prime factor of k, for 2 <= k <= limit.
  std::uint32_t spf(std::uint32_t k) const;
  bool is_prime(std::uint32_t k) const { return k >= 2 && spf(k) == k; }

 private:
  std::uint32_t limit_ = 0;
  std::vector<std::uint32_t> spf_;
};

/// Returns an empty table when limit < 2.
SpfTable build_spf(std::uint32_t limit);

/// Deterministic trial-division primality test, O(sqrt(n)).
bool is_prime_trial(std::uint64_t n);

/// Stable counting sort of positions by residue value.
struct ResidueOrder {
  std::vector<std::uint32_t> order;   // positions, nondecreasing residue
  std::vector<std::uint32_t> counts;  // counts[r] = multiplicity of r
};

ResidueOrder counting_sort_by_residue(std::span<const Residue> values, std::uint64_t p);

/// Buffer-reusing form; `out` keeps its capacity across calls.
void counting_sort_by_residue(std::span<const Residue> values, std::uint64_t p, ResidueOrder& out);

}  // namespace egz

#pragma once

#include "egz/prime_egz.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace egz {

/// Largest supported n: 2n - 1 positions must fit in 32 bits and block sums
/// of p residues below n must fit in 64 bits.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

struct EgzStats {
  std::uint64_t levels = 0;          // composite reduction levels
  std::uint64_t prime_calls = 0;     // prime zero-sum solves, including the last level
  std::uint64_t pool_operations = 0; // pushes + pops on the element pool
  std::uint64_t elements = 0;        // level sizes 2m - 1 summed over all moduli m visited
};

/// Zero-sum selection for any n >= 1: from 2n - 1 integers picks n whose sum
/// is divisible by n, in O(n) time and space.
///
/// Composite n = p*q (p its smallest prime factor) is reduced by cutting 2q - 1
/// blocks of p elements out of a LIFO pool, each block chosen by the prime
/// solver, and recursing on the block sums divided by p modulo q.
class EgzSolver {
 public:
  explicit EgzSolver(PrimeTargetOptions options = {}) : prime_(options) {}

  Certificate solve(std::uint64_t n, std::span<const std::int64_t> values);

  const InstrumentationCounters& counters() const { return prime_.counters(); }
  const EgzStats& stats() const { return stats_; }

 private:
  PrimeEgzSolver prime_;
  EgzStats stats_;
};

Certificate solve_egz(std::uint64_t n, std::span<const std::int64_t> values,
                      PrimeTargetOptions options = {});

enum class VerifyError : std::uint8_t { None, SizeMismatch, IndexOutOfRange, DuplicateIndex, SumMismatch };

const char* to_string(VerifyError e);

struct VerifyResult {
  VerifyError reason = VerifyError::None;

  bool ok() const { return reason == VerifyError::None; }
  explicit operator bool() const { return ok(); }
};

/// Checks |indices| = n, distinct in-range indices, and sum of the selected
/// values = 0 (mod n), accumulating modulo n so no overflow occurs.
VerifyResult verify_certificate(std::uint64_t n, std::span<const std::int64_t> values,
                                const Certificate& cert);

}  // namespace egz

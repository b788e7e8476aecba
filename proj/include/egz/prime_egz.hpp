#pragma once

#include "egz/modmath.hpp"
#include "egz/prime_target.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace egz {

/// A zero-sum witness: `modulus` distinct 0-based positions, ascending, whose
/// values sum to 0 modulo `modulus`.
struct Certificate {
  std::vector<std::uint32_t> indices;
  std::uint64_t modulus = 0;
};

/// Zero-sum selection for a prime modulus: from 2p - 1 values picks p whose
/// sum is divisible by p. Either some residue occurs p times, or the residue-sorted
/// sequence yields p - 1 nonzero differences handed to the target solver.
class PrimeEgzSolver {
 public:
  explicit PrimeEgzSolver(PrimeTargetOptions options = {}) : target_(options) {}

  /// `values` are reduced modulo p internally; returned indices are positions in `values`.
  Certificate solve(std::uint64_t p, std::span<const std::uint64_t> values);

  bool last_used_fast_path() const { return fast_path_; }
  /// Counters accumulated over every target solve since construction or reset.
  const InstrumentationCounters& counters() const { return total_; }
  void reset_counters() { total_ = {}; }

 private:
  PrimeTargetSolver target_;
  ResidueOrder sorted_;
  std::vector<Residue> residues_;
  std::vector<Residue> diffs_;
  std::uint64_t known_prime_ = 0;
  bool fast_path_ = false;
  InstrumentationCounters total_;
};

Certificate solve_prime_egz(std::uint64_t p, std::span<const std::uint64_t> values,
                            PrimeTargetOptions options = {});

}  // namespace egz

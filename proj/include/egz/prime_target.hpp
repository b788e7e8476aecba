#pragma once

#include "egz/modmath.hpp"
#include "egz/state.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace egz {

struct PrimeTargetOptions {
  /// Run the O(p) state audit after every transition.
  bool audit = false;
};

/// Subset J of the differences, as ascending 0-based positions.
struct TargetSolution {
  std::vector<std::uint32_t> indices;
};

enum class StepOutcome : std::uint8_t { Progress, Stop };

struct CoefficientChoice {
  ComponentId comp;
  std::uint64_t t;
};

/// Target subset sum over Z_p: given p - 1 nonzero residues d and a target tau,
/// finds J with sum_{j in J} d_j = tau in O(p) time.
///
/// The solver keeps its buffers between calls, so one instance can serve many
/// solves. The step functions are public for tests that drive the algorithm
/// transition by transition; `solve` is the normal entry point.
class PrimeTargetSolver {
 public:
  explicit PrimeTargetSolver(PrimeTargetOptions options = {}) : options_(options) {}

  TargetSolution solve(std::uint64_t p, std::span<const Residue> d, Residue tau);

  /// Resets the state for modulus p. Does not validate primality.
  void start(std::uint64_t p);
  /// Adds the factor {0, d_k}; k is the 0-based position of the difference.
  StepOutcome insert_difference(std::uint32_t k, Residue dk);
  /// Scans and merges the temporary c until it commits or becomes full.
  StepOutcome run_merge_loop(ComponentId c);
  bool stopped() const { return stopped_; }
  ComponentId full_component() const { return full_; }
  /// Coefficient for every counted component so the chosen residues sum to tau - X.
  std::vector<CoefficientChoice> extract_target(Residue tau);
  /// Expands the choices into input positions.
  TargetSolution reconstruct(std::span<const CoefficientChoice> choices);

  SolverState& state() { return state_; }
  const SolverState& state() const { return state_; }
  const InstrumentationCounters& counters() const { return state_.counters(); }

 private:
  void checkpoint(bool final_update = false);
  StepOutcome finish_if_covered();

  PrimeTargetOptions options_;
  SolverState state_;
  bool stopped_ = false;
  ComponentId full_ = kNoComponent;
  std::uint64_t last_length_ = 0;
  std::vector<CoefficientQuery> expand_stack_;
};

TargetSolution solve_prime_target(std::uint64_t p, std::span<const Residue> d, Residue tau,
                                  PrimeTargetOptions options = {});

}  // namespace egz

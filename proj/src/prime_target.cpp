#include "egz/prime_target.hpp"

#include "egz/errors.hpp"
#include "egz/frobenius.hpp"

#include <algorithm>
#include <string>

namespace egz {

void PrimeTargetSolver::start(std::uint64_t p) {
  state_.reset(p);
  state_.forest().reserve(2 * (p - 1));
  stopped_ = false;
  full_ = kNoComponent;
  last_length_ = 0;
}

void PrimeTargetSolver::checkpoint(bool final_update) {
  if (!options_.audit) return;
  const std::uint64_t lambda = state_.total_length();
  // Truncation to p - 1 may shorten the final update; growth is checked on the
  // untruncated length there instead.
  if (!final_update && lambda < last_length_) {
    throw InvariantViolation("Lambda decreased from " + std::to_string(last_length_) + " to " +
                             std::to_string(lambda));
  }
  last_length_ = lambda;
  if (AuditReport report = state_.audit_disjointness(); !report) {
    throw InvariantViolation("audit failed: " + report.message);
  }
}

StepOutcome PrimeTargetSolver::finish_if_covered() {
  if (state_.total_length() == state_.p() - 1) {
    stopped_ = true;
    return StepOutcome::Stop;
  }
  return StepOutcome::Progress;
}

StepOutcome PrimeTargetSolver::insert_difference(std::uint32_t k, Residue dk) {
  const std::uint64_t p = state_.p();
  if (stopped_) throw InvariantViolation("insertion after the solver stopped");
  if (dk == 0 || dk >= p) throw InputError("difference must be a nonzero residue");
  InstrumentationCounters& ctr = state_.counters();
  ReconForest& forest = state_.forest();
  ++ctr.insertions;

  const ComponentId c = state_.active_with_direction(dk);
  if (c == kNoComponent) {
    const NodeId leaf = forest.add_leaf(k);
    ++ctr.recon_nodes;
    const ComponentId temp = state_.create_temporary(dk, 1, 0, leaf);
    return run_merge_loop(temp);
  }

  // In-place extension: AP(d, ell) + {0, d} = AP(d, ell + 1).
  ++ctr.extensions;
  const Component comp = state_.component(c);
  const std::uint64_t t = comp.ell + 1;
  const Residue r = (t % p) * dk % p;
  ++ctr.cells_scanned;
  const OwnerCell cell = state_.read_owner(r);
  const NodeId ext = forest.add_extend(comp.recon, comp.ell, k);
  ++ctr.recon_nodes;
  if (cell.empty()) {
    state_.install_cell(r, c, t);
    state_.reshape(c, dk, t, comp.xi, ext);
    checkpoint();
    return finish_if_covered();
  }
  state_.detach_active(c, /*keep_cells=*/true);
  state_.reshape(c, dk, t, comp.xi, ext);
  return run_merge_loop(c);
}

StepOutcome PrimeTargetSolver::run_merge_loop(ComponentId c) {
  const std::uint64_t p = state_.p();
  InstrumentationCounters& ctr = state_.counters();
  ReconForest& forest = state_.forest();
  if (state_.component(c).status != ComponentStatus::Temporary) {
    throw InvariantViolation("merge loop entered with a non-temporary component");
  }

  state_.discard_pending();
  std::uint64_t resume = state_.component(c).held + 1;
  for (;;) {
    checkpoint();
    const auto hit = state_.scan_from(c, resume);
    if (!hit) {
      state_.commit_temporary(c);
      checkpoint();
      return finish_if_covered();
    }

    const auto [x, collision] = *hit;
    const ComponentId d = collision.comp;
    const Component temp = state_.component(c);
    const Component active = state_.component(d);
    if (active.status != ComponentStatus::Active) {
      throw InvariantViolation("collision with component " + std::to_string(d) + " in state " +
                               to_string(active.status));
    }
    const MergePlan plan =
        make_merge_plan(temp.v, temp.ell, active.v, active.ell, x, collision.coef, p);
    if (plan.L < temp.ell + active.ell) throw InvariantViolation("merge shrank the family");
    ++ctr.merges;

    const NodeId node = forest.add_merge(temp.recon, active.recon, plan);
    ++ctr.recon_nodes;
    const Residue xi = add_mod(add_mod(temp.xi, active.xi, p), plan.offset_delta, p);

    ComponentId next = c;
    switch (plan.kind) {
      case MergeCase::XY1:
        // A same-direction temporary cannot hold cells: its cell v would be
        // the active component's first cell.
        if (temp.held != 0) throw InvariantViolation("same-direction temporary has held cells");
        state_.detach_active(d, /*keep_cells=*/true);
        state_.retire(c);
        next = d;
        break;
      case MergeCase::X1:
        // The active side already has direction g; its cells become the held prefix.
        state_.detach_active(d, /*keep_cells=*/true);
        state_.clear_prefix(c, temp.held);
        state_.retire(c);
        next = d;
        break;
      case MergeCase::Y1:
        // The temporary already has direction g and keeps its held prefix.
        // Removing d only empties cells, so the pending cells below x stay
        // valid and the scan resumes at x, the cell d just released.
        state_.detach_active(d, /*keep_cells=*/false);
        break;
      case MergeCase::General:
        state_.detach_active(d, /*keep_cells=*/false);
        state_.clear_prefix(c, temp.held);
        state_.set_held(c, 0);
        break;
    }
    state_.reshape(next, plan.g, plan.length, xi, node);
    state_.set_status(next, ComponentStatus::Temporary);
    c = next;
    if (plan.kind == MergeCase::Y1) {
      resume = x;
    } else {
      state_.discard_pending();
      resume = state_.component(c).held + 1;
    }

    if (plan.full(p)) {
      state_.install_full(c);
      full_ = c;
      stopped_ = true;
      checkpoint(/*final_update=*/true);
      return StepOutcome::Stop;
    }
  }
}

std::vector<CoefficientChoice> PrimeTargetSolver::extract_target(Residue tau) {
  const std::uint64_t p = state_.p();
  if (!stopped_) throw InvariantViolation("extraction before the solver stopped");
  if (tau >= p) throw InputError("target must be a residue");

  std::vector<CoefficientChoice> choices;
  for (ComponentId id = 0; id < state_.component_count(); ++id) {
    const ComponentStatus s = state_.component(id).status;
    if (s == ComponentStatus::Active || s == ComponentStatus::Full) choices.push_back({id, 0});
  }
  const Residue want = sub_mod(tau, state_.shift(), p);
  if (want == 0) return choices;

  ComponentId owner = kNoComponent;
  std::uint64_t t = 0;
  if (full_ != kNoComponent) {
    owner = full_;
    t = mul_mod(want, mod_inverse(state_.component(full_).v, p), p);
    if (options_.audit) {
      const OwnerCell cell = state_.read_owner(want);
      if (cell.comp != full_ || cell.coef != t) {
        throw InvariantViolation("full component owner cell disagrees with t = (tau - X) / g");
      }
    }
  } else {
    const OwnerCell cell = state_.read_owner(want);
    if (cell.empty()) {
      throw InvariantViolation("residue " + std::to_string(want) +
                               " uncovered in the final disjoint family");
    }
    owner = cell.comp;
    t = cell.coef;
  }
  for (CoefficientChoice& ch : choices) {
    if (ch.comp == owner) ch.t = t;
  }
  return choices;
}

TargetSolution PrimeTargetSolver::reconstruct(std::span<const CoefficientChoice> choices) {
  TargetSolution out;
  const ReconForest& forest = state_.forest();
  InstrumentationCounters& ctr = state_.counters();
  for (const CoefficientChoice& ch : choices) {
    const Component& comp = state_.component(ch.comp);
    if (ch.t > comp.ell) throw InvariantViolation("chosen coefficient exceeds component length");
    ctr.recon_visits += forest.expand(comp.recon, ch.t, out.indices, expand_stack_);
  }
  std::sort(out.indices.begin(), out.indices.end());
  if (std::adjacent_find(out.indices.begin(), out.indices.end()) != out.indices.end()) {
    throw InvariantViolation("reconstruction emitted an index twice");
  }
  return out;
}

TargetSolution PrimeTargetSolver::solve(std::uint64_t p, std::span<const Residue> d, Residue tau) {
  if (p < 2 || !is_prime_trial(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
  if (d.size() != p - 1) {
    throw InputError("expected " + std::to_string(p - 1) + " differences, got " +
                     std::to_string(d.size()));
  }
  if (tau >= p) throw InputError("target must be reduced modulo p");
  for (const Residue v : d) {
    if (v == 0 || v >= p) throw InputError("differences must be nonzero residues modulo p");
  }

  start(p);
  for (std::uint32_t k = 0; k < d.size() && !stopped_; ++k) insert_difference(k, d[k]);
  if (!stopped_) {
    throw InvariantViolation("all differences processed without covering Z_p^*");
  }
  const std::vector<CoefficientChoice> choices = extract_target(tau);
  return reconstruct(choices);
}

TargetSolution solve_prime_target(std::uint64_t p, std::span<const Residue> d, Residue tau,
                                  PrimeTargetOptions options) {
  PrimeTargetSolver solver(options);
  return solver.solve(p, d, tau);
}

}  // namespace egz

#include "egz/errors.hpp"
#include "egz/prime_target.hpp"
#include "egz/state.hpp"

#include <doctest.h>

using namespace egz;

namespace {

// Creates xi + AP(v, ell) as a temporary, scans it and commits it.
ComponentId install_active(SolverState& s, Residue v, std::uint64_t ell, NodeId recon = 0) {
  const ComponentId c = s.create_temporary(v, ell, 0, recon);
  s.discard_pending();
  REQUIRE_FALSE(s.scan_from(c, 1).has_value());
  s.commit_temporary(c);
  return c;
}

}  // namespace

TEST_CASE("scan_probe on a fresh state finds nothing") {
  SolverState s;
  s.reset(11);
  const ComponentId c = s.create_temporary(4, 3, 0, 0);
  for (std::uint64_t t = 1; t <= 3; ++t) CHECK_FALSE(s.scan_probe(c, t).has_value());
  CHECK(s.pending_size() == 3);
  CHECK(s.counters().cells_scanned == 3);
  CHECK(s.counters().owner_reads == 3);
  CHECK(s.counters().owner_writes == 0);
}

TEST_CASE("scan_probe reports the owner coefficient") {
  SolverState s;
  s.reset(7);
  const ComponentId a = install_active(s, 2, 3);  // residues 2, 4, 6
  CHECK(s.peek_owner(2).coef == 1);
  CHECK(s.peek_owner(6).coef == 3);
  const ComponentId probe = s.create_temporary(4, 1, 0, 0);
  const auto hit = s.scan_probe(probe, 1);  // residue 4
  REQUIRE(hit.has_value());
  CHECK(hit->comp == a);
  CHECK(hit->coef == 2);
}

TEST_CASE("commit installs only pending cells") {
  SolverState s;
  s.reset(13);
  install_active(s, 5, 1);
  CHECK(s.counters().owner_writes == 1);
  CHECK(s.active_with_direction(5) != kNoComponent);
  CHECK(s.audit_disjointness().ok);

  const ComponentId t = s.create_temporary(3, 2, 0, 0);
  CHECK_THROWS_AS(s.commit_temporary(t), InvariantViolation);  // not scanned yet
}

TEST_CASE("same-direction coalescence rewrites no held cell") {
  // p = 7: active AP(3, 2) from two insertions, then a fresh temporary AP(3, 1).
  PrimeTargetSolver solver({.audit = true});
  solver.start(7);
  REQUIRE(solver.insert_difference(0, 3) == StepOutcome::Progress);
  REQUIRE(solver.insert_difference(1, 3) == StepOutcome::Progress);
  SolverState& s = solver.state();
  CHECK(s.counters().owner_writes == 2);
  const ComponentId active = s.active_with_direction(3);
  REQUIRE(active != kNoComponent);
  CHECK(s.component(active).ell == 2);

  const auto before = s.counters();
  const NodeId leaf = s.forest().add_leaf(2);
  const ComponentId temp = s.create_temporary(3, 1, 0, leaf);
  REQUIRE(solver.run_merge_loop(temp) == StepOutcome::Progress);

  const auto& after = s.counters();
  CHECK(after.merges - before.merges == 1);
  CHECK(after.owner_clears == before.owner_clears);
  // One scan hits residue 3; after coalescing only coefficient 3 (residue 2) is new.
  CHECK(after.cells_scanned - before.cells_scanned == 2);
  CHECK(after.owner_writes - before.owner_writes == 1);
  const ComponentId merged = s.active_with_direction(3);
  CHECK(merged == active);
  CHECK(s.component(merged).ell == 3);
  CHECK(s.component(temp).status == ComponentStatus::Retired);
  CHECK(s.audit_disjointness().ok);
}

TEST_CASE("detach_active") {
  SolverState s;
  s.reset(11);
  const ComponentId a = install_active(s, 2, 4);
  const ComponentId b = install_active(s, 3, 1);
  const auto base = s.counters();

  s.detach_active(a, true);
  CHECK(s.counters().owner_writes == base.owner_writes);
  CHECK(s.counters().owner_clears == base.owner_clears);
  CHECK(s.active_with_direction(2) == kNoComponent);
  CHECK(s.component(a).status == ComponentStatus::Temporary);
  CHECK(s.component(a).held == 4);
  CHECK(s.peek_owner(8).comp == a);
  CHECK(s.audit_disjointness().ok);

  s.detach_active(b, false);
  CHECK(s.counters().owner_clears == base.owner_clears + 1);
  CHECK(s.peek_owner(3).empty());
  CHECK(s.component(b).status == ComponentStatus::Retired);
  CHECK(s.total_length() == 4);
  CHECK_THROWS_AS(s.detach_active(b, false), InvariantViolation);
}

TEST_CASE("audit detects overlaps and bookkeeping drift") {
  SolverState s;
  s.reset(7);
  CHECK(s.audit_disjointness().ok);

  install_active(s, 2, 1);
  const ComponentId rogue = s.create_temporary(2, 1, 0, 0);
  s.set_status(rogue, ComponentStatus::Active);  // claims residue 2 without owning it
  const AuditReport r = s.audit_disjointness();
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("residue 2") != std::string::npos);
}

TEST_CASE("counters flatten to a record") {
  InstrumentationCounters c;
  c.owner_reads = 3;
  c.cells_scanned = 4;
  c.owner_writes = 1;
  CHECK(c.touches() == 8);
  const auto rec = c.record();
  CHECK(rec.front().first == "owner_reads");
  CHECK(rec.front().second == 3);
  InstrumentationCounters d = c;
  d += c;
  CHECK(d.touches() == 16);
}

#include "egz/errors.hpp"
#include "egz/generate.hpp"
#include "egz/oracle.hpp"
#include "egz/prime_target.hpp"

#include <doctest.h>

#include <set>

using namespace egz;

namespace {

Residue subset_sum(const TargetSolution& sol, std::span<const Residue> d, std::uint64_t p) {
  Residue s = 0;
  for (const auto j : sol.indices) s = (s + d[j]) % p;
  return s;
}

void check_solution(std::uint64_t p, std::span<const Residue> d, Residue tau,
                    PrimeTargetSolver& solver) {
  const TargetSolution sol = solver.solve(p, d, tau);
  REQUIRE(subset_sum(sol, d, p) == tau);
  const std::set<std::uint32_t> uniq(sol.indices.begin(), sol.indices.end());
  REQUIRE(uniq.size() == sol.indices.size());
  for (const auto j : sol.indices) REQUIRE(j < d.size());
  const auto& c = solver.counters();
  REQUIRE(c.recon_nodes <= 2 * (p - 1));
  REQUIRE(c.recon_visits <= c.recon_nodes);
  REQUIRE(c.merges <= c.insertions);
}

}  // namespace

TEST_CASE("worked instances") {
  const std::vector<Residue> one{1};
  CHECK(solve_prime_target(2, one, 1).indices == std::vector<std::uint32_t>{0});
  CHECK(solve_prime_target(2, one, 0).indices.empty());

  const std::vector<Residue> ones{1, 1};
  CHECK(solve_prime_target(3, ones, 2).indices == std::vector<std::uint32_t>{0, 1});

  const std::vector<Residue> fours{4, 4, 4, 4};
  const TargetSolution s = solve_prime_target(5, fours, 3);
  CHECK(s.indices.size() == 2);

  const std::vector<Residue> both{1, 2};
  CHECK(solve_prime_target(3, both, 2).indices == std::vector<std::uint32_t>{1});
  CHECK(solve_prime_target(3, both, 0).indices.empty());
}

TEST_CASE("insert_difference transitions") {
  PrimeTargetSolver solver({.audit = true});

  solver.start(7);
  CHECK(solver.insert_difference(0, 3) == StepOutcome::Progress);
  CHECK(solver.state().total_length() == 1);
  CHECK(solver.state().active_with_direction(3) != kNoComponent);

  solver.start(3);
  CHECK(solver.insert_difference(0, 1) == StepOutcome::Progress);
  CHECK(solver.insert_difference(1, 1) == StepOutcome::Stop);
  CHECK(solver.state().total_length() == 2);
  CHECK(solver.counters().extensions == 1);
  CHECK_FALSE(solver.state().peek_owner(1).empty());
  CHECK_FALSE(solver.state().peek_owner(2).empty());
  CHECK_THROWS_AS(solver.insert_difference(2, 1), InvariantViolation);

  solver.start(5);
  solver.insert_difference(0, 1);
  CHECK(solver.insert_difference(1, 2) == StepOutcome::Progress);
  CHECK(solver.state().active_with_direction(1) != kNoComponent);
  CHECK(solver.state().active_with_direction(2) != kNoComponent);
  CHECK(solver.state().total_length() == 2);

  CHECK_THROWS_AS(solver.insert_difference(2, 0), InputError);
}

TEST_CASE("extension collision merges into a full component") {
  // p = 5, d = (1, 2, 2, 2): AP(1,1), AP(2,1), extend to AP(2,2); the third 2
  // hits residue 6 = 1, owned by AP(1,1): x = 3, y = 1, L = 3 + 1*3 = 6 >= 4.
  const std::vector<Residue> d{1, 2, 2, 2};
  PrimeTargetSolver solver({.audit = true});
  solver.start(5);
  for (std::uint32_t k = 0; k < d.size(); ++k) solver.insert_difference(k, d[k]);
  REQUIRE(solver.stopped());
  REQUIRE(solver.full_component() != kNoComponent);
  const Component& full = solver.state().component(solver.full_component());
  CHECK(full.v == 2);
  CHECK(full.ell == 4);
  CHECK(solver.counters().merges == 1);
  CHECK(solver.counters().extensions == 2);
  for (Residue tau = 0; tau < 5; ++tau) {
    PrimeTargetSolver fresh;
    check_solution(5, d, tau, fresh);
  }
}

TEST_CASE("a merge reaching p - 1 produces a full component") {
  // Active AP(1, 2) from d = 1, 1 and a temporary AP(2, 2) from d = 2, 2 in Z_5.
  const std::vector<Residue> d{1, 1, 2, 2};
  for (Residue tau = 0; tau < 5; ++tau) {
    PrimeTargetSolver solver({.audit = true});
    solver.start(5);
    solver.insert_difference(0, 1);
    solver.insert_difference(1, 1);
    SolverState& s = solver.state();
    NodeId node = s.forest().add_leaf(2);
    node = s.forest().add_extend(node, 1, 3);
    const ComponentId temp = s.create_temporary(2, 2, 0, node);
    // Residue 2 = 1*2 is AP(1,2)'s coefficient 2: x = 1, y = 2, L = 2 + 2*2 = 6.
    CHECK(solver.run_merge_loop(temp) == StepOutcome::Stop);
    REQUIRE(solver.full_component() != kNoComponent);
    CHECK(s.component(solver.full_component()).ell == 4);
    const auto choices = solver.extract_target(tau);
    const TargetSolution sol = solver.reconstruct(choices);
    CHECK(subset_sum(sol, d, 5) == tau);
  }
}

TEST_CASE("extraction picks the covering owner") {
  // p = 3, d = (1, 2): disjoint family covering {1, 2}; tau = 2 is the second difference.
  const std::vector<Residue> d{1, 2};
  PrimeTargetSolver solver;
  solver.start(3);
  solver.insert_difference(0, 1);
  solver.insert_difference(1, 2);
  REQUIRE(solver.stopped());
  CHECK(solver.full_component() == kNoComponent);
  const auto choices = solver.extract_target(2);
  CHECK(choices.size() == 2);
  CHECK(solver.reconstruct(choices).indices == std::vector<std::uint32_t>{1});
  CHECK_THROWS_AS(solver.extract_target(3), InputError);
}

TEST_CASE("invalid instances are rejected") {
  PrimeTargetSolver solver;
  const std::vector<Residue> ok{1, 2, 3, 4};
  CHECK_THROWS_AS(solver.solve(4, std::vector<Residue>{1, 2, 3}, 0), InputError);
  CHECK_THROWS_AS(solver.solve(5, std::vector<Residue>{1, 2, 3}, 0), InputError);
  CHECK_THROWS_AS(solver.solve(5, std::vector<Residue>{1, 0, 3, 4}, 0), InputError);
  CHECK_THROWS_AS(solver.solve(5, ok, 5), InputError);
  CHECK_NOTHROW(solver.solve(5, ok, 4));
}

TEST_CASE("exhaustive small primes with audits") {
  PrimeTargetSolver solver({.audit = true});
  for (const std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    std::vector<Residue> d(p - 1, 1);
    for (;;) {
      for (Residue tau = 0; tau < p; ++tau) check_solution(p, d, tau, solver);
      std::size_t i = 0;
      while (i < d.size() && d[i] == p - 1) d[i++] = 1;
      if (i == d.size()) break;
      ++d[i];
    }
  }
}

TEST_CASE("random instances agree with the oracle's existence claim") {
  PrimeTargetSolver solver({.audit = true});
  for (const std::uint64_t p : {11ULL, 13ULL, 17ULL, 23ULL}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto d = generate_differences(p, seed, static_cast<Distribution>(seed % 3));
      const Residue tau = seed % p;
      REQUIRE(oracle::brute_subset_sum(p, d, tau).has_value());
      check_solution(p, d, tau, solver);
    }
  }
}

TEST_CASE("larger primes, all distributions") {
  PrimeTargetSolver solver;
  for (const std::uint64_t p : {101ULL, 1009ULL, 10007ULL, 100003ULL}) {
    for (std::uint64_t seed = 0; seed < 9; ++seed) {
      const auto d = generate_differences(p, seed, static_cast<Distribution>(seed % 3));
      check_solution(p, d, (seed * 7919) % p, solver);
    }
  }
}

#include "egz/errors.hpp"
#include "egz/generate.hpp"
#include "egz/prime_target.hpp"
#include "egz/recon.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace egz;

namespace {

std::uint64_t sum_mod(const std::vector<std::uint32_t>& idx, std::span<const Residue> d,
                      std::uint64_t p) {
  std::uint64_t s = 0;
  for (const auto i : idx) s = (s + d[i]) % p;
  return s;
}

// Every live component, every coefficient: distinct indices, correct sum.
void check_all_components(const PrimeTargetSolver& solver, std::span<const Residue> d) {
  const SolverState& s = solver.state();
  const std::uint64_t p = s.p();
  for (ComponentId id = 0; id < s.component_count(); ++id) {
    const Component& c = s.component(id);
    if (c.status == ComponentStatus::Retired) continue;
    for (std::uint64_t t = 0; t <= c.ell; ++t) {
      std::vector<std::uint32_t> out;
      const std::size_t visited = s.forest().expand(c.recon, t, out);
      REQUIRE(visited <= s.forest().size());
      std::set<std::uint32_t> uniq(out.begin(), out.end());
      REQUIRE(uniq.size() == out.size());
      REQUIRE(sum_mod(out, d, p) == (c.xi + t % p * c.v) % p);
    }
  }
}

}  // namespace

TEST_CASE("leaf expansion") {
  ReconForest f;
  const NodeId leaf = f.add_leaf(4);
  std::vector<std::uint32_t> out;
  CHECK(f.expand(leaf, 0, out) == 1);
  CHECK(out.empty());
  f.expand(leaf, 1, out);
  CHECK(out == std::vector<std::uint32_t>{4});
  CHECK_THROWS_AS(f.expand(leaf, 2, out), InputError);
}

TEST_CASE("extension chain") {
  // d = (1, 1, 1) in Z_5.
  ReconForest f;
  NodeId n = f.add_leaf(0);
  n = f.add_extend(n, 1, 1);
  n = f.add_extend(n, 2, 2);
  CHECK(f.max_coefficient(n) == 3);
  std::vector<std::uint32_t> out;
  f.expand(n, 2, out);
  std::sort(out.begin(), out.end());
  CHECK(out == std::vector<std::uint32_t>{0, 1});
  out.clear();
  f.expand(n, 3, out);
  CHECK(out.size() == 3);
}

TEST_CASE("merge node at coefficient zero still expands its offset") {
  // AP(3, 3) from d = 3, 3, 3 and AP(2, 3) from d = 2, 2, 2 in Z_13; F = 2, g = 1.
  const std::vector<Residue> d{3, 3, 3, 2, 2, 2};
  ReconForest f;
  NodeId left = f.add_leaf(0);
  left = f.add_extend(left, 1, 1);
  left = f.add_extend(left, 2, 2);
  NodeId right = f.add_leaf(3);
  right = f.add_extend(right, 1, 4);
  right = f.add_extend(right, 2, 5);
  const MergePlan plan = make_merge_plan(3, 3, 2, 3, 2, 3, 13);
  const NodeId m = f.add_merge(left, right, plan);

  std::vector<std::uint32_t> out;
  f.expand(m, 0, out);
  CHECK_FALSE(out.empty());
  CHECK(sum_mod(out, d, 13) == plan.offset_delta);
  for (std::uint64_t t = 0; t <= plan.L; ++t) {
    out.clear();
    f.expand(m, t, out);
    CHECK(sum_mod(out, d, 13) == (plan.frob + t) * plan.g % 13);
  }
}

TEST_CASE("every reachable component reconstructs soundly") {
  for (const std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 31ULL, 101ULL, 199ULL}) {
    for (const Distribution dist : {Distribution::Uniform, Distribution::AdversarialFewResidues,
                                    Distribution::SingleResidueHeavy}) {
      for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const auto d = generate_differences(p, seed, dist);
        PrimeTargetSolver solver({.audit = true});
        solver.start(p);
        for (std::uint32_t k = 0; k < d.size() && !solver.stopped(); ++k) {
          solver.insert_difference(k, d[k]);
          check_all_components(solver, d);
        }
        REQUIRE(solver.stopped());
        const auto& c = solver.counters();
        CHECK(c.recon_nodes == solver.state().forest().size());
        CHECK(c.recon_nodes <= 2 * c.insertions);
        CHECK(c.merges <= c.insertions);
      }
    }
  }
}

#include "egz/errors.hpp"
#include "egz/prime_egz.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace egz;

namespace {

void check_cert(std::uint64_t p, std::span<const std::uint64_t> values, const Certificate& c) {
  REQUIRE(c.modulus == p);
  REQUIRE(c.indices.size() == p);
  const std::set<std::uint32_t> uniq(c.indices.begin(), c.indices.end());
  REQUIRE(uniq.size() == p);
  std::uint64_t s = 0;
  for (const auto i : c.indices) {
    REQUIRE(i < values.size());
    s = (s + values[i] % p) % p;
  }
  REQUIRE(s == 0);
}

}  // namespace

TEST_CASE("repeated residue block") {
  PrimeEgzSolver solver;
  const std::vector<std::uint64_t> fives(5, 5);
  const Certificate c = solver.solve(3, fives);
  CHECK(solver.last_used_fast_path());
  CHECK(c.indices == std::vector<std::uint32_t>{0, 1, 2});

  const std::vector<std::uint64_t> bits{0, 1, 0};
  const Certificate z = solver.solve(2, bits);
  CHECK(z.indices == std::vector<std::uint32_t>{0, 2});
}

TEST_CASE("difference route") {
  // Sorted residues (0,0,1,1,2); d = (1, 2), tau = -(0+0+1) = 2; J = {2nd}.
  PrimeEgzSolver solver;
  const std::vector<std::uint64_t> v{0, 1, 2, 0, 1};
  const Certificate c = solver.solve(3, v);
  CHECK_FALSE(solver.last_used_fast_path());
  CHECK(c.indices == std::vector<std::uint32_t>{0, 1, 2});
  check_cert(3, v, c);
}

TEST_CASE("wrong length or modulus") {
  PrimeEgzSolver solver;
  CHECK_THROWS_AS(solver.solve(3, std::vector<std::uint64_t>{1, 2, 3, 4}), InputError);
  CHECK_THROWS_AS(solver.solve(4, std::vector<std::uint64_t>(7, 1)), InputError);
}

TEST_CASE("random instances for many primes") {
  std::mt19937_64 rng(2024);
  PrimeEgzSolver solver;
  for (const std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 101ULL, 1009ULL}) {
    std::vector<std::uint64_t> v(2 * p - 1);
    for (int it = 0; it < 10000; ++it) {
      // Alternate full-range values with values drawn from a few classes.
      const std::uint64_t classes = it % 2 ? p : 1 + it % 3;
      const std::uint64_t shift = rng() % p;
      for (auto& x : v) x = (rng() % classes + shift) % p + p * (rng() % 1000);
      check_cert(p, v, solver.solve(p, v));
    }
  }
}

TEST_CASE("exhaustive residue multisets for p <= 5") {
  PrimeEgzSolver solver;
  for (const std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    const std::size_t len = 2 * p - 1;
    std::vector<std::uint64_t> v(len, 0);
    std::size_t instances = 0;
    for (;;) {
      // Valid certificates per brute force: every p-subset with zero sum.
      std::set<std::vector<std::uint32_t>> valid;
      for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
        if (static_cast<std::uint64_t>(__builtin_popcount(mask)) != p) continue;
        std::uint64_t s = 0;
        std::vector<std::uint32_t> idx;
        for (std::uint32_t i = 0; i < len; ++i) {
          if (mask >> i & 1) {
            s += v[i];
            idx.push_back(i);
          }
        }
        if (s % p == 0) valid.insert(idx);
      }
      const Certificate c = solver.solve(p, v);
      REQUIRE(valid.count(c.indices) == 1);
      ++instances;
      // Next nondecreasing sequence (multiset) over {0..p-1}.
      std::size_t i = len;
      while (i > 0 && v[i - 1] == p - 1) --i;
      if (i == 0) break;
      const std::uint64_t nv = v[i - 1] + 1;
      for (std::size_t k = i - 1; k < len; ++k) v[k] = nv;
    }
    CHECK(instances > 0);
  }
}

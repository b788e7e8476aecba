#include "egz/modmath.hpp"

#include "egz/errors.hpp"

#include <string>

namespace egz {

Residue mod_reduce(std::int64_t a, std::uint64_t n) {
  if (n == 0) throw InputError("modulus must be positive");
  if (a >= 0) return static_cast<std::uint64_t>(a) % n;
  // -(a+1) avoids overflow at INT64_MIN.
  const std::uint64_t neg = static_cast<std::uint64_t>(-(a + 1)) + 1;
  const std::uint64_t r = neg % n;
  return r == 0 ? 0 : n - r;
}

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return {old_r, old_s, old_t};
}

Residue mod_inverse(Residue a, std::uint64_t m) {
  if (m == 0) throw InputError("modulus must be positive");
  if (m == 1) return 0;
  a %= m;
  if (a == 0) throw NotInvertible("0 has no inverse modulo " + std::to_string(m));
  const ExtGcd e = ext_gcd(static_cast<std::int64_t>(a), static_cast<std::int64_t>(m));
  if (e.g != 1) {
    throw NotInvertible(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  return mod_reduce(e.s, m);
}

SpfTable::SpfTable(std::uint32_t limit) : limit_(limit) {
  if (limit < 2) {
    limit_ = 0;
    return;
  }
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    // Each composite is struck exactly once, by its smallest prime factor.
    for (const std::uint32_t q : primes) {
      const std::uint64_t c = q * i;
      if (q > spf_[i] || c > limit) break;
      spf_[c] = q;
    }
  }
}

std::uint32_t SpfTable::spf(std::uint32_t k) const {
  if (k < 2 || k > limit_) {
    throw InputError("spf query " + std::to_string(k) + " outside table range");
  }
  return spf_[k];
}

SpfTable build_spf(std::uint32_t limit) { return SpfTable(limit); }

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

void counting_sort_by_residue(std::span<const Residue> values, std::uint64_t p, ResidueOrder& out) {
  out.counts.assign(p, 0);
  for (const Residue v : values) {
    if (v >= p) throw InputError("residue out of range in counting sort");
    ++out.counts[v];
  }
  // Exclusive prefix sums give each bucket's first slot; reuse `order` as scratch.
  std::vector<std::uint32_t>& order = out.order;
  order.resize(values.size());
  thread_local std::vector<std::uint32_t> start;
  start.resize(p);
  std::uint32_t acc = 0;
  for (std::uint64_t r = 0; r < p; ++r) {
    start[r] = acc;
    acc += out.counts[r];
  }
  for (std::uint32_t i = 0; i < values.size(); ++i) order[start[values[i]]++] = i;
}

ResidueOrder counting_sort_by_residue(std::span<const Residue> values, std::uint64_t p) {
  ResidueOrder out;
  counting_sort_by_residue(values, p, out);
  return out;
}

}  // namespace egz

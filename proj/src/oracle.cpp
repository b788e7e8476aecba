#include "egz/oracle.hpp"

#include <stdexcept>

namespace egz::oracle {
namespace {

std::uint64_t reduce(std::int64_t a, std::uint64_t n) {
  const std::int64_t m = static_cast<std::int64_t>(n);
  const std::int64_t r = a % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

}  // namespace

std::optional<std::vector<std::uint32_t>> bitmask_subset_sum(std::uint64_t p,
                                                             std::span<const std::uint64_t> d,
                                                             std::uint64_t tau) {
  if (d.size() > 24) throw std::invalid_argument("bitmask oracle limited to 24 values");
  const std::uint64_t limit = std::uint64_t{1} << d.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (mask >> i & 1) s = (s + d[i]) % p;
    }
    if (s == tau % p) {
      std::vector<std::uint32_t> out;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (mask >> i & 1) out.push_back(static_cast<std::uint32_t>(i));
      }
      return out;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::uint32_t>> dp_subset_sum(std::uint64_t p,
                                                        std::span<const std::uint64_t> d,
                                                        std::uint64_t tau) {
  // reach[i][r]: residue r is a subset sum of the first i values.
  const std::size_t len = d.size();
  std::vector<std::vector<char>> reach(len + 1, std::vector<char>(p, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::uint64_t r = 0; r < p; ++r) {
      if (!reach[i][r]) continue;
      reach[i + 1][r] = 1;
      reach[i + 1][(r + d[i]) % p] = 1;
    }
  }
  std::uint64_t r = tau % p;
  if (!reach[len][r]) return std::nullopt;
  std::vector<std::uint32_t> out;
  for (std::size_t i = len; i-- > 0;) {
    if (reach[i][r]) continue;  // reachable without value i
    out.push_back(static_cast<std::uint32_t>(i));
    r = (r + p - d[i] % p) % p;
  }
  return std::vector<std::uint32_t>(out.rbegin(), out.rend());
}

std::optional<std::vector<std::uint32_t>> brute_subset_sum(std::uint64_t p,
                                                           std::span<const std::uint64_t> d,
                                                           std::uint64_t tau) {
  return d.size() <= 24 ? bitmask_subset_sum(p, d, tau) : dp_subset_sum(p, d, tau);
}

std::optional<std::vector<std::uint32_t>> brute_egz(std::uint64_t n,
                                                    std::span<const std::int64_t> values) {
  const std::size_t len = values.size();
  if (n == 0 || len < n) return std::nullopt;
  // reach[i][c][r]: some c of the first i values sum to r mod n.
  auto at = [&](std::size_t i, std::size_t c, std::uint64_t r) {
    return (i * (n + 1) + c) * n + r;
  };
  std::vector<char> reach((len + 1) * (n + 1) * n, 0);
  reach[at(0, 0, 0)] = 1;
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint64_t a = reduce(values[i], n);
    for (std::size_t c = 0; c <= n; ++c) {
      for (std::uint64_t r = 0; r < n; ++r) {
        if (!reach[at(i, c, r)]) continue;
        reach[at(i + 1, c, r)] = 1;
        if (c < n) reach[at(i + 1, c + 1, (r + a) % n)] = 1;
      }
    }
  }
  if (!reach[at(len, n, 0)]) return std::nullopt;
  std::vector<std::uint32_t> out;
  std::size_t c = n;
  std::uint64_t r = 0;
  for (std::size_t i = len; i-- > 0;) {
    if (reach[at(i, c, r)]) continue;
    const std::uint64_t a = reduce(values[i], n);
    out.push_back(static_cast<std::uint32_t>(i));
    --c;
    r = (r + n - a) % n;
  }
  return std::vector<std::uint32_t>(out.rbegin(), out.rend());
}

std::set<std::uint64_t> brute_sumset(std::uint64_t p,
                                     std::span<const std::pair<std::uint64_t, std::uint64_t>> aps) {
  std::set<std::uint64_t> acc{0};
  for (const auto& [v, len] : aps) {
    std::set<std::uint64_t> nxt;
    for (const std::uint64_t s : acc) {
      for (std::uint64_t t = 0; t <= len; ++t) nxt.insert((s + t % p * (v % p)) % p);
    }
    acc.swap(nxt);
  }
  return acc;
}

}  // namespace egz::oracle

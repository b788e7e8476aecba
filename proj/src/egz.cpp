#include "egz/egz.hpp"

#include "egz/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace egz {

Certificate EgzSolver::solve(std::uint64_t n, std::span<const std::int64_t> values) {
  if (n < 1 || n > kMaxModulus) {
    throw InputError("modulus " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxModulus) + "]");
  }
  if (values.size() != 2 * n - 1) {
    throw InputError("expected " + std::to_string(2 * n - 1) + " values, got " +
                     std::to_string(values.size()));
  }
  stats_ = {};
  prime_.reset_counters();

  std::vector<std::uint64_t> current(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) current[i] = mod_reduce(values[i], n);

  const SpfTable spf = build_spf(static_cast<std::uint32_t>(n));
  // blocks[level] lists, block by block, the p member positions of that level.
  std::vector<std::vector<std::uint32_t>> blocks;
  std::vector<std::uint64_t> block_size;

  std::vector<std::uint32_t> pool;
  std::vector<std::uint32_t> drawn;
  std::vector<std::uint64_t> drawn_values;
  std::vector<char> chosen;
  std::vector<std::uint64_t> next;

  std::uint64_t modulus = n;
  while (modulus > 1 && !spf.is_prime(static_cast<std::uint32_t>(modulus))) {
    const std::uint64_t p = spf.spf(static_cast<std::uint32_t>(modulus));
    const std::uint64_t q = modulus / p;
    ++stats_.levels;
    stats_.elements += current.size();

    pool.resize(current.size());
    // Reversed so that pops hand out positions 0, 1, 2, ... first.
    std::iota(pool.rbegin(), pool.rend(), std::uint32_t{0});
    stats_.pool_operations += pool.size();

    std::vector<std::uint32_t>& level = blocks.emplace_back();
    level.reserve((2 * q - 1) * p);
    block_size.push_back(p);
    next.assign(2 * q - 1, 0);
    drawn.resize(2 * p - 1);
    drawn_values.resize(2 * p - 1);
    chosen.resize(2 * p - 1);

    for (std::uint64_t h = 0; h < 2 * q - 1; ++h) {
      for (std::uint64_t i = 0; i < 2 * p - 1; ++i) {
        drawn[i] = pool.back();
        pool.pop_back();
        drawn_values[i] = current[drawn[i]];
      }
      stats_.pool_operations += 2 * p - 1;

      const Certificate block = prime_.solve(p, drawn_values);
      ++stats_.prime_calls;
      std::fill(chosen.begin(), chosen.end(), 0);
      std::uint64_t sum = 0;
      for (const std::uint32_t k : block.indices) {
        chosen[k] = 1;
        level.push_back(drawn[k]);
        sum += drawn_values[k];
      }
      if (sum % p != 0) {
        throw InvariantViolation("block sum " + std::to_string(sum) + " not divisible by " +
                                 std::to_string(p));
      }
      next[h] = (sum / p) % q;

      for (std::uint64_t i = 2 * p - 1; i-- > 0;) {
        if (!chosen[i]) pool.push_back(drawn[i]);
      }
      stats_.pool_operations += p - 1;
    }
    if (pool.size() != p - 1) throw InvariantViolation("element pool size mismatch");

    current.swap(next);
    modulus = q;
  }

  stats_.elements += current.size();
  std::vector<std::uint32_t> selected;
  if (modulus == 1) {
    selected.push_back(0);
  } else {
    selected = prime_.solve(modulus, current).indices;
    ++stats_.prime_calls;
  }

  // Expand chosen block positions back to the original input positions.
  std::vector<std::uint32_t> expanded;
  for (std::size_t level = blocks.size(); level-- > 0;) {
    const std::uint64_t p = block_size[level];
    expanded.clear();
    expanded.reserve(selected.size() * p);
    for (const std::uint32_t h : selected) {
      const auto first = blocks[level].begin() + static_cast<std::ptrdiff_t>(h * p);
      expanded.insert(expanded.end(), first, first + static_cast<std::ptrdiff_t>(p));
    }
    selected.swap(expanded);
  }

  Certificate cert;
  cert.modulus = n;
  cert.indices = std::move(selected);
  std::sort(cert.indices.begin(), cert.indices.end());
  if (cert.indices.size() != n) throw InvariantViolation("certificate size mismatch");
  return cert;
}

Certificate solve_egz(std::uint64_t n, std::span<const std::int64_t> values,
                      PrimeTargetOptions options) {
  EgzSolver solver(options);
  return solver.solve(n, values);
}

const char* to_string(VerifyError e) {
  switch (e) {
    case VerifyError::None: return "ok";
    case VerifyError::SizeMismatch: return "size mismatch";
    case VerifyError::IndexOutOfRange: return "index out of range";
    case VerifyError::DuplicateIndex: return "duplicate index";
    case VerifyError::SumMismatch: return "sum mismatch";
  }
  return "?";
}

VerifyResult verify_certificate(std::uint64_t n, std::span<const std::int64_t> values,
                                const Certificate& cert) {
  if (n == 0 || cert.indices.size() != n) return {VerifyError::SizeMismatch};
  std::vector<char> seen(values.size(), 0);
  std::uint64_t sum = 0;
  for (const std::uint32_t i : cert.indices) {
    if (i >= values.size()) return {VerifyError::IndexOutOfRange};
    if (seen[i]) return {VerifyError::DuplicateIndex};
    seen[i] = 1;
    sum = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(sum) + mod_reduce(values[i], n)) % n);
  }
  if (sum != 0) return {VerifyError::SumMismatch};
  return {};
}

}  // namespace egz

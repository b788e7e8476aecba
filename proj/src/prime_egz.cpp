#include "egz/prime_egz.hpp"

#include "egz/errors.hpp"

#include <algorithm>
#include <string>

namespace egz {

Certificate PrimeEgzSolver::solve(std::uint64_t p, std::span<const std::uint64_t> values) {
  if (p != known_prime_) {
    if (!is_prime_trial(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
    known_prime_ = p;
  }
  if (values.size() != 2 * p - 1) {
    throw InputError("expected " + std::to_string(2 * p - 1) + " values, got " +
                     std::to_string(values.size()));
  }

  residues_.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) residues_[i] = values[i] % p;
  counting_sort_by_residue(residues_, p, sorted_);
  const std::vector<std::uint32_t>& b = sorted_.order;

  Certificate cert;
  cert.modulus = p;
  cert.indices.reserve(p);

  // A bucket of size >= p occupies p consecutive sorted slots starting at its offset.
  std::uint64_t offset = 0;
  for (std::uint64_t r = 0; r < p; ++r) {
    if (sorted_.counts[r] >= p) {
      fast_path_ = true;
      cert.indices.assign(b.begin() + offset, b.begin() + offset + p);
      std::sort(cert.indices.begin(), cert.indices.end());
      return cert;
    }
    offset += sorted_.counts[r];
  }
  fast_path_ = false;

  diffs_.resize(p - 1);
  for (std::uint64_t i = 0; i + 1 < p; ++i) {
    diffs_[i] = sub_mod(residues_[b[i + p]], residues_[b[i]], p);
    if (diffs_[i] == 0) throw InvariantViolation("zero difference without a repeated block");
  }
  Residue base = 0;
  for (std::uint64_t j = 0; j < p; ++j) base = add_mod(base, residues_[b[j]], p);
  const Residue tau = sub_mod(0, base, p);

  const TargetSolution swap = target_.solve(p, diffs_, tau);
  total_ += target_.counters();

  // Start from b_0..b_{p-1}, replacing b_i by b_{i+p} for every i in J.
  std::size_t next = 0;
  for (std::uint64_t i = 0; i < p; ++i) {
    if (next < swap.indices.size() && swap.indices[next] == i) {
      cert.indices.push_back(b[i + p]);
      ++next;
    } else {
      cert.indices.push_back(b[i]);
    }
  }
  std::sort(cert.indices.begin(), cert.indices.end());
  return cert;
}

Certificate solve_prime_egz(std::uint64_t p, std::span<const std::uint64_t> values,
                            PrimeTargetOptions options) {
  PrimeEgzSolver solver(options);
  return solver.solve(p, values);
}

}  // namespace egz

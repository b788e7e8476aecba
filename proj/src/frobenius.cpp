#include "egz/frobenius.hpp"

#include "egz/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace egz {

const char* to_string(MergeCase c) {
  switch (c) {
    case MergeCase::X1: return "X1";
    case MergeCase::Y1: return "Y1";
    case MergeCase::XY1: return "XY1";
    case MergeCase::General: return "GENERAL";
  }
  return "?";
}

MergePlan make_merge_plan(Residue v, std::uint64_t ell, Residue w, std::uint64_t m,
                          std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  if (v == 0 || w == 0 || v >= p || w >= p) {
    throw InvariantViolation("merge directions must be nonzero residues");
  }
  if (x < 1 || x > ell || y < 1 || y > m) {
    throw InvariantViolation("merge coefficients out of range: x=" + std::to_string(x) +
                             " ell=" + std::to_string(ell) + " y=" + std::to_string(y) +
                             " m=" + std::to_string(m));
  }
  if (std::gcd(x, y) != 1) {
    throw InvariantViolation("first collision has gcd(x, y) = " +
                             std::to_string(std::gcd(x, y)) + " for x=" + std::to_string(x) +
                             " y=" + std::to_string(y));
  }
  if (mul_mod(x % p, v, p) != mul_mod(y % p, w, p)) {
    throw InvariantViolation("collision equation x*v = y*w fails");
  }

  MergePlan plan;
  plan.x = x;
  plan.y = y;
  plan.ell = ell;
  plan.m = m;
  plan.g = mul_mod(v, mod_inverse(y % p, p), p);
  if (x == 1 && y == 1) {
    plan.kind = MergeCase::XY1;
    plan.L = ell + m;
  } else if (x == 1) {
    plan.kind = MergeCase::X1;
    plan.L = m + ell * y;
  } else if (y == 1) {
    plan.kind = MergeCase::Y1;
    plan.L = ell + m * x;
    plan.inv_y_mod_x = 1;
  } else {
    plan.kind = MergeCase::General;
    plan.frob = (x - 1) * (y - 1);
    plan.L = m * x + ell * y - 2 * plan.frob;
    plan.inv_y_mod_x = mod_inverse(y % x, x);
  }
  plan.length = std::min(plan.L, p - 1);
  plan.offset_delta = mul_mod(plan.frob % p, plan.g, p);
  return plan;
}

BoundedRep represent(const MergePlan& plan, std::uint64_t t) {
  if (t > plan.L) {
    throw InputError("coefficient " + std::to_string(t) + " exceeds merged length " +
                     std::to_string(plan.L));
  }
  const std::uint64_t x = plan.x, y = plan.y;
  BoundedRep rep;
  switch (plan.kind) {
    case MergeCase::XY1:
    case MergeCase::X1:
      rep.alpha = std::min(plan.ell, t / y);
      rep.beta = t - rep.alpha * y;
      break;
    case MergeCase::Y1:
      rep.beta = std::min(plan.m, t / x);
      rep.alpha = t - rep.beta * x;
      break;
    case MergeCase::General: {
      const std::uint64_t n = plan.frob + t;
      const std::uint64_t a0 = (n % x) * plan.inv_y_mod_x % x;
      // n >= a0*y: any smaller member of the class is at most a0*y - x < F.
      const std::uint64_t b0 = (n - a0 * y) / x;
      const std::uint64_t k = b0 <= plan.m ? 0 : (b0 - plan.m + y - 1) / y;
      rep.alpha = a0 + k * x;
      rep.beta = b0 - k * y;
      break;
    }
  }
  return rep;
}

}  // namespace egz

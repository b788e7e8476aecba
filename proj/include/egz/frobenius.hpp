#pragma once

#include "egz/modmath.hpp"

#include <cstdint>

namespace egz {

/// Which coefficient equals one at the collision. XY1 is the same-direction case.
enum class MergeCase : std::uint8_t { X1, Y1, XY1, General };

const char* to_string(MergeCase c);

/// Algebra of one collision x*v = y*w between a temporary progression AP(v, ell)
/// and an active progression AP(w, m).
///
/// The merged progression has direction g = v/y = w/x and covers
/// F*g + AP(g, L) inside AP(v, ell) + AP(w, m). `length` is L capped at p - 1;
/// coefficient conversion always works against the uncapped L.
struct MergePlan {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  Residue g = 0;
  std::uint64_t frob = 0;        // F = (x-1)(y-1) when x, y > 1, else 0
  std::uint64_t L = 0;           // untruncated merged length
  std::uint64_t length = 0;      // min(L, p - 1)
  std::uint64_t ell = 0;         // temporary length
  std::uint64_t m = 0;           // active length
  std::uint64_t inv_y_mod_x = 0; // y^-1 mod x, meaningful when x > 1
  Residue offset_delta = 0;      // F*g mod p, added to the two old offsets
  MergeCase kind = MergeCase::XY1;

  bool full(std::uint64_t p) const { return L >= p - 1; }
};

/// Coefficients with alpha*y + beta*x = F + t, 0 <= alpha <= ell, 0 <= beta <= m.
struct BoundedRep {
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
};

/// Builds the merge of AP(v, ell) (temporary, hit at coefficient x) with
/// AP(w, m) (active, owner coefficient y). Throws InvariantViolation when
/// gcd(x, y) != 1, x*v != y*w, or a coefficient is out of range.
MergePlan make_merge_plan(Residue v, std::uint64_t ell, Residue w, std::uint64_t m,
                          std::uint64_t x, std::uint64_t y, std::uint64_t p);

/// Converts a merged coefficient 0 <= t <= plan.L into bounded child
/// coefficients in O(1) word operations. Throws InputError when t > L.
BoundedRep represent(const MergePlan& plan, std::uint64_t t);

}  // namespace egz

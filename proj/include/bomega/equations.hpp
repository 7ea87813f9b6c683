#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bomega/brandt.hpp"
#include "bomega/family.hpp"

namespace bomega {

enum class Side { left, right };  // A·X = B or X·A = B

/// Solutions of an equation whose right-hand side is nonzero.
struct FiniteSolutions {
  std::vector<BrandtElem> solutions;  // sorted, duplicate-free
};

/// Right-hand side O: X solves the equation iff X = O or the index of X
/// that meets A differs from `index` (X's row for A·X, X's column for X·A).
/// When A = O every X is a solution and `index` is absent.
struct InfiniteZeroCase {
  Side side;
  std::optional<Nat> index;

  bool satisfies(const BrandtElem& x) const {
    if (!index || x.is_zero()) return true;
    return (side == Side::left ? x.row() : x.col()) != *index;
  }

  std::string describe() const {
    if (!index) return "infinite: every X";
    const char* coord = side == Side::left ? "row" : "col";
    return std::string("infinite: all X with ") + coord + " ≠ " + std::to_string(*index) + ", and X = O";
  }
};

using SolutionSet = std::variant<FiniteSolutions, InfiniteZeroCase>;

namespace detail {

inline SolutionSet solve(Side side, const BrandtElem& a, const BrandtElem& b, const AtomicFamily& f) {
  require_restricted(a, f);
  require_restricted(b, f);
  if (b.is_zero()) {
    if (a.is_zero()) return InfiniteZeroCase{side, std::nullopt};
    return InfiniteZeroCase{side, side == Side::left ? a.col() : a.row()};
  }
  FiniteSolutions out;
  if (a.is_zero() || b.val() > a.val()) return out;
  // A·X keeps A's row and X's column; X·A keeps X's row and A's column.
  const bool outer_match = side == Side::left ? a.row() == b.row() : a.col() == b.col();
  if (!outer_match) return out;
  const auto candidates = side == Side::left ? fiber(a.col(), b.col(), f) : fiber(b.row(), a.row(), f);
  for (const auto& x : candidates) {
    const auto p = side == Side::left ? brandt_multiply(a, x) : brandt_multiply(x, a);
    if (p == b) out.solutions.push_back(x);
  }
  return out;
}

}  // namespace detail

/// A·X = B in B_ω^↱(F_min). For B ≠ O the solutions lie in fiber(col A, col B).
inline SolutionSet solve_left(const BrandtElem& a, const BrandtElem& b, const AtomicFamily& f) {
  return detail::solve(Side::left, a, b, f);
}

/// X·A = B. For B ≠ O the solutions lie in fiber(row B, row A).
inline SolutionSet solve_right(const BrandtElem& a, const BrandtElem& b, const AtomicFamily& f) {
  return detail::solve(Side::right, a, b, f);
}

/// Every restricted X with row, col <= bound solving the equation, found by
/// scanning the whole bounded universe.
inline std::vector<BrandtElem> brute_force_solutions(const BrandtElem& a, const BrandtElem& b, Side side,
                                                     Nat bound, const AtomicFamily& f) {
  std::vector<BrandtElem> out;
  for (const auto& x : brandt_universe(f, bound).elements) {
    const auto p = side == Side::left ? brandt_multiply(a, x) : brandt_multiply(x, a);
    if (p == b) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Whether brute_force_solutions at `bound` is guaranteed complete: every
/// solution has its row and column among the coordinates of A and B.
inline bool brute_force_bound_sufficient(const BrandtElem& a, const BrandtElem& b, Nat bound) {
  Nat need = 0;
  for (const auto* e : {&a, &b})
    if (!e->is_zero()) need = std::max({need, e->row(), e->col()});
  return bound >= need;
}

}  // namespace bomega

#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bomega/errors.hpp"
#include "bomega/family.hpp"
#include "bomega/report.hpp"
#include "bomega/semigroup.hpp"
#include "bomega/universe.hpp"

namespace bomega {

/// Element of a Brandt extension B_λ(S): the zero O or a triple
/// (row, val, col) with row, col indices in λ and val in S.
template <class Index, class Value>
class BasicBrandtElem {
 public:
  struct Triple {
    Index row;
    Value val;
    Index col;
    friend auto operator<=>(const Triple&, const Triple&) = default;
  };

  BasicBrandtElem() = default;  // O
  BasicBrandtElem(Index row, Value val, Index col) : t_(Triple{row, val, col}) {}

  static BasicBrandtElem zero() { return {}; }

  bool is_zero() const { return !t_; }
  const Triple& triple() const { return *t_; }
  const Index& row() const { return t_->row; }
  const Value& val() const { return t_->val; }
  const Index& col() const { return t_->col; }

  friend auto operator<=>(const BasicBrandtElem&, const BasicBrandtElem&) = default;

 private:
  std::optional<Triple> t_;
};

/// (α,s,β)·(γ,t,δ) = (α, s∧t, δ) if β = γ, O otherwise; O absorbs.
/// `meet` is the semigroup operation of S.
template <class Index, class Value, class Meet>
BasicBrandtElem<Index, Value> brandt_product(const BasicBrandtElem<Index, Value>& a,
                                             const BasicBrandtElem<Index, Value>& b, Meet&& meet) {
  if (a.is_zero() || b.is_zero() || !(a.col() == b.row())) return {};
  return {a.row(), meet(a.val(), b.val()), b.col()};
}

/// The support of an atomic family under min.
class FMinSemilattice {
 public:
  explicit FMinSemilattice(SupportSet support) : support_(std::move(support)) {}

  const SupportSet& support() const { return support_; }
  bool contains(Nat x) const { return support_.contains(x); }
  Nat operator()(Nat x, Nat y) const { return std::min(x, y); }

 private:
  SupportSet support_;
};

struct MinMeet {
  Nat operator()(Nat x, Nat y) const { return std::min(x, y); }
};

/// λ = ω over F_min.
using BrandtElem = BasicBrandtElem<Nat, Nat>;

/// Text form: `O` or `(row;val;col)`.
inline std::string to_string(const BrandtElem& e) {
  if (e.is_zero()) return "O";
  return "(" + std::to_string(e.row()) + ";" + std::to_string(e.val()) + ";" +
         std::to_string(e.col()) + ")";
}

inline BrandtElem brandt_multiply(const BrandtElem& a, const BrandtElem& b) {
  return brandt_product(a, b, MinMeet{});
}

inline BrandtElem brandt_invert(const BrandtElem& e) {
  if (e.is_zero()) return e;
  return {e.col(), e.val(), e.row()};
}

/// Membership in B_ω^↱(F_min): O, or val in the support with
/// val <= row and val <= col.
inline bool in_restricted(const BrandtElem& e, const AtomicFamily& f) {
  return e.is_zero() || (f.contains(e.val()) && e.val() <= e.row() && e.val() <= e.col());
}

inline void require_restricted(const BrandtElem& e, const AtomicFamily& f) {
  if (!in_restricted(e, f)) throw InvalidElement(to_string(e) + " is not in the restricted subsemigroup");
}

/// All restricted elements with the given row and column, ordered by val.
inline std::vector<BrandtElem> fiber(Nat row, Nat col, const AtomicFamily& f) {
  std::vector<BrandtElem> out;
  for (Nat k : f.support().elements_upto(std::min(row, col))) out.emplace_back(row, k, col);
  return out;
}

inline std::size_t fiber_size(Nat row, Nat col, const AtomicFamily& f) {
  return f.support().count_upto(std::min(row, col));
}

/// (i, j, {k}) ↦ (i+k, k, j+k), 0 ↦ O.
inline BrandtElem embed(const BElem& x, const AtomicFamily& f) {
  require_valid(x, f);
  if (x.is_zero()) return BrandtElem::zero();
  return {x.i() + x.k(), x.k(), x.j() + x.k()};
}

inline BElem embed_inverse(const BrandtElem& e, const AtomicFamily& f) {
  if (!in_restricted(e, f)) throw NotInImage(to_string(e) + " is not in the image of the embedding");
  if (e.is_zero()) return BElem::zero();
  return {e.row() - e.val(), e.col() - e.val(), e.val()};
}

/// O and every restricted element with row, col <= bound.
inline BoundedUniverse<BrandtElem> brandt_universe(const AtomicFamily& f, Nat bound) {
  BoundedUniverse<BrandtElem> u{f, bound, {BrandtElem::zero()}};
  for (Nat r = 0; r <= bound; ++r)
    for (Nat c = 0; c <= bound; ++c)
      for (const auto& e : fiber(r, c, f)) u.elements.push_back(e);
  return u;
}

/// 1 + Σ_{row, col <= bound} |{k in support : k <= min(row, col)}|.
inline std::size_t brandt_universe_cardinality(const AtomicFamily& f, Nat bound) {
  std::size_t n = 1;
  for (Nat r = 0; r <= bound; ++r)
    for (Nat c = 0; c <= bound; ++c) n += fiber_size(r, c, f);
  return n;
}

/// embed(x·y) = embed(x)·embed(y) for all pairs of the BElem universe, and
/// embed is injective there with image inside the restricted set.
inline VerificationReport verify_embedding_homomorphism(const AtomicFamily& f, Nat bound) {
  VerificationReport r;
  const auto u = belem_universe(f, bound);
  std::set<BrandtElem> images;
  for (const auto& x : u.elements) {
    const auto ex = embed(x, f);
    if (!in_restricted(ex, f)) {
      r.fail({to_string(x)}, "image " + to_string(ex) + " is outside the restricted set");
      return r;
    }
    if (!images.insert(ex).second) {
      r.fail({to_string(x)}, "embedding is not injective");
      return r;
    }
  }
  for (const auto& x : u.elements) {
    const auto ex = embed(x, f);
    for (const auto& y : u.elements) {
      ++r.checked;
      const auto lhs = embed(detail::multiply_unchecked(x, y), f);
      const auto rhs = brandt_multiply(ex, embed(y, f));
      if (lhs != rhs) {
        r.fail({to_string(x), to_string(y)},
               "embed(x·y) = " + to_string(lhs) + " but embed(x)·embed(y) = " + to_string(rhs));
        return r;
      }
    }
  }
  r.note = "embedding is an injective homomorphism on " + std::to_string(u.elements.size()) + " elements";
  return r;
}

/// Products of restricted elements with row, col <= bound stay restricted.
inline VerificationReport verify_restricted_closed(const AtomicFamily& f, Nat bound) {
  VerificationReport r;
  const auto u = brandt_universe(f, bound);
  for (const auto& a : u.elements)
    for (const auto& b : u.elements) {
      ++r.checked;
      const auto p = brandt_multiply(a, b);
      if (!in_restricted(p, f)) {
        r.fail({to_string(a), to_string(b)}, "product " + to_string(p) + " leaves the restricted set");
        return r;
      }
    }
  r.note = "restricted set closed under products";
  return r;
}

}  // namespace bomega

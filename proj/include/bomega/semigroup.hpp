#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bomega/errors.hpp"
#include "bomega/family.hpp"

namespace bomega {

/// Element of B_ω^F: the zero or a triple (i, j, {k}).
class BElem {
 public:
  struct Triple {
    Nat i;
    Nat j;
    Nat k;
    friend auto operator<=>(const Triple&, const Triple&) = default;
  };

  BElem() = default;  // zero
  BElem(Nat i, Nat j, Nat k) : t_(Triple{i, j, k}) {}

  static BElem zero() { return {}; }

  bool is_zero() const { return !t_; }
  const Triple& triple() const { return *t_; }
  Nat i() const { return t_->i; }
  Nat j() const { return t_->j; }
  Nat k() const { return t_->k; }

  // Zero sorts before every triple; triples compare lexicographically.
  friend auto operator<=>(const BElem&, const BElem&) = default;

 private:
  std::optional<Triple> t_;
};

/// Text form: `0` or `(i,j,k)`.
inline std::string to_string(const BElem& x) {
  if (x.is_zero()) return "0";
  return "(" + std::to_string(x.i()) + "," + std::to_string(x.j()) + "," + std::to_string(x.k()) + ")";
}

inline void require_valid(const BElem& x, const AtomicFamily& f) {
  if (!x.is_zero() && !f.contains(x.k()))
    throw InvalidElement("element third component " + std::to_string(x.k()) +
                         " is not in the family support");
}

namespace detail {

// Product without membership checks. Nonzero iff j1 + k1 = i2 + k2; the
// surviving singleton is {k2} when j1 <= i2 and {k1} otherwise.
inline BElem multiply_unchecked(const BElem& a, const BElem& b) {
  if (a.is_zero() || b.is_zero()) return BElem::zero();
  if (a.j() + a.k() != b.i() + b.k()) return BElem::zero();
  if (a.j() <= b.i()) return {a.i() + (b.i() - a.j()), b.j(), b.k()};
  return {a.i(), b.j() + (a.j() - b.i()), a.k()};
}

}  // namespace detail

inline BElem multiply(const BElem& a, const BElem& b, const AtomicFamily& f) {
  require_valid(a, f);
  require_valid(b, f);
  return detail::multiply_unchecked(a, b);
}

inline BElem invert(const BElem& x) {
  if (x.is_zero()) return x;
  return {x.j(), x.i(), x.k()};
}

inline bool is_idempotent(const BElem& x) { return x.is_zero() || x.i() == x.j(); }

/// Natural partial order via equal coordinate differences:
/// k_y - k_x = i_x - i_y = j_x - j_y = p >= 0.
inline bool nat_leq(const BElem& x, const BElem& y) {
  if (x.is_zero()) return true;
  if (y.is_zero()) return false;
  const Int p = static_cast<Int>(y.k()) - static_cast<Int>(x.k());
  return p >= 0 && static_cast<Int>(x.i()) - static_cast<Int>(y.i()) == p &&
         static_cast<Int>(x.j()) - static_cast<Int>(y.j()) == p;
}

/// An idempotent e with x = y·e, found by exhaustive search over the
/// idempotents (m, m, {k'}) with m, k' <= max coordinate + max third component
/// of x and y, then the zero.
inline std::optional<BElem> definitional_order_witness(const BElem& x, const BElem& y,
                                                       const AtomicFamily& f) {
  require_valid(x, f);
  require_valid(y, f);
  Nat bound = 0;
  for (const BElem* e : {&x, &y})
    if (!e->is_zero()) bound = std::max({bound, e->i() + e->k(), e->j() + e->k()});
  for (Nat m = 0; m <= bound; ++m)
    for (Nat kk : f.support().elements_upto(bound)) {
      const BElem e(m, m, kk);
      if (detail::multiply_unchecked(y, e) == x) return e;
    }
  if (detail::multiply_unchecked(y, BElem::zero()) == x) return BElem::zero();
  return std::nullopt;
}

inline bool nat_leq_definitional(const BElem& x, const BElem& y, const AtomicFamily& f) {
  return definitional_order_witness(x, y, f).has_value();
}

/// Lower covers of x in the natural order.
inline std::vector<BElem> immediate_predecessors(const BElem& x, const AtomicFamily& f) {
  if (x.is_zero()) return {};
  require_valid(x, f);
  const auto below = f.support().predecessor(x.k());
  if (!below) return {BElem::zero()};
  const Nat p = x.k() - *below;
  return {BElem(x.i() + p, x.j() + p, *below)};
}

/// x, its immediate predecessor, that one's predecessor, ... ending in zero.
/// Length is index(k) + 2.
inline std::vector<BElem> maximal_chain_down(const BElem& x, const AtomicFamily& f) {
  if (x.is_zero()) throw InvalidElement("maximal_chain_down: element must be nonzero");
  std::vector<BElem> chain{x};
  while (!chain.back().is_zero()) chain.push_back(immediate_predecessors(chain.back(), f).front());
  return chain;
}

/// Support elements considered by the idempotent censuses: the whole support
/// when finite, otherwise everything up to tail + bound (a translation
/// invariant window).
inline std::vector<Nat> census_window(const AtomicFamily& f, Nat bound) {
  const auto& s = f.support();
  if (s.is_finite()) return s.explicit_elements();
  return s.elements_upto(*s.tail() + bound);
}

/// Chain length -> number of idempotents (i, i, {k}), i <= bound, whose
/// maximal descending chain has that length.
inline std::map<std::size_t, std::size_t> idempotent_chain_census(const AtomicFamily& f, Nat bound) {
  std::map<std::size_t, std::size_t> census;
  for (Nat i = 0; i <= bound; ++i)
    for (Nat k : census_window(f, bound)) ++census[maximal_chain_down(BElem(i, i, k), f).size()];
  return census;
}

/// An idempotent (i, i, {k}) has an upper cover in the band iff k has a
/// successor k' in the support with k' - k <= i.
inline bool is_maximal_idempotent(const BElem& e, const AtomicFamily& f) {
  if (e.is_zero()) return false;
  const auto next = f.support().successor(e.k());
  return !next || *next - e.k() > e.i();
}

/// Chain length -> number of maximal chains of idempotents whose top
/// (i, i, {k}) has i <= bound. Unlike idempotent_chain_census this separates
/// supports of equal cardinality, e.g. {0,1} and {0,2}.
inline std::map<std::size_t, std::size_t> maximal_chain_census(const AtomicFamily& f, Nat bound) {
  std::map<std::size_t, std::size_t> census;
  const auto ks = census_window(f, bound);
  for (Nat i = 0; i <= bound; ++i)
    for (std::size_t idx = 0; idx < ks.size(); ++idx)
      if (is_maximal_idempotent(BElem(i, i, ks[idx]), f)) ++census[idx + 2];
  return census;
}

/// Element of B_ω^F for a general ω-closed family: zero or (i, j, F) with F a
/// nonempty member.
class GeneralBElem {
 public:
  struct Triple {
    Nat i;
    Nat j;
    GeneralFamily::Member set;
    friend auto operator<=>(const Triple&, const Triple&) = default;
  };

  GeneralBElem() = default;
  GeneralBElem(Nat i, Nat j, GeneralFamily::Member set) : t_(Triple{i, j, std::move(set)}) {
    std::sort(t_->set.begin(), t_->set.end());
    t_->set.erase(std::unique(t_->set.begin(), t_->set.end()), t_->set.end());
  }

  static GeneralBElem zero() { return {}; }
  bool is_zero() const { return !t_; }
  const Triple& triple() const { return *t_; }

  friend auto operator<=>(const GeneralBElem&, const GeneralBElem&) = default;

 private:
  std::optional<Triple> t_;
};

/// The set-valued product
///   (i1-j1+i2, j2, (j1-i2+F1) ∩ F2)  if j1 <= i2
///   (i1, j1-i2+j2, F1 ∩ (i2-j1+F2))  if j1 >= i2
/// with an empty third component collapsed to zero when ∅ is a member.
inline GeneralBElem multiply_general(const GeneralBElem& a, const GeneralBElem& b,
                                     const GeneralFamily& f) {
  for (const auto* x : {&a, &b}) {
    if (x->is_zero()) {
      if (!f.contains_empty()) throw InvalidElement("zero requires ∅ in the family");
    } else if (x->triple().set.empty() || !f.contains(x->triple().set)) {
      throw InvalidElement("third component is not a nonempty member of the family");
    }
  }
  if (a.is_zero() || b.is_zero()) return GeneralBElem::zero();
  const auto& [i1, j1, f1] = a.triple();
  const auto& [i2, j2, f2] = b.triple();
  Nat i = 0, j = 0;
  GeneralFamily::Member s;
  if (j1 <= i2) {
    i = i1 - j1 + i2;
    j = j2;
    s = intersect_shifted(f2, f1, i2 - j1);
  } else {
    i = i1;
    j = j1 - i2 + j2;
    s = intersect_shifted(f1, f2, j1 - i2);
  }
  if (!f.contains(s)) throw InvalidElement("product component is not a member; family is not ω-closed");
  if (s.empty()) return GeneralBElem::zero();
  return GeneralBElem(i, j, std::move(s));
}

inline GeneralBElem to_general(const BElem& x) {
  if (x.is_zero()) return GeneralBElem::zero();
  return GeneralBElem(x.i(), x.j(), {x.k()});
}

}  // namespace bomega

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bomega/brandt.hpp"
#include "bomega/family.hpp"
#include "bomega/report.hpp"
#include "bomega/semigroup.hpp"
#include "bomega/topology.hpp"
#include "bomega/universe.hpp"

namespace bomega {

/// (a·b)·c = a·(b·c) for every triple drawn from `elems`, in order. Products
/// may leave the sample; they are compared exactly.
template <class Elem, class Mul>
VerificationReport check_associativity(const std::vector<Elem>& elems, Mul&& mul) {
  VerificationReport r;
  for (const auto& a : elems)
    for (const auto& b : elems) {
      const auto ab = mul(a, b);
      for (const auto& c : elems) {
        ++r.checked;
        const auto lhs = mul(ab, c);
        const auto rhs = mul(a, mul(b, c));
        if (!(lhs == rhs)) {
          r.fail({to_string(a), to_string(b), to_string(c)},
                 "(a·b)·c = " + to_string(lhs) + " but a·(b·c) = " + to_string(rhs));
          return r;
        }
      }
    }
  return r;
}

inline VerificationReport check_associativity(const BoundedUniverse<BElem>& u) {
  return check_associativity(u.elements, [](const BElem& a, const BElem& b) {
    return detail::multiply_unchecked(a, b);
  });
}

inline VerificationReport check_associativity(const BoundedUniverse<BrandtElem>& u) {
  return check_associativity(u.elements, [](const BrandtElem& a, const BrandtElem& b) {
    return brandt_multiply(a, b);
  });
}

/// x·x⁻¹·x = x, x⁻¹·x·x⁻¹ = x⁻¹, and idempotents commute pairwise.
template <class Elem, class Mul, class Inv, class IsIdem>
VerificationReport check_inverse_axioms(const std::vector<Elem>& elems, Mul&& mul, Inv&& inv,
                                        IsIdem&& is_idem) {
  VerificationReport r;
  std::vector<Elem> idempotents;
  for (const auto& x : elems) {
    const auto xi = inv(x);
    r.checked += 2;
    if (!(mul(mul(x, xi), x) == x)) {
      r.fail({to_string(x)}, "x·x⁻¹·x ≠ x");
      return r;
    }
    if (!(mul(mul(xi, x), xi) == xi)) {
      r.fail({to_string(x)}, "x⁻¹·x·x⁻¹ ≠ x⁻¹");
      return r;
    }
    if (is_idem(x)) idempotents.push_back(x);
  }
  for (const auto& e : idempotents)
    for (const auto& g : idempotents) {
      ++r.checked;
      if (!(mul(e, g) == mul(g, e))) {
        r.fail({to_string(e), to_string(g)}, "idempotents do not commute");
        return r;
      }
    }
  return r;
}

inline VerificationReport check_inverse_axioms(const BoundedUniverse<BElem>& u) {
  return check_inverse_axioms(
      u.elements, [](const BElem& a, const BElem& b) { return detail::multiply_unchecked(a, b); },
      [](const BElem& x) { return invert(x); }, [](const BElem& x) { return is_idempotent(x); });
}

inline VerificationReport check_inverse_axioms(const BoundedUniverse<BrandtElem>& u) {
  return check_inverse_axioms(
      u.elements, [](const BrandtElem& a, const BrandtElem& b) { return brandt_multiply(a, b); },
      [](const BrandtElem& x) { return brandt_invert(x); },
      [](const BrandtElem& x) { return is_brandt_idempotent(x); });
}

/// nat_leq agrees with the definitional order (witness search) on all pairs.
inline VerificationReport check_order_equivalence(const BoundedUniverse<BElem>& u) {
  VerificationReport r;
  for (const auto& x : u.elements)
    for (const auto& y : u.elements) {
      ++r.checked;
      const bool fast = nat_leq(x, y);
      if (fast != nat_leq_definitional(x, y, u.family)) {
        r.fail({to_string(x), to_string(y)},
               std::string("difference criterion says ") + (fast ? "true" : "false") +
                   ", witness search disagrees");
        return r;
      }
    }
  return r;
}

/// (i, j, {k}) ↦ (i, j, {k - n}).
inline BElem translate_element(const BElem& x, Int n) {
  if (x.is_zero()) return x;
  return {x.i(), x.j(), static_cast<Nat>(static_cast<Int>(x.k()) - n)};
}

/// For support(f1) = n + support(f2), the map (i, j, {k}) ↦ (i, j, {k - n})
/// lands in B_ω^{f2}, is injective, and is a homomorphism on the universe of f1.
inline VerificationReport check_isomorphism_transport(const AtomicFamily& f1, const AtomicFamily& f2, Nat bound) {
  const auto n = are_translate_equivalent(f1, f2);
  if (!n) throw NotTranslateEquivalent("families are not translates of each other");
  VerificationReport r;
  const auto u = belem_universe(f1, bound);
  std::set<BElem> images;
  for (const auto& x : u.elements) {
    const auto hx = translate_element(x, *n);
    if (!hx.is_zero() && !f2.contains(hx.k())) {
      r.fail({to_string(x)}, "image " + to_string(hx) + " is not an element of the target");
      return r;
    }
    if (translate_element(hx, -*n) != x || !images.insert(hx).second) {
      r.fail({to_string(x)}, "transport map is not injective");
      return r;
    }
  }
  for (const auto& x : u.elements)
    for (const auto& y : u.elements) {
      ++r.checked;
      const auto lhs = translate_element(detail::multiply_unchecked(x, y), *n);
      const auto rhs = multiply(translate_element(x, *n), translate_element(y, *n), f2);
      if (lhs != rhs) {
        r.fail({to_string(x), to_string(y)}, "h(x·y) = " + to_string(lhs) + " but h(x)·h(y) = " + to_string(rhs));
        return r;
      }
    }
  r.note = "n=" + std::to_string(*n);
  return r;
}

namespace detail {

inline std::optional<std::size_t> first_divergence(const std::map<std::size_t, std::size_t>& a,
                                                   const std::map<std::size_t, std::size_t>& b) {
  std::set<std::size_t> lengths;
  for (const auto& [len, _] : a) lengths.insert(len);
  for (const auto& [len, _] : b) lengths.insert(len);
  for (auto len : lengths) {
    const auto ia = a.find(len);
    const auto ib = b.find(len);
    if ((ia == a.end() ? 0 : ia->second) != (ib == b.end() ? 0 : ib->second)) return len;
  }
  return std::nullopt;
}

}  // namespace detail

/// Compares both idempotent censuses of f1 and f2 at the same bound (the
/// translation isomorphism fixes the i coordinate). Passes when the censuses
/// agree for translate-equivalent families, or diverge for inequivalent ones;
/// the note names the first divergent chain length.
inline VerificationReport check_chain_census_invariance(const AtomicFamily& f1, const AtomicFamily& f2, Nat bound) {
  VerificationReport r;
  const auto tally = detail::first_divergence(idempotent_chain_census(f1, bound), idempotent_chain_census(f2, bound));
  const auto maximal = detail::first_divergence(maximal_chain_census(f1, bound), maximal_chain_census(f2, bound));
  r.checked = 2;
  std::optional<std::size_t> diverge;
  std::string which;
  if (maximal) {
    diverge = maximal;
    which = "maximal-chain census";
  }
  if (tally && (!diverge || *tally < *diverge)) {
    diverge = tally;
    which = "idempotent census";
  }
  const bool equivalent = are_translate_equivalent(f1, f2).has_value();
  if (equivalent) {
    if (diverge)
      r.fail({std::to_string(*diverge)}, "translate-equivalent families differ in the " + which + " at length " +
                                             std::to_string(*diverge));
    else
      r.note = "censuses agree";
  } else {
    if (diverge)
      r.note = "censuses diverge at length " + std::to_string(*diverge) + " (" + which + ")";
    else
      r.fail({}, "families are not translates but censuses agree at bound " + std::to_string(bound));
  }
  return r;
}

/// For every nonzero element of the universe: the descending chain has
/// length index(k) + 2, adjacent links satisfy the order criterion, and no
/// universe element lies strictly between two adjacent links. The note also
/// reports how many adjacent links of the per-link shift form
/// (i + k_{m+1} - k_m, j + k_{m+1} - k_m, {k_m}) violate the criterion.
inline VerificationReport check_chain_structure(const AtomicFamily& f, Nat bound) {
  VerificationReport r;
  const auto u = belem_universe(f, bound);
  std::size_t per_link_pairs = 0;
  std::size_t per_link_bad = 0;
  for (const auto& x : u.elements) {
    if (x.is_zero()) continue;
    const auto chain = maximal_chain_down(x, f);
    ++r.checked;
    if (chain.size() != f.index_of(x.k()) + 2) {
      r.fail({to_string(x)}, "chain length " + std::to_string(chain.size()) + " ≠ index(k) + 2");
      return r;
    }
    for (std::size_t m = 0; m + 1 < chain.size(); ++m) {
      const auto& hi = chain[m];
      const auto& lo = chain[m + 1];
      ++r.checked;
      if (lo == hi || !nat_leq(lo, hi)) {
        r.fail({to_string(lo), to_string(hi)}, "adjacent links are not strictly ordered");
        return r;
      }
      for (const auto& z : u.elements) {
        if (z != lo && z != hi && nat_leq(lo, z) && nat_leq(z, hi)) {
          r.fail({to_string(lo), to_string(z), to_string(hi)}, "chain link is not a cover");
          return r;
        }
      }
    }
    // Per-link shift form of the chain under x.
    const std::size_t top = f.index_of(x.k());
    std::vector<BElem> links;
    for (std::size_t m = 0; m < top; ++m) {
      const Nat shift = f.kth(m + 1) - f.kth(m);
      links.emplace_back(x.i() + shift, x.j() + shift, f.kth(m));
    }
    links.push_back(x);
    for (std::size_t m = 0; m + 1 < links.size(); ++m) {
      ++per_link_pairs;
      if (!nat_leq(links[m], links[m + 1])) ++per_link_bad;
    }
  }
  r.note = "per-link shift form violates the order criterion on " + std::to_string(per_link_bad) + " of " +
           std::to_string(per_link_pairs) + " adjacent links; chains use cumulative shifts (i + k_top - k_m)";
  return r;
}

/// Associativity of the extension by an adjoined annihilator y on the Brandt
/// universe plus y, together with y·z = z·y = O for every z.
inline VerificationReport check_extended_associativity(const AtomicFamily& f, Nat bound) {
  std::vector<ExtendedElem> elems;
  for (const auto& e : brandt_universe(f, bound).elements) elems.emplace_back(e);
  elems.push_back(ExtendedElem::adjoined());
  for (const auto& z : elems) {
    const auto p = extended_multiply(ExtendedElem::adjoined(), z);
    const auto q = extended_multiply(z, ExtendedElem::adjoined());
    if (p.is_adjoined() || !p.inner().is_zero() || q.is_adjoined() || !q.inner().is_zero()) {
      VerificationReport r;
      r.fail({"Y", to_string(z)}, "product with the adjoined point is not O");
      return r;
    }
  }
  return check_associativity(elems, [](const ExtendedElem& a, const ExtendedElem& b) {
    return extended_multiply(a, b);
  });
}

struct NamedReport {
  std::string name;
  VerificationReport report;
};

/// The suite run by the `verify` command.
inline std::vector<NamedReport> run_verify_suite(const AtomicFamily& f, Nat bound) {
  const auto u = belem_universe(f, bound);
  return {
      {"associativity", check_associativity(u)},
      {"inverse-axioms", check_inverse_axioms(u)},
      {"order-equivalence", check_order_equivalence(u)},
      {"embedding-homomorphism", verify_embedding_homomorphism(f, bound)},
      {"restricted-closure", verify_restricted_closed(f, bound)},
  };
}

}  // namespace bomega

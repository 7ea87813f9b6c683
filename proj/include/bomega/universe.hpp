#pragma once

#include <vector>

#include "bomega/family.hpp"
#include "bomega/semigroup.hpp"

namespace bomega {

/// Every element of a given form whose index coordinates are <= bound, plus
/// the zero, in increasing order.
template <class Elem>
struct BoundedUniverse {
  AtomicFamily family;
  Nat bound;
  std::vector<Elem> elements;
};

/// Zero and all (i, j, {k}) with i, j, k <= bound.
inline BoundedUniverse<BElem> belem_universe(const AtomicFamily& f, Nat bound) {
  BoundedUniverse<BElem> u{f, bound, {BElem::zero()}};
  const auto ks = f.support().elements_upto(bound);
  for (Nat i = 0; i <= bound; ++i)
    for (Nat j = 0; j <= bound; ++j)
      for (Nat k : ks) u.elements.emplace_back(i, j, k);
  return u;
}

/// 1 + (bound+1)^2 · |support ∩ [0, bound]|.
inline std::size_t belem_universe_cardinality(const AtomicFamily& f, Nat bound) {
  const std::size_t side = bound + 1;
  return 1 + side * side * f.support().count_upto(bound);
}

}  // namespace bomega

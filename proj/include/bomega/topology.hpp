#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "bomega/brandt.hpp"
#include "bomega/errors.hpp"
#include "bomega/family.hpp"
#include "bomega/report.hpp"

namespace bomega {

using IndexPair = std::pair<Nat, Nat>;

/// Base set at O of the compact topology: everything except the fibers at
/// the excluded (row, col) pairs.
struct AcNbhd {
  std::vector<IndexPair> excluded;

  AcNbhd() = default;
  explicit AcNbhd(std::vector<IndexPair> pairs) : excluded(std::move(pairs)) {
    std::sort(excluded.begin(), excluded.end());
    excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
  }

  friend bool operator==(const AcNbhd&, const AcNbhd&) = default;
};

/// U_n(O) = {O} ∪ all fibers (i, j) with n <= i < j.
struct Tau1Nbhd {
  Nat n = 0;
  friend bool operator==(const Tau1Nbhd&, const Tau1Nbhd&) = default;
};

using Nbhd = std::variant<AcNbhd, Tau1Nbhd>;

inline bool ac_contains(const AcNbhd& u, const BrandtElem& e) {
  return e.is_zero() ||
         !std::binary_search(u.excluded.begin(), u.excluded.end(), IndexPair{e.row(), e.col()});
}

inline bool tau1_contains(const Tau1Nbhd& u, const BrandtElem& e) {
  return e.is_zero() || (u.n <= e.row() && e.row() < e.col());
}

inline bool nbhd_contains(const Nbhd& u, const BrandtElem& e) {
  return std::visit(
      [&](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, AcNbhd>)
          return ac_contains(v, e);
        else
          return tau1_contains(v, e);
      },
      u);
}

/// Number of nonzero elements outside u; always finite.
inline std::size_t ac_complement_size(const AcNbhd& u, const AtomicFamily& f) {
  std::size_t n = 0;
  for (const auto& [r, c] : u.excluded) n += fiber_size(r, c, f);
  return n;
}

inline AcNbhd ac_transposed(const AcNbhd& u) {
  std::vector<IndexPair> t;
  for (const auto& [r, c] : u.excluded) t.emplace_back(c, r);
  return AcNbhd(std::move(t));
}

namespace detail {

inline bool check_landing(VerificationReport& r, const AcNbhd& u, const AtomicFamily& f,
                          const BrandtElem& lhs, const BrandtElem& rhs) {
  ++r.checked;
  const auto p = brandt_multiply(lhs, rhs);
  if (!in_restricted(p, f) || !ac_contains(u, p)) {
    r.fail({to_string(lhs), to_string(rhs)}, "product " + to_string(p) + " is not in the neighbourhood");
    return false;
  }
  return true;
}

}  // namespace detail

/// Separate continuity of translation by x at O. With K the set of all
/// indices of x and of u's excluded pairs, U_K removes every fiber indexed by
/// K × K; then U_K·x, x·U_K, O·x and x·O must all lie in u.
inline VerificationReport check_shift_continuity_ac(const AcNbhd& u, const BrandtElem& x,
                                                    const AtomicFamily& f, Nat bound) {
  if (x.is_zero()) throw InvalidElement("shift continuity is checked at a nonzero element");
  require_restricted(x, f);
  std::set<Nat> keys{x.row(), x.col()};
  for (const auto& [r, c] : u.excluded) keys.insert({r, c});
  std::vector<IndexPair> kk;
  for (Nat a : keys)
    for (Nat b : keys) kk.emplace_back(a, b);
  const AcNbhd uk(std::move(kk));

  VerificationReport r;
  for (const auto& e : brandt_universe(f, bound).elements) {
    if (!ac_contains(uk, e)) continue;
    if (!detail::check_landing(r, u, f, e, x) || !detail::check_landing(r, u, f, x, e)) return r;
  }
  r.note = "U_K excludes " + std::to_string(uk.excluded.size()) + " fibers";
  return r;
}

/// (transposed u)^{-1} ⊆ u on the bounded universe.
inline VerificationReport check_inversion_ac(const AcNbhd& u, const AtomicFamily& f, Nat bound) {
  VerificationReport r;
  const auto t = ac_transposed(u);
  for (const auto& e : brandt_universe(f, bound).elements) {
    if (!ac_contains(t, e)) continue;
    ++r.checked;
    if (!ac_contains(u, brandt_invert(e))) {
      r.fail({to_string(e)}, "inverse of an element of the transposed set escapes u");
      return r;
    }
  }
  return r;
}

/// u·u ⊆ u on the bounded universe.
inline VerificationReport check_tau1_closure(const Tau1Nbhd& u, const AtomicFamily& f, Nat bound) {
  VerificationReport r;
  std::vector<BrandtElem> members;
  for (const auto& e : brandt_universe(f, bound).elements)
    if (tau1_contains(u, e)) members.push_back(e);
  for (const auto& a : members)
    for (const auto& b : members) {
      ++r.checked;
      const auto p = brandt_multiply(a, b);
      if (!tau1_contains(u, p)) {
        r.fail({to_string(a), to_string(b)}, "product " + to_string(p) + " escapes U_" + std::to_string(u.n));
        return r;
      }
    }
  return r;
}

/// With n = max(row, col) + 1, x annihilates U_n(O) from both sides; also
/// u·u ⊆ u. For x = O only the trivial translates and the closure are checked.
inline VerificationReport check_continuity_tau1(const Tau1Nbhd& u, const BrandtElem& x,
                                                const AtomicFamily& f, Nat bound) {
  VerificationReport r;
  const Tau1Nbhd un{x.is_zero() ? 0 : std::max(x.row(), x.col()) + 1};
  for (const auto& e : brandt_universe(f, bound).elements) {
    if (!tau1_contains(un, e)) continue;
    for (const auto& p : {brandt_multiply(x, e), brandt_multiply(e, x)}) {
      ++r.checked;
      if (!p.is_zero()) {
        r.fail({to_string(x), to_string(e)}, "translate " + to_string(p) + " is not O");
        return r;
      }
    }
  }
  auto closure = check_tau1_closure(u, f, bound);
  closure.checked += r.checked;
  if (closure.passed) closure.note = "annihilator threshold n = " + std::to_string(un.n);
  return closure;
}

/// φ(x) = x·x⁻¹.
inline BrandtElem phi(const BrandtElem& x) {
  if (x.is_zero()) return x;
  return {x.row(), x.val(), x.row()};
}

/// ψ(x) = x⁻¹·x.
inline BrandtElem psi(const BrandtElem& x) {
  if (x.is_zero()) return x;
  return {x.col(), x.val(), x.col()};
}

inline bool is_brandt_idempotent(const BrandtElem& e) { return e.is_zero() || e.row() == e.col(); }

/// Passes iff no element of u (row, col <= bound) has its φ- or ψ-image in M.
/// The counterexample is the first such element.
inline VerificationReport check_preimage_avoidance(const Nbhd& u, const std::vector<BrandtElem>& m,
                                       const AtomicFamily& f, Nat bound) {
  for (const auto& e : m)
    if (!is_brandt_idempotent(e)) throw InvalidElement(to_string(e) + " is not an idempotent");
  const std::set<BrandtElem> targets(m.begin(), m.end());
  VerificationReport r;
  for (const auto& e : brandt_universe(f, bound).elements) {
    if (!nbhd_contains(u, e)) continue;
    ++r.checked;
    if (targets.count(phi(e)) || targets.count(psi(e))) {
      r.fail({to_string(e)}, "element of the neighbourhood maps into M");
      return r;
    }
  }
  return r;
}

inline bool preimage_condition_holds(const Nbhd& u, const std::vector<BrandtElem>& m, const AtomicFamily& f,
                                   Nat bound) {
  return check_preimage_avoidance(u, m, f, bound).passed;
}

/// Some d in D with a·d = O or d·a = O.
inline std::optional<BrandtElem> find_zero_witness(const BrandtElem& a, const std::vector<BrandtElem>& d) {
  if (a.is_zero()) throw InvalidElement("find_zero_witness: a must be nonzero");
  for (const auto& e : d)
    if (brandt_multiply(a, e).is_zero() || brandt_multiply(e, a).is_zero()) return e;
  return std::nullopt;
}

/// Element of the restricted semigroup with an extra point y adjoined.
class ExtendedElem {
 public:
  struct Adjoined {
    friend auto operator<=>(const Adjoined&, const Adjoined&) = default;
  };

  ExtendedElem(BrandtElem e) : v_(e) {}  // NOLINT(google-explicit-constructor)
  static ExtendedElem adjoined() { return ExtendedElem(Adjoined{}); }

  bool is_adjoined() const { return std::holds_alternative<Adjoined>(v_); }
  const BrandtElem& inner() const { return std::get<BrandtElem>(v_); }

  friend bool operator==(const ExtendedElem&, const ExtendedElem&) = default;

 private:
  explicit ExtendedElem(Adjoined a) : v_(a) {}
  std::variant<BrandtElem, Adjoined> v_;
};

inline std::string to_string(const ExtendedElem& x) { return x.is_adjoined() ? "Y" : to_string(x.inner()); }

/// y·y = y·x = x·y = O; otherwise the Brandt product.
inline ExtendedElem extended_multiply(const ExtendedElem& x, const ExtendedElem& y) {
  if (x.is_adjoined() || y.is_adjoined()) return BrandtElem::zero();
  return brandt_multiply(x.inner(), y.inner());
}

/// Finite prefix (i_1, k_1, i_2), (i_3, k_3, i_4), ... with
/// i_1 < i_2 < i_3 < ... of restricted elements.
class MSequence {
 public:
  MSequence(std::vector<BrandtElem> entries, const AtomicFamily& f) : entries_(std::move(entries)) {
    std::optional<Nat> last;
    for (const auto& e : entries_) {
      if (e.is_zero()) throw InvalidElement("M-sequence entries must be nonzero");
      require_restricted(e, f);
      if ((last && e.row() <= *last) || e.col() <= e.row())
        throw InvalidElement("M-sequence indices must be strictly increasing at " + to_string(e));
      last = e.col();
    }
  }

  const std::vector<BrandtElem>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<BrandtElem> entries_;
};

/// Membership in U_n(y) = {y} ∪ M_n, with M_n the entries from position n
/// (1-based) on.
inline bool mseq_nbhd_contains(const MSequence& seq, std::size_t n, const ExtendedElem& e) {
  if (n < 1 || n > seq.size())
    throw IndexOutOfRange("M-sequence position " + std::to_string(n) + " outside 1.." +
                          std::to_string(seq.size()));
  if (e.is_adjoined()) return true;
  const auto& es = seq.entries();
  return std::find(es.begin() + static_cast<std::ptrdiff_t>(n - 1), es.end(), e.inner()) != es.end();
}

/// Fiber cardinality at every (row, col) with row, col <= bound.
inline std::map<IndexPair, std::size_t> isolation_report(const AtomicFamily& f, Nat bound) {
  std::map<IndexPair, std::size_t> out;
  for (Nat r = 0; r <= bound; ++r)
    for (Nat c = 0; c <= bound; ++c) out[{r, c}] = fiber_size(r, c, f);
  return out;
}

}  // namespace bomega

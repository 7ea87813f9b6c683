#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bomega/errors.hpp"

namespace bomega {

using Nat = std::uint64_t;
using Int = std::int64_t;

/// Subset of the naturals stored as a finite sorted list plus an optional
/// cofinite tail "every n >= t". Always nonempty.
///
/// The representation is canonical: explicit elements forming a contiguous
/// run directly below the tail are folded into it, so two supports denote
/// the same set iff they compare equal.
class SupportSet {
 public:
  explicit SupportSet(std::vector<Nat> elems, std::optional<Nat> tail = {})
      : elems_(std::move(elems)), tail_(tail) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (tail_ && !elems_.empty() && elems_.back() >= *tail_)
      throw InvalidElement("support: explicit element " + std::to_string(elems_.back()) +
                           " is not below the tail threshold " + std::to_string(*tail_));
    if (tail_) {
      while (!elems_.empty() && *tail_ > 0 && elems_.back() == *tail_ - 1) {
        --*tail_;
        elems_.pop_back();
      }
    }
    if (elems_.empty() && !tail_) throw InvalidElement("support: must contain at least one element");
  }

  static SupportSet all_from(Nat t) { return SupportSet({}, t); }

  const std::vector<Nat>& explicit_elements() const { return elems_; }
  std::optional<Nat> tail() const { return tail_; }
  bool is_finite() const { return !tail_.has_value(); }

  /// Cardinality; absent for infinite supports.
  std::optional<std::size_t> size() const {
    if (tail_) return std::nullopt;
    return elems_.size();
  }

  bool contains(Nat k) const {
    if (tail_ && k >= *tail_) return true;
    return std::binary_search(elems_.begin(), elems_.end(), k);
  }

  Nat min() const { return elems_.empty() ? *tail_ : elems_.front(); }

  std::optional<Nat> max() const {
    if (tail_) return std::nullopt;
    return elems_.back();
  }

  /// m-th element of the increasing enumeration k_0 < k_1 < ...
  Nat kth(std::size_t m) const {
    if (m < elems_.size()) return elems_[m];
    if (!tail_)
      throw IndexOutOfRange("kth: index " + std::to_string(m) + " but support has " +
                            std::to_string(elems_.size()) + " elements");
    return *tail_ + static_cast<Nat>(m - elems_.size());
  }

  /// Inverse of kth.
  std::size_t index_of(Nat k) const {
    if (!contains(k)) throw InvalidElement(std::to_string(k) + " is not in the support");
    if (tail_ && k >= *tail_) return elems_.size() + static_cast<std::size_t>(k - *tail_);
    return static_cast<std::size_t>(std::lower_bound(elems_.begin(), elems_.end(), k) -
                                    elems_.begin());
  }

  /// Largest support element strictly below k.
  std::optional<Nat> predecessor(Nat k) const {
    if (tail_ && k > *tail_) return k - 1;
    auto it = std::lower_bound(elems_.begin(), elems_.end(), k);
    if (it == elems_.begin()) return std::nullopt;
    return *std::prev(it);
  }

  /// Smallest support element strictly above k.
  std::optional<Nat> successor(Nat k) const {
    auto it = std::upper_bound(elems_.begin(), elems_.end(), k);
    if (it != elems_.end()) return *it;
    if (tail_) return std::max(*tail_, k + 1);
    return std::nullopt;
  }

  /// All support elements <= limit, increasing.
  std::vector<Nat> elements_upto(Nat limit) const {
    std::vector<Nat> out;
    for (Nat e : elems_) {
      if (e > limit) break;
      out.push_back(e);
    }
    if (tail_)
      for (Nat e = *tail_; e <= limit; ++e) out.push_back(e);
    return out;
  }

  /// Number of support elements <= limit.
  std::size_t count_upto(Nat limit) const {
    auto n = static_cast<std::size_t>(std::upper_bound(elems_.begin(), elems_.end(), limit) -
                                      elems_.begin());
    if (tail_ && limit >= *tail_) n += static_cast<std::size_t>(limit - *tail_ + 1);
    return n;
  }

  /// n + support for a (possibly negative) integer n. A result containing a
  /// negative number is an error.
  SupportSet translated(Int n) const {
    if (n < 0 && static_cast<Nat>(-n) > min())
      throw InvalidElement("translation by " + std::to_string(n) +
                           " leaves the naturals (support minimum " + std::to_string(min()) + ")");
    auto shift = [n](Nat k) { return static_cast<Nat>(static_cast<Int>(k) + n); };
    std::vector<Nat> e;
    e.reserve(elems_.size());
    for (Nat k : elems_) e.push_back(shift(k));
    std::optional<Nat> t;
    if (tail_) t = shift(*tail_);
    return SupportSet(std::move(e), t);
  }

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::vector<Nat> elems_;
  std::optional<Nat> tail_;
};

/// Family of atomic subsets of omega: the empty set together with the
/// singletons {k} for k in the support.
class AtomicFamily {
 public:
  explicit AtomicFamily(SupportSet support) : support_(std::move(support)) {}

  const SupportSet& support() const { return support_; }
  bool contains(Nat k) const { return support_.contains(k); }
  Nat kth(std::size_t m) const { return support_.kth(m); }
  std::size_t index_of(Nat k) const { return support_.index_of(k); }

  friend bool operator==(const AtomicFamily&, const AtomicFamily&) = default;

 private:
  SupportSet support_;
};

/// Finite family of finite subsets of omega. Each member is kept sorted.
class GeneralFamily {
 public:
  using Member = std::vector<Nat>;

  explicit GeneralFamily(std::vector<Member> members) : members_(std::move(members)) {
    for (auto& m : members_) {
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
    }
    auto sorted = members_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidElement("general family: duplicate member");
  }

  const std::vector<Member>& members() const { return members_; }

  bool contains(const Member& s) const {
    return std::find(members_.begin(), members_.end(), s) != members_.end();
  }

  bool contains_empty() const { return contains(Member{}); }

 private:
  std::vector<Member> members_;
};

/// {x in a : x + n in b}, i.e. a ∩ (-n + b).
inline GeneralFamily::Member intersect_shifted(const GeneralFamily::Member& a,
                                               const GeneralFamily::Member& b, Nat n) {
  GeneralFamily::Member out;
  for (Nat x : a)
    if (std::binary_search(b.begin(), b.end(), x + n)) out.push_back(x);
  return out;
}

/// F1 ∩ (-n + F2) is a member for every pair of members and every n.
/// Shifts past max(F2) + 1 only ever produce the empty set, which the
/// n = max(F2) + 1 case already tests.
inline bool validate_omega_closed(const GeneralFamily& f) {
  for (const auto& f1 : f.members()) {
    for (const auto& f2 : f.members()) {
      const Nat last = f2.empty() ? 0 : f2.back() + 1;
      for (Nat n = 0; n <= last; ++n)
        if (!f.contains(intersect_shifted(f1, f2, n))) return false;
    }
  }
  return true;
}

/// {∅} ∪ {{k} : k in support, k <= limit}.
inline GeneralFamily induced_general_family(const AtomicFamily& f, Nat limit) {
  std::vector<GeneralFamily::Member> members{{}};
  for (Nat k : f.support().elements_upto(limit)) members.push_back({k});
  return GeneralFamily(std::move(members));
}

struct Normalized {
  AtomicFamily family;
  Nat k0;
};

/// Shift the support so that its minimum becomes 0.
inline Normalized normalize(const AtomicFamily& f) {
  const Nat k0 = f.support().min();
  return {AtomicFamily(f.support().translated(-static_cast<Int>(k0))), k0};
}

/// The integer n with support(f1) = n + support(f2), if any.
inline std::optional<Int> are_translate_equivalent(const AtomicFamily& f1, const AtomicFamily& f2) {
  const Int n = static_cast<Int>(f1.support().min()) - static_cast<Int>(f2.support().min());
  if (normalize(f1).family == normalize(f2).family) return n;
  return std::nullopt;
}

inline Nat kth(const AtomicFamily& f, std::size_t m) { return f.kth(m); }

}  // namespace bomega

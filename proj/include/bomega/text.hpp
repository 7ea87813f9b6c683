#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "bomega/brandt.hpp"
#include "bomega/errors.hpp"
#include "bomega/family.hpp"
#include "bomega/semigroup.hpp"
#include "bomega/topology.hpp"

// Text forms:
//   support  := nat ("," nat)* ("," "+" nat)? | "+" nat
//   BElem    := "0" | "(" nat "," nat "," nat ")"
//   Brandt   := "O" | "(" nat ";" nat ";" nat ")"
//   nbhd     := "ac:" ("(" nat "," nat ")")* | "t1:" nat
//   extended := "Y" | Brandt
// Whitespace is ignored everywhere.

namespace bomega {

// Coordinates above this are rejected so that sums of coordinates never wrap.
inline constexpr Nat kMaxCoordinate = Nat{1} << 48;

namespace detail {

class Cursor {
 public:
  Cursor(std::string_view text, std::string_view what) : what_(what) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  bool done() const { return pos_ == s_.size(); }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view word) {
    if (std::string_view(s_).substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Nat nat() {
    Nat v = 0;
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range || (ec == std::errc{} && v > kMaxCoordinate))
      fail("number too large");
    if (ec != std::errc{}) fail("expected a natural number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  void finish() {
    if (!done()) fail("trailing input");
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse " + std::string(what_) + " \"" + s_ + "\" at offset " + std::to_string(pos_) +
                     ": " + why);
  }

 private:
  std::string s_;
  std::string_view what_;
  std::size_t pos_ = 0;
};

inline BElem parse_belem(Cursor& c) {
  if (c.accept('0')) return BElem::zero();
  c.expect('(');
  const Nat i = c.nat();
  c.expect(',');
  const Nat j = c.nat();
  c.expect(',');
  const Nat k = c.nat();
  c.expect(')');
  return {i, j, k};
}

inline BrandtElem parse_brandt(Cursor& c) {
  if (c.accept('O')) return BrandtElem::zero();
  c.expect('(');
  const Nat r = c.nat();
  c.expect(';');
  const Nat v = c.nat();
  c.expect(';');
  const Nat col = c.nat();
  c.expect(')');
  return {r, v, col};
}

}  // namespace detail

inline SupportSet parse_support(std::string_view text) {
  detail::Cursor c(text, "support");
  std::vector<Nat> elems;
  std::optional<Nat> tail;
  if (c.accept('+')) {
    tail = c.nat();
  } else {
    elems.push_back(c.nat());
    while (c.accept(',')) {
      if (c.accept('+')) {
        tail = c.nat();
        break;
      }
      elems.push_back(c.nat());
    }
  }
  c.finish();
  try {
    return SupportSet(std::move(elems), tail);
  } catch (const InvalidElement& e) {
    throw ParseError(e.what());
  }
}

inline std::string to_string(const SupportSet& s) {
  std::string out;
  for (Nat k : s.explicit_elements()) {
    if (!out.empty()) out += ",";
    out += std::to_string(k);
  }
  if (s.tail()) {
    if (!out.empty()) out += ",";
    out += "+" + std::to_string(*s.tail());
  }
  return out;
}

inline AtomicFamily parse_family(std::string_view text) { return AtomicFamily(parse_support(text)); }

inline BElem parse_belem(std::string_view text) {
  detail::Cursor c(text, "element");
  auto x = detail::parse_belem(c);
  c.finish();
  return x;
}

inline BrandtElem parse_brandt(std::string_view text) {
  detail::Cursor c(text, "Brandt element");
  auto x = detail::parse_brandt(c);
  c.finish();
  return x;
}

/// Comma-separated Brandt elements; the empty string is the empty list.
inline std::vector<BrandtElem> parse_brandt_list(std::string_view text) {
  detail::Cursor c(text, "Brandt element list");
  std::vector<BrandtElem> out;
  if (c.done()) return out;
  do {
    out.push_back(detail::parse_brandt(c));
  } while (c.accept(','));
  c.finish();
  return out;
}

inline ExtendedElem parse_extended(std::string_view text) {
  detail::Cursor c(text, "extended element");
  if (c.accept('Y')) {
    c.finish();
    return ExtendedElem::adjoined();
  }
  auto x = detail::parse_brandt(c);
  c.finish();
  return x;
}

inline Nbhd parse_nbhd(std::string_view text) {
  detail::Cursor c(text, "neighbourhood");
  if (c.accept("t1:")) {
    Tau1Nbhd u{c.nat()};
    c.finish();
    return u;
  }
  if (!c.accept("ac:")) c.fail("expected prefix \"ac:\" or \"t1:\"");
  std::vector<IndexPair> pairs;
  while (c.accept('(')) {
    const Nat i = c.nat();
    c.expect(',');
    const Nat j = c.nat();
    c.expect(')');
    pairs.emplace_back(i, j);
  }
  c.finish();
  return AcNbhd(std::move(pairs));
}

inline std::string to_string(const Nbhd& u) {
  if (const auto* t = std::get_if<Tau1Nbhd>(&u)) return "t1:" + std::to_string(t->n);
  std::string out = "ac:";
  for (const auto& [i, j] : std::get<AcNbhd>(u).excluded)
    out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return out;
}

}  // namespace bomega

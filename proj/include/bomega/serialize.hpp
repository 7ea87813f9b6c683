#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "bomega/brandt.hpp"
#include "bomega/equations.hpp"
#include "bomega/errors.hpp"
#include "bomega/report.hpp"
#include "bomega/semigroup.hpp"
#include "bomega/topology.hpp"

namespace bomega {

using json = nlohmann::ordered_json;

inline json to_json_value(const BElem& x) {
  if (x.is_zero()) return {{"zero", true}};
  return {{"i", x.i()}, {"j", x.j()}, {"k", x.k()}};
}

inline json to_json_value(const BrandtElem& e) {
  if (e.is_zero()) return {{"O", true}};
  return {{"row", e.row()}, {"val", e.val()}, {"col", e.col()}};
}

inline json to_json_value(const VerificationReport& r) {
  json out{{"passed", r.passed}, {"checked", r.checked}};
  out["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
  out["note"] = r.note;
  return out;
}

inline json to_json_value(const SolutionSet& s) {
  if (const auto* z = std::get_if<InfiniteZeroCase>(&s))
    return {{"infinite", true}, {"description", z->describe()}};
  json arr = json::array();
  for (const auto& x : std::get<FiniteSolutions>(s).solutions) arr.push_back(to_json_value(x));
  return arr;
}

template <class Elem>
json to_json_array(const std::vector<Elem>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(to_json_value(x));
  return arr;
}

inline json to_json_value(const std::map<std::size_t, std::size_t>& census) {
  json arr = json::array();
  for (const auto& [len, count] : census) arr.push_back({{"length", len}, {"count", count}});
  return arr;
}

namespace detail {

inline Nat json_nat(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned())
    throw ParseError(std::string("JSON element: missing or non-natural field \"") + key + "\"");
  return j.at(key).get<Nat>();
}

}  // namespace detail

inline BElem belem_from_json(const json& j) {
  if (j.is_object() && j.contains("zero")) return BElem::zero();
  if (!j.is_object()) throw ParseError("JSON element must be an object");
  return {detail::json_nat(j, "i"), detail::json_nat(j, "j"), detail::json_nat(j, "k")};
}

/// Accepts {"O":true}, {"row":…,"val":…,"col":…} or a 3-element array.
inline BrandtElem brandt_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 3 || !std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_number_unsigned(); }))
      throw ParseError("JSON Brandt triple must be an array of three naturals");
    return {j[0].get<Nat>(), j[1].get<Nat>(), j[2].get<Nat>()};
  }
  if (!j.is_object()) throw ParseError("JSON Brandt element must be an object or array");
  if (j.contains("O")) return BrandtElem::zero();
  return {detail::json_nat(j, "row"), detail::json_nat(j, "val"), detail::json_nat(j, "col")};
}

/// M-sequence text form: a JSON array of Brandt triples.
inline MSequence parse_msequence(const std::string& text, const AtomicFamily& f) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("M-sequence: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("M-sequence must be a JSON array");
  std::vector<BrandtElem> entries;
  for (const auto& e : j) entries.push_back(brandt_from_json(e));
  return MSequence(std::move(entries), f);
}

}  // namespace bomega

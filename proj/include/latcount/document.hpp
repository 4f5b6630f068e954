#pragma once

// Line-delimited JSON, DOT and plain edge-list exports of a lattice.
//
// JSON schema: {"n": int, "covers": [[lo, hi], ...], "red": [int],
//               "nullity": int, "fbb": "M2" | "F1" | ... | null}

#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "latcount/poset.hpp"
#include "latcount/reduction.hpp"

namespace latcount {

struct LatticeDocument {
  int n = 0;
  std::vector<Cover> covers;  // sorted
  std::vector<Element> red;
  int nullity = 0;
  std::optional<FbbClass> fbb;  // unset unless M2 or F1..F4

  friend bool operator==(const LatticeDocument&, const LatticeDocument&) = default;
};

inline std::optional<FbbClass> fbb_tag(const Lattice& l) {
  const auto cls = classify_fbb(l);
  if (cls == FbbClass::Other) return std::nullopt;
  return cls;
}

inline LatticeDocument make_document(const Lattice& l) {
  return {l.size(), l.digraph().covers(), classify_elements(l).red, nullity(l), fbb_tag(l)};
}

inline nlohmann::ordered_json to_json(const LatticeDocument& doc) {
  nlohmann::ordered_json j;
  j["n"] = doc.n;
  auto covers = nlohmann::ordered_json::array();
  for (auto [lo, hi] : doc.covers) covers.push_back({lo, hi});
  j["covers"] = std::move(covers);
  j["red"] = doc.red;
  j["nullity"] = doc.nullity;
  if (doc.fbb) j["fbb"] = std::string(to_string(*doc.fbb));
  else j["fbb"] = nullptr;
  return j;
}

/// Single line, no trailing newline.
inline std::string dump_document(const LatticeDocument& doc) { return to_json(doc).dump(); }

/// Parses one JSON document, rebuilds the lattice, and checks every
/// annotation present against the recomputed value. Throws
/// std::invalid_argument on schema or annotation mismatch; poset and lattice
/// errors propagate as latcount::Error.
inline LatticeDocument parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("covers") ||
      !j["covers"].is_array())
    throw std::invalid_argument("document needs integer \"n\" and array \"covers\"");
  std::vector<Cover> covers;
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
      throw std::invalid_argument("each cover must be a pair of integers");
    covers.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  const Lattice l = as_lattice(build_poset(j["n"].get<int>(), std::move(covers)));
  LatticeDocument doc = make_document(l);

  auto check = [&](const char* key, bool ok) {
    if (!ok) throw std::invalid_argument(std::string("\"") + key + "\" does not match the lattice");
  };
  try {
    if (j.contains("red")) check("red", j["red"].get<std::vector<Element>>() == doc.red);
    if (j.contains("nullity")) check("nullity", j["nullity"].get<int>() == doc.nullity);
    if (j.contains("fbb")) {
      const auto& f = j["fbb"];
      check("fbb", f.is_null() ? !doc.fbb : doc.fbb && f.get<std::string>() == to_string(*doc.fbb));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad annotation: ") + e.what());
  }
  return doc;
}

/// Hasse-style DOT: bottom-to-top, elements of equal height on one rank.
inline std::string to_dot(const CoverDigraph& p, const std::string& name = "L") {
  std::vector<int> height(p.size(), 0);
  // covers() is sorted by lower label, not topologically, so relax to a fixpoint.
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [lo, hi] : p.covers())
      if (height[hi] < height[lo] + 1) {
        height[hi] = height[lo] + 1;
        changed = true;
      }
  }
  std::map<int, std::vector<Element>> ranks;
  for (Element x = 0; x < p.size(); ++x) ranks[height[x]].push_back(x);

  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (const auto& [h, xs] : ranks) {
    out << "  { rank=same;";
    for (Element x : xs) out << ' ' << x << ';';
    out << " }\n";
  }
  for (auto [lo, hi] : p.covers()) out << "  " << lo << " -> " << hi << ";\n";
  out << "}\n";
  return out.str();
}

/// One "lo hi" line per cover, no trailing newline.
inline std::string to_edges(const CoverDigraph& p) {
  std::string out;
  for (auto [lo, hi] : p.covers()) {
    if (!out.empty()) out += '\n';
    out += std::to_string(lo) + ' ' + std::to_string(hi);
  }
  return out;
}

}  // namespace latcount

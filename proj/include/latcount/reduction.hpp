#pragma once

// Retractible elements, basic retracts, basic blocks and fundamental basic
// blocks, plus the M2 / F1..F4 classification of their shapes.

#include <algorithm>
#include <array>
#include <map>
#include <string_view>
#include <vector>

#include "latcount/adjunct.hpp"
#include "latcount/canonical.hpp"
#include "latcount/poset.hpp"

namespace latcount {

enum class FbbClass { M2, F1, F2, F3, F4, Other };

constexpr std::string_view to_string(FbbClass c) {
  switch (c) {
    case FbbClass::M2: return "M2";
    case FbbClass::F1: return "F1";
    case FbbClass::F2: return "F2";
    case FbbClass::F3: return "F3";
    case FbbClass::F4: return "F4";
    case FbbClass::Other: return "Other";
  }
  return "Other";
}

/// The five fundamental basic blocks with at most three reducible elements.
namespace shapes {

/// 0 < a, b < 1.
inline CoverDigraph m2() { return build_poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

/// 0 < a < a1, a2 < 1 with a second atom b < 1. Labels: 0, a, b, a1, a2, 1.
inline CoverDigraph f1() {
  return build_poset(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {3, 5}, {4, 5}, {2, 5}});
}

/// Dual of F1: 0 < b1, b2 < a < 1 with a second coatom.
inline CoverDigraph f2() { return dual(f1()); }

/// 0 < b1, b2 < a < a1, a2 < 1. Labels: 0, b1, b2, a, a1, a2, 1.
inline CoverDigraph f3() {
  return build_poset(7, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
}

/// F3 with an extra element x, 0 < x < 1.
inline CoverDigraph f4() {
  return build_poset(8, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}, {0, 7}, {7, 6}});
}

}  // namespace shapes

/// Def-style retractibility of a doubly irreducible x: true unless x sits
/// between two reducible elements y < x < z that are also joined by some
/// other upward path.
inline bool is_retractible(const CoverDigraph& p, Element x) {
  if (x < 0 || x >= p.size())
    throw Error(ErrorKind::LabelOutOfRange, "element " + std::to_string(x) + " out of range");
  if (!is_doubly_irreducible(p, x))
    throw Error(ErrorKind::NotDoublyIrreducible, "element " + std::to_string(x) + " is reducible");
  auto reducible = [&](Element v) { return p.upper_covers(v).size() >= 2 || p.lower_covers(v).size() >= 2; };
  if (p.lower_covers(x).empty() || p.upper_covers(x).empty()) return true;
  const Element y = p.lower_covers(x).front();
  const Element z = p.upper_covers(x).front();
  if (!reducible(y) || !reducible(z)) return true;

  std::vector<bool> seen(p.size(), false);
  std::vector<Element> stack{y};
  seen[y] = seen[x] = true;
  while (!stack.empty()) {
    const Element v = stack.back();
    stack.pop_back();
    for (Element w : p.upper_covers(v)) {
      if (w == z) return false;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return true;
}

namespace detail {

// Composes a step's origin map onto the running one.
inline void compose_origin(std::vector<Element>& origin, const std::vector<Element>& step) {
  std::vector<Element> next(step.size());
  for (std::size_t i = 0; i < step.size(); ++i) next[i] = origin[step[i]];
  origin = std::move(next);
}

// Removes, one at a time, the lowest-ranked element picked by `eligible`
// until none is left. `rank` is indexed by original label.
template <class Eligible>
void remove_while(Subposet& s, const std::vector<Element>& rank, Eligible&& eligible) {
  for (;;) {
    Element pick = -1;
    for (Element x = 0; x < s.digraph.size(); ++x)
      if (eligible(s.digraph, x) && (pick < 0 || rank[s.origin[x]] < rank[s.origin[pick]])) pick = x;
    if (pick < 0) return;
    auto step = remove_element(s.digraph, pick);
    s.digraph = std::move(step.digraph);
    compose_origin(s.origin, step.origin);
  }
}

inline Subposet identity_subposet(const CoverDigraph& p) {
  Subposet s{p, std::vector<Element>(p.size())};
  std::iota(s.origin.begin(), s.origin.end(), 0);
  return s;
}

inline bool retractible_irr_star(const CoverDigraph& p, Element x) {
  return p.upper_covers(x).size() == 1 && p.lower_covers(x).size() == 1 && is_retractible(p, x);
}

inline bool pendant(const CoverDigraph& p, Element x) {
  return p.upper_covers(x).size() + p.lower_covers(x).size() == 1;
}

inline void retract_step(Subposet& s, const std::vector<Element>& rank) {
  remove_while(s, rank, retractible_irr_star);
}

inline void prune_step(Subposet& s, const std::vector<Element>& rank) {
  remove_while(s, rank, pendant);
}

}  // namespace detail

/// Removes retractible Irr* elements, lowest canonical rank first, until none
/// is left. `origin` maps each survivor to its label in p.
inline Subposet basic_retract_with_origin(const CoverDigraph& p) {
  const auto rank = canonical_form(p).label;
  auto s = detail::identity_subposet(p);
  detail::retract_step(s, rank);
  return s;
}

inline CoverDigraph basic_retract(const CoverDigraph& p) { return basic_retract_with_origin(p).digraph; }

/// Deletes pendant elements (cover-graph degree one) one at a time until
/// none is left; a lone element has degree zero and stays.
inline Subposet prune_pendants_with_origin(const CoverDigraph& p) {
  const auto rank = canonical_form(p).label;
  auto s = detail::identity_subposet(p);
  detail::prune_step(s, rank);
  return s;
}

inline CoverDigraph prune_pendants(const CoverDigraph& p) { return prune_pendants_with_origin(p).digraph; }

/// Basic retract, then pendant removal, repeated until neither step changes
/// anything.
inline Subposet basic_block_with_origin(const CoverDigraph& p) {
  const auto rank = canonical_form(p).label;
  auto s = detail::identity_subposet(p);
  for (;;) {
    const int before = s.digraph.size();
    detail::retract_step(s, rank);
    detail::prune_step(s, rank);
    if (s.digraph.size() == before) return s;
  }
}

inline CoverDigraph basic_block_of(const CoverDigraph& p) { return basic_block_with_origin(p).digraph; }

/// Keeps one off-spine ear per distinct adjunct pair of the basic block (the
/// spine itself supplies the second ear when the pair's open interval is all
/// doubly irreducible). Among ears of a pair the shortest wins, ties going to
/// the lowest canonical rank.
inline Lattice fundamental_basic_block_of(const Lattice& l) {
  const Lattice block = as_lattice(basic_block_of(l.digraph()));
  const auto d = decompose_with_elements(block);
  const auto rank = canonical_form(block.digraph()).label;

  std::map<std::pair<Element, Element>, std::size_t> chosen;
  for (std::size_t i = 0; i < d.chains.size(); ++i) {
    const auto key = std::pair{d.rep.attachments[i].lo, d.rep.attachments[i].hi};
    auto [it, fresh] = chosen.try_emplace(key, i);
    if (fresh) continue;
    const auto& cur = d.chains[it->second];
    const auto& cand = d.chains[i];
    auto min_rank = [&](const std::vector<Element>& c) {
      Element r = rank[c.front()];
      for (Element x : c) r = std::min(r, rank[x]);
      return r;
    };
    if (cand.size() < cur.size() || (cand.size() == cur.size() && min_rank(cand) < min_rank(cur)))
      it->second = i;
  }

  std::vector<bool> keep(block.size(), false);
  for (Element x : d.spine) keep[x] = true;
  for (const auto& [key, i] : chosen)
    for (Element x : d.chains[i]) keep[x] = true;
  return as_lattice(induced_subposet(block.digraph(), keep).digraph);
}

namespace detail {

inline const std::array<std::pair<FbbClass, Certificate>, 5>& fbb_references() {
  static const std::array<std::pair<FbbClass, Certificate>, 5> refs{{
      {FbbClass::M2, canonical_certificate(shapes::m2())},
      {FbbClass::F1, canonical_certificate(shapes::f1())},
      {FbbClass::F2, canonical_certificate(shapes::f2())},
      {FbbClass::F3, canonical_certificate(shapes::f3())},
      {FbbClass::F4, canonical_certificate(shapes::f4())},
  }};
  return refs;
}

}  // namespace detail

/// M2 for two reducible elements, F1..F4 for three, Other for anything else.
/// A two- or three-reducible lattice whose fundamental basic block matches
/// none of the five shapes throws UnexpectedClass.
inline FbbClass classify_fbb(const Lattice& l) {
  const auto reducibles = classify_elements(l).red.size();
  if (reducibles != 2 && reducibles != 3) return FbbClass::Other;
  const auto cert = canonical_certificate(fundamental_basic_block_of(l));
  for (const auto& [cls, ref] : detail::fbb_references())
    if (ref == cert) return cls;
  throw Error(ErrorKind::UnexpectedClass,
              "fundamental basic block " + cert.hex() + " is none of M2, F1, F2, F3, F4");
}

}  // namespace latcount

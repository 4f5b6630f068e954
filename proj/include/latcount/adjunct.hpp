#pragma once

// Adjunct sums, direct sums, and the adjunct-of-chains representation of
// dismantlable lattices whose reducible elements form a chain.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "latcount/poset.hpp"

namespace latcount {

/// L1 ]^b_a L2: L2 is placed strictly inside the gap a < b of L1, with the new
/// covers a < 0_{L2} and 1_{L2} < b. L2's labels are shifted past L1's.
inline Lattice adjunct_sum(const Lattice& l1, const Lattice& l2, Element a, Element b) {
  if (!l1.less(a, b))
    throw Error(ErrorKind::PairNotComparable,
                std::to_string(a) + " is not strictly below " + std::to_string(b), Cover{a, b});
  if (l1.digraph().has_cover(a, b))
    throw Error(ErrorKind::PairIsCover,
                std::to_string(a) + " is covered by " + std::to_string(b), Cover{a, b});
  const int offset = l1.size();
  std::vector<Cover> covers = l1.digraph().covers();
  for (auto [lo, hi] : l2.digraph().covers()) covers.emplace_back(lo + offset, hi + offset);
  covers.emplace_back(a, l2.bottom() + offset);
  covers.emplace_back(l2.top() + offset, b);
  return as_lattice(build_poset(offset + l2.size(), std::move(covers)));
}

/// Ordered sum M (+) N: every element of M lies below every element of N.
/// The new covers join the maximal elements of M to the minimal elements of N.
inline CoverDigraph direct_sum(const CoverDigraph& m, const CoverDigraph& n) {
  const int offset = m.size();
  std::vector<Cover> covers = m.covers();
  for (auto [lo, hi] : n.covers()) covers.emplace_back(lo + offset, hi + offset);
  for (Element x = 0; x < m.size(); ++x) {
    if (!m.upper_covers(x).empty()) continue;
    for (Element y = 0; y < n.size(); ++y)
      if (n.lower_covers(y).empty()) covers.emplace_back(x, y + offset);
  }
  return build_poset(offset + n.size(), std::move(covers));
}

inline Lattice direct_sum(const Lattice& m, const Lattice& n) {
  return as_lattice(direct_sum(m.digraph(), n.digraph()));
}

/// One chain glued into the gap (lo, hi). Labels refer to the partial lattice
/// built so far: the spine holds labels 0..spine-1 (its heights), and each
/// realized attachment appends its `length` elements in order.
struct Attachment {
  Element lo = 0;
  Element hi = 0;
  int length = 1;

  friend auto operator<=>(const Attachment&, const Attachment&) = default;
};

/// A spine chain plus chains attached at adjunct pairs:
/// C_0 ]^{hi_1}_{lo_1} C_1 ]^{hi_2}_{lo_2} ... C_k.
struct AdjunctRep {
  int spine = 1;
  std::vector<Attachment> attachments;

  int chain_count() const { return 1 + static_cast<int>(attachments.size()); }
  int element_count() const {
    int total = spine;
    for (const auto& a : attachments) total += a.length;
    return total;
  }

  friend bool operator==(const AdjunctRep&, const AdjunctRep&) = default;
};

/// Folds adjunct_sum over the attachments. Errors from a step are rethrown
/// with the failing attachment index in the message.
inline Lattice realize(const AdjunctRep& rep) {
  if (rep.spine < 1) throw Error(ErrorKind::LabelOutOfRange, "spine must hold an element");
  Lattice acc = as_lattice(chain(rep.spine));
  for (std::size_t i = 0; i < rep.attachments.size(); ++i) {
    const auto& att = rep.attachments[i];
    if (att.length < 1 || att.lo < 0 || att.hi < 0 || att.lo >= acc.size() || att.hi >= acc.size())
      throw Error(ErrorKind::LabelOutOfRange,
                  "attachment " + std::to_string(i) + " does not fit the partial lattice");
    try {
      acc = adjunct_sum(acc, as_lattice(chain(att.length)), att.lo, att.hi);
    } catch (const Error& e) {
      throw Error(e.kind(), "attachment " + std::to_string(i) + ": " + e.what(), e.witness());
    }
  }
  return acc;
}

/// Multiplicity of (a, b) as an adjunct pair: r when [a, b] holds r + 1
/// maximal chains whose interiors pairwise meet at a and join at b, and no
/// larger such family; 0 when at most one such chain exists.
inline int pair_multiplicity(const Lattice& l, Element a, Element b) {
  const auto chains = maximal_chains_in_interval(l, a, b);
  const std::size_t count = chains.size();
  if (count < 2) return 0;
  std::vector<std::vector<bool>> compatible(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) {
      bool ok = true;
      for (std::size_t s = 1; ok && s + 1 < chains[i].size(); ++s)
        for (std::size_t t = 1; ok && t + 1 < chains[j].size(); ++t) {
          auto [m, jn] = meet_join(l, chains[i][s], chains[j][t]);
          ok = m == a && jn == b;
        }
      compatible[i][j] = compatible[j][i] = ok;
    }

  // Maximum clique by plain backtracking; intervals here have few chains.
  std::size_t best = 1;
  std::vector<std::size_t> clique;
  auto grow = [&](auto&& self, std::size_t from) -> void {
    best = std::max(best, clique.size());
    for (std::size_t v = from; v < count; ++v) {
      if (clique.size() + (count - v) <= best) return;
      if (!std::all_of(clique.begin(), clique.end(), [&](std::size_t u) { return compatible[u][v]; }))
        continue;
      clique.push_back(v);
      self(self, v + 1);
      clique.pop_back();
    }
  };
  grow(grow, 0);
  return static_cast<int>(best) - 1;
}

/// An adjunct representation together with the lattice elements it was read
/// from: `spine` lists the spine bottom to top and `chains[i]` the elements of
/// attachment i, bottom to top.
struct Decomposition {
  AdjunctRep rep;
  std::vector<Element> spine;
  std::vector<std::vector<Element>> chains;
};

/// Reads off an adjunct-of-chains representation. The spine is the
/// lexicographically smallest maximal chain through every reducible element;
/// everything off the spine is doubly irreducible and falls into chains hung
/// between two spine elements. Attachments come out sorted by (lo, hi, length).
inline Decomposition decompose_with_elements(const Lattice& l) {
  if (!is_dismantlable(l)) throw Error(ErrorKind::NotDismantlable, "lattice contains a crown");
  auto red = classify_elements(l).red;
  for (std::size_t i = 0; i < red.size(); ++i)
    for (std::size_t j = i + 1; j < red.size(); ++j)
      if (!l.comparable(red[i], red[j]))
        throw Error(ErrorKind::IncomparableReducibles, "reducible elements must form a chain",
                    Cover{red[i], red[j]});
  std::sort(red.begin(), red.end(), [&](Element x, Element y) { return l.less(x, y); });

  const auto& g = l.digraph();
  std::vector<Element> spine{l.bottom()};
  std::vector<Element> targets = red;
  targets.push_back(l.top());
  for (Element target : targets) {
    while (spine.back() != target) {
      Element next = -1;
      for (Element y : g.upper_covers(spine.back()))
        if (l.leq(y, target) && (next < 0 || y < next)) next = y;
      spine.push_back(next);
    }
  }

  std::vector<int> height(l.size(), -1);
  for (std::size_t i = 0; i < spine.size(); ++i) height[spine[i]] = static_cast<int>(i);

  struct Found {
    Attachment att;
    std::vector<Element> elements;
  };
  std::vector<Found> found;
  for (Element s : spine)
    for (Element start : g.upper_covers(s)) {
      if (height[start] >= 0) continue;
      std::vector<Element> elements{start};
      Element x = start;
      while (height[g.upper_covers(x).front()] < 0) {
        x = g.upper_covers(x).front();
        elements.push_back(x);
      }
      const Element end = g.upper_covers(x).front();
      found.push_back({{height[s], height[end], static_cast<int>(elements.size())}, elements});
    }
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    return a.att < b.att || (a.att == b.att && a.elements < b.elements);
  });

  Decomposition d;
  d.rep.spine = static_cast<int>(spine.size());
  d.spine = std::move(spine);
  for (auto& f : found) {
    d.rep.attachments.push_back(f.att);
    d.chains.push_back(std::move(f.elements));
  }
  return d;
}

inline AdjunctRep decompose(const Lattice& l) { return decompose_with_elements(l).rep; }

/// Number of attachments per distinct (lo, hi) spine pair.
inline std::map<std::pair<Element, Element>, int> pair_counts(const AdjunctRep& rep) {
  std::map<std::pair<Element, Element>, int> counts;
  for (const auto& a : rep.attachments) ++counts[{a.lo, a.hi}];
  return counts;
}

}  // namespace latcount

#pragma once

// Finite posets given by their cover relation, and lattices built on top of
// them. Elements are dense labels 0..n-1; nothing assumes that the bottom or
// the top carries a particular label.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latcount/error.hpp"

namespace latcount {

using Element = int;
using Cover = std::pair<Element, Element>;

namespace detail {

/// Dense reflexive-transitive closure, row-major, `m[a * n + b]` iff a <= b.
class OrderMatrix {
 public:
  OrderMatrix() = default;
  explicit OrderMatrix(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const noexcept { return n_; }
  bool operator()(Element a, Element b) const noexcept {
    return bits_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }
  void set(Element a, Element b) noexcept { bits_[static_cast<std::size_t>(a) * n_ + b] = 1; }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace detail

/// A finite poset stored as its element count and irredundant cover relation.
/// Instances are only produced by `build_poset` (or by operations that go
/// through it), so the invariants always hold: acyclic, no cover implied by
/// transitivity, labels in range.
class CoverDigraph {
 public:
  CoverDigraph() = default;

  int size() const noexcept { return n_; }
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  std::size_t edge_count() const noexcept { return covers_.size(); }

  std::span<const Element> upper_covers(Element x) const { return up_[x]; }
  std::span<const Element> lower_covers(Element x) const { return down_[x]; }

  bool has_cover(Element a, Element b) const {
    return std::binary_search(covers_.begin(), covers_.end(), Cover{a, b});
  }

  friend bool operator==(const CoverDigraph& a, const CoverDigraph& b) {
    return a.n_ == b.n_ && a.covers_ == b.covers_;
  }

  friend CoverDigraph build_poset(int n, std::vector<Cover> covers);

 private:
  CoverDigraph(int n, std::vector<Cover> sorted_covers)
      : n_(n), covers_(std::move(sorted_covers)), up_(n), down_(n) {
    for (auto [lo, hi] : covers_) {
      up_[lo].push_back(hi);
      down_[hi].push_back(lo);
    }
  }

  int n_ = 0;
  std::vector<Cover> covers_;
  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
};

/// Validates a cover list and returns the poset it describes.
/// Throws LabelOutOfRange, CycleDetected or RedundantCover; a repeated pair
/// counts as redundant.
inline CoverDigraph build_poset(int n, std::vector<Cover> covers) {
  if (n < 0) throw Error(ErrorKind::LabelOutOfRange, "negative element count");
  for (auto [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || lo >= n || hi >= n)
      throw Error(ErrorKind::LabelOutOfRange,
                  "cover (" + std::to_string(lo) + "," + std::to_string(hi) +
                      ") outside 0.." + std::to_string(n - 1),
                  Cover{lo, hi});
    if (lo == hi)
      throw Error(ErrorKind::CycleDetected, "self-cover on " + std::to_string(lo), Cover{lo, hi});
  }
  std::sort(covers.begin(), covers.end());
  if (auto dup = std::adjacent_find(covers.begin(), covers.end()); dup != covers.end())
    throw Error(ErrorKind::RedundantCover, "repeated cover", *dup);

  // Kahn's algorithm; leftovers sit on a cycle.
  std::vector<std::vector<Element>> up(n);
  std::vector<int> indeg(n, 0);
  for (auto [lo, hi] : covers) {
    up[lo].push_back(hi);
    ++indeg[hi];
  }
  std::vector<Element> topo;
  topo.reserve(n);
  for (Element x = 0; x < n; ++x)
    if (indeg[x] == 0) topo.push_back(x);
  for (std::size_t i = 0; i < topo.size(); ++i)
    for (Element y : up[topo[i]])
      if (--indeg[y] == 0) topo.push_back(y);
  if (static_cast<int>(topo.size()) != n) {
    for (auto [lo, hi] : covers)
      if (indeg[lo] > 0 && indeg[hi] > 0)
        throw Error(ErrorKind::CycleDetected, "cover relation has a cycle", Cover{lo, hi});
    throw Error(ErrorKind::CycleDetected, "cover relation has a cycle");
  }

  // reach[x] = strict upper set of x, filled in reverse topological order.
  std::vector<std::vector<std::uint8_t>> reach(n, std::vector<std::uint8_t>(n, 0));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Element x = *it;
    for (Element y : up[x]) {
      reach[x][y] = 1;
      for (Element z = 0; z < n; ++z)
        if (reach[y][z]) reach[x][z] = 1;
    }
  }
  for (auto [lo, hi] : covers)
    for (Element mid : up[lo])
      if (mid != hi && reach[mid][hi])
        throw Error(ErrorKind::RedundantCover,
                    "cover (" + std::to_string(lo) + "," + std::to_string(hi) +
                        ") is implied via " + std::to_string(mid),
                    Cover{lo, hi});

  return CoverDigraph(n, std::move(covers));
}

/// The n-element chain 0 < 1 < ... < n-1.
inline CoverDigraph chain(int n) {
  std::vector<Cover> covers;
  for (Element x = 0; x + 1 < n; ++x) covers.emplace_back(x, x + 1);
  return build_poset(n, std::move(covers));
}

namespace detail {

inline OrderMatrix order_of(const CoverDigraph& p) {
  const int n = p.size();
  OrderMatrix m(n);
  std::vector<Element> stack;
  for (Element s = 0; s < n; ++s) {
    m.set(s, s);
    stack.assign(1, s);
    while (!stack.empty()) {
      Element x = stack.back();
      stack.pop_back();
      for (Element y : p.upper_covers(x))
        if (!m(s, y)) {
          m.set(s, y);
          stack.push_back(y);
        }
    }
  }
  return m;
}

}  // namespace detail

/// Reverses every cover.
inline CoverDigraph dual(const CoverDigraph& p) {
  std::vector<Cover> covers;
  covers.reserve(p.edge_count());
  for (auto [lo, hi] : p.covers()) covers.emplace_back(hi, lo);
  return build_poset(p.size(), std::move(covers));
}

/// Renames element x to perm[x]. `perm` must be a permutation of 0..n-1.
inline CoverDigraph relabel(const CoverDigraph& p, std::span<const Element> perm) {
  std::vector<Cover> covers;
  covers.reserve(p.edge_count());
  for (auto [lo, hi] : p.covers()) covers.emplace_back(perm[lo], perm[hi]);
  return build_poset(p.size(), std::move(covers));
}

/// A subposet together with the original label of each surviving element.
struct Subposet {
  CoverDigraph digraph;
  std::vector<Element> origin;
};

/// The subposet induced on the elements with keep[x] set, covers recomputed
/// from the inherited order; survivors are relabeled densely in label order.
inline Subposet induced_subposet(const CoverDigraph& p, const std::vector<bool>& keep) {
  const auto order = detail::order_of(p);
  std::vector<Element> origin;
  std::vector<Element> index(p.size(), -1);
  for (Element x = 0; x < p.size(); ++x)
    if (keep[x]) {
      index[x] = static_cast<Element>(origin.size());
      origin.push_back(x);
    }
  std::vector<Cover> covers;
  for (Element a : origin)
    for (Element b : origin) {
      if (a == b || !order(a, b)) continue;
      bool direct = true;
      for (Element c : origin)
        if (c != a && c != b && order(a, c) && order(c, b)) {
          direct = false;
          break;
        }
      if (direct) covers.emplace_back(index[a], index[b]);
    }
  return {build_poset(static_cast<int>(origin.size()), std::move(covers)), std::move(origin)};
}

/// Removes a single element, keeping the induced order.
inline Subposet remove_element(const CoverDigraph& p, Element x) {
  std::vector<bool> keep(p.size(), true);
  keep[x] = false;
  return induced_subposet(p, keep);
}

/// Red / Irr / Irr* as read off the cover degrees. For a lattice an element
/// is join-reducible exactly when it has two or more lower covers, and
/// meet-reducible exactly when it has two or more upper covers.
struct ElementClassification {
  std::vector<Element> red;
  std::vector<Element> irr;
  std::vector<Element> irr_star;
};

inline ElementClassification classify_elements(const CoverDigraph& p) {
  ElementClassification c;
  for (Element x = 0; x < p.size(); ++x) {
    const auto ups = p.upper_covers(x).size();
    const auto downs = p.lower_covers(x).size();
    if (ups >= 2 || downs >= 2) {
      c.red.push_back(x);
    } else {
      c.irr.push_back(x);
      if (ups == 1 && downs == 1) c.irr_star.push_back(x);
    }
  }
  return c;
}

inline bool is_doubly_irreducible(const CoverDigraph& p, Element x) {
  return p.upper_covers(x).size() <= 1 && p.lower_covers(x).size() <= 1;
}

inline int connected_components(const CoverDigraph& p) {
  std::vector<Element> parent(p.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Element x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = p.size();
  for (auto [lo, hi] : p.covers()) {
    Element a = find(lo), b = find(hi);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

/// Cycle rank of the cover graph: edges - vertices + components.
inline int nullity(const CoverDigraph& p) {
  return static_cast<int>(p.edge_count()) - p.size() + connected_components(p);
}

/// A validated lattice: the cover digraph plus its order, meet and join
/// tables, all computed once by `as_lattice`.
class Lattice {
 public:
  const CoverDigraph& digraph() const noexcept { return digraph_; }
  int size() const noexcept { return digraph_.size(); }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  bool leq(Element a, Element b) const noexcept { return order_(a, b); }
  bool less(Element a, Element b) const noexcept { return a != b && order_(a, b); }
  bool comparable(Element a, Element b) const noexcept { return order_(a, b) || order_(b, a); }

  Element meet(Element a, Element b) const noexcept { return meet_[index(a, b)]; }
  Element join(Element a, Element b) const noexcept { return join_[index(a, b)]; }

  friend Lattice as_lattice(CoverDigraph p);

 private:
  Lattice() = default;
  std::size_t index(Element a, Element b) const noexcept {
    return static_cast<std::size_t>(a) * digraph_.size() + b;
  }

  CoverDigraph digraph_;
  detail::OrderMatrix order_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Checks that every pair has a meet and a join. On failure the error's
/// witness is the first pair (in label order) missing one of them.
inline Lattice as_lattice(CoverDigraph p) {
  const int n = p.size();
  if (n == 0) throw Error(ErrorKind::NotALattice, "the empty poset is not a lattice");
  Lattice l;
  l.digraph_ = std::move(p);
  l.order_ = detail::order_of(l.digraph_);
  const auto& le = l.order_;
  l.meet_.assign(static_cast<std::size_t>(n) * n, -1);
  l.join_.assign(static_cast<std::size_t>(n) * n, -1);

  std::vector<Element> bounds;
  for (Element a = 0; a < n; ++a)
    for (Element b = a; b < n; ++b) {
      bounds.clear();
      for (Element c = 0; c < n; ++c)
        if (le(c, a) && le(c, b)) bounds.push_back(c);
      Element glb = -1;
      for (Element c : bounds)
        if (std::all_of(bounds.begin(), bounds.end(), [&](Element d) { return le(d, c); })) {
          glb = c;
          break;
        }
      bounds.clear();
      for (Element c = 0; c < n; ++c)
        if (le(a, c) && le(b, c)) bounds.push_back(c);
      Element lub = -1;
      for (Element c : bounds)
        if (std::all_of(bounds.begin(), bounds.end(), [&](Element d) { return le(c, d); })) {
          lub = c;
          break;
        }
      if (glb < 0 || lub < 0)
        throw Error(ErrorKind::NotALattice,
                    std::string("elements ") + std::to_string(a) + " and " + std::to_string(b) +
                        " have no " + (glb < 0 ? "meet" : "join"),
                    Cover{a, b});
      l.meet_[l.index(a, b)] = l.meet_[l.index(b, a)] = glb;
      l.join_[l.index(a, b)] = l.join_[l.index(b, a)] = lub;
    }
  l.bottom_ = l.meet_[0];
  l.top_ = l.join_[0];
  for (Element x = 1; x < n; ++x) {
    l.bottom_ = l.meet_[l.index(l.bottom_, x)];
    l.top_ = l.join_[l.index(l.top_, x)];
  }
  return l;
}

inline std::pair<Element, Element> meet_join(const Lattice& l, Element x, Element y) {
  return {l.meet(x, y), l.join(x, y)};
}

inline ElementClassification classify_elements(const Lattice& l) {
  return classify_elements(l.digraph());
}

inline int nullity(const Lattice& l) { return nullity(l.digraph()); }

inline Lattice dual(const Lattice& l) { return as_lattice(dual(l.digraph())); }

inline bool is_chain(const Lattice& l) { return classify_elements(l).red.empty(); }

/// Greedy dismantling: strip a doubly irreducible element of the current
/// sublattice until one element remains or none is removable. Removing a
/// doubly irreducible element never destroys dismantlability, so the greedy
/// order does not matter.
inline bool is_dismantlable(const Lattice& l) {
  const int n = l.size();
  std::vector<bool> alive(n, true);
  int remaining = n;
  auto covers_within = [&](Element a, Element b) {
    if (!l.less(a, b)) return false;
    for (Element c = 0; c < n; ++c)
      if (alive[c] && l.less(a, c) && l.less(c, b)) return false;
    return true;
  };
  while (remaining > 1) {
    Element victim = -1;
    for (Element x = 0; x < n && victim < 0; ++x) {
      if (!alive[x]) continue;
      int ups = 0, downs = 0;
      for (Element y = 0; y < n; ++y) {
        if (!alive[y] || y == x) continue;
        if (covers_within(x, y)) ++ups;
        if (covers_within(y, x)) ++downs;
      }
      if (ups <= 1 && downs <= 1) victim = x;
    }
    if (victim < 0) return false;
    alive[victim] = false;
    --remaining;
  }
  return true;
}

/// Exhaustive search for an induced crown x1 < y1 > x2 < y2 > ... > x_k < y_k > x1
/// with k >= 3 and no comparabilities beyond the alternating ones.
inline bool contains_crown(const Lattice& l) {
  const int n = l.size();
  // Crown members are never the bounds.
  std::vector<Element> candidates;
  for (Element x = 0; x < n; ++x)
    if (x != l.bottom() && x != l.top()) candidates.push_back(x);
  if (candidates.size() < 6) return false;

  std::vector<Element> path;  // x1, y1, x2, y2, ...
  std::vector<bool> used(n, false);

  // Checks that `v` relates to every chosen element exactly as the crown
  // pattern demands when placed at position path.size().
  auto fits = [&](Element v, bool closing) {
    const std::size_t pos = path.size();
    const bool v_is_low = pos % 2 == 0;
    for (std::size_t i = 0; i < pos; ++i) {
      Element u = path[i];
      if (u == v) return false;
      bool adjacent = i + 1 == pos || (closing && i == 0);
      if (adjacent) {
        if (v_is_low ? !l.less(v, u) : !l.less(u, v)) return false;
      } else if (l.comparable(u, v)) {
        return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self) -> bool {
    const std::size_t pos = path.size();
    const bool is_high = pos % 2 == 1;
    for (Element v : candidates) {
      if (used[v]) continue;
      // x1 carries the smallest label among the x's.
      if (!is_high && pos > 0 && v < path[0]) continue;
      if (is_high && pos >= 5 && fits(v, true)) return true;
      if (!fits(v, false)) continue;
      path.push_back(v);
      used[v] = true;
      if (self(self)) return true;
      used[v] = false;
      path.pop_back();
    }
    return false;
  };
  return search(search);
}

/// All maximal chains of the interval [a, b], each listed from a to b,
/// in lexicographic order. Throws NotComparable unless a < b.
inline std::vector<std::vector<Element>> maximal_chains_in_interval(const Lattice& l, Element a,
                                                                    Element b) {
  if (!l.less(a, b))
    throw Error(ErrorKind::NotComparable,
                std::to_string(a) + " is not strictly below " + std::to_string(b), Cover{a, b});
  std::vector<std::vector<Element>> chains;
  std::vector<Element> path{a};
  auto walk = [&](auto&& self, Element x) -> void {
    if (x == b) {
      chains.push_back(path);
      return;
    }
    std::vector<Element> next(l.digraph().upper_covers(x).begin(),
                              l.digraph().upper_covers(x).end());
    std::sort(next.begin(), next.end());
    for (Element y : next) {
      if (!l.leq(y, b)) continue;
      path.push_back(y);
      self(self, y);
      path.pop_back();
    }
  };
  walk(walk, a);
  return chains;
}

}  // namespace latcount

#pragma once

// Canonical labeling of cover digraphs.
//
// Colour refinement seeded by (height, depth, in-degree, out-degree), then
// individualization/refinement over the first non-singleton cell. Every
// discrete leaf yields an adjacency encoding; the minimum over all leaves is
// the certificate. Automorphisms discovered at equal leaves prune sibling
// branches (orbit pruning) and let the search jump back to the first path.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "latcount/poset.hpp"

namespace latcount {

/// Isomorphism-invariant byte string: one byte holding n, then the n x n
/// adjacency matrix under the canonical labeling, row-major, packed
/// most-significant bit first. Byte order is the comparison order.
struct Certificate {
  std::vector<std::uint8_t> bytes;

  friend auto operator<=>(const Certificate&, const Certificate&) = default;
  friend bool operator==(const Certificate&, const Certificate&) = default;

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
      out.push_back(digits[b >> 4]);
      out.push_back(digits[b & 0xF]);
    }
    return out;
  }
};

/// Canonical labeling: `label[x]` is the canonical position of element x.
struct CanonicalForm {
  Certificate certificate;
  std::vector<Element> label;
};

/// Upper limit on element count for canonization (n is stored in one byte).
inline constexpr int kMaxCanonicalSize = 255;

namespace detail {

class Canonizer {
 public:
  explicit Canonizer(const CoverDigraph& p) : p_(p), n_(p.size()) {
    adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (auto [lo, hi] : p.covers()) adj_[static_cast<std::size_t>(lo) * n_ + hi] = 1;
  }

  CanonicalForm run() {
    if (n_ > kMaxCanonicalSize)
      throw Error(ErrorKind::SizeLimitExceeded,
                  "canonical form limited to " + std::to_string(kMaxCanonicalSize) + " elements");
    if (n_ == 0) return {Certificate{{0}}, {}};
    search(initial_partition(), {}, true);
    CanonicalForm out;
    out.certificate.bytes = best_;
    out.label.assign(n_, 0);
    for (int pos = 0; pos < n_; ++pos) out.label[best_order_[pos]] = pos;
    return out;
  }

 private:
  using Cell = std::vector<Element>;
  using Partition = std::vector<Cell>;

  bool edge(Element a, Element b) const { return adj_[static_cast<std::size_t>(a) * n_ + b] != 0; }

  Partition initial_partition() const {
    // height: longest chain below, depth: longest chain above.
    std::vector<int> height(n_, 0), depth(n_, 0);
    std::vector<Element> topo;
    std::vector<int> indeg(n_, 0);
    for (auto [lo, hi] : p_.covers()) ++indeg[hi];
    for (Element x = 0; x < n_; ++x)
      if (indeg[x] == 0) topo.push_back(x);
    for (std::size_t i = 0; i < topo.size(); ++i)
      for (Element y : p_.upper_covers(topo[i]))
        if (--indeg[y] == 0) topo.push_back(y);
    for (Element x : topo)
      for (Element y : p_.upper_covers(x)) height[y] = std::max(height[y], height[x] + 1);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
      for (Element y : p_.upper_covers(*it)) depth[*it] = std::max(depth[*it], depth[y] + 1);

    std::map<std::array<int, 4>, Cell> groups;
    for (Element x = 0; x < n_; ++x)
      groups[{height[x], depth[x], static_cast<int>(p_.lower_covers(x).size()),
              static_cast<int>(p_.upper_covers(x).size())}]
          .push_back(x);
    Partition part;
    for (auto& [key, cell] : groups) part.push_back(std::move(cell));
    return part;
  }

  // Splits cells by (cell, out-count, in-count) profiles until stable.
  void refine(Partition& part) const {
    std::vector<int> cell_of(n_);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < part.size(); ++c)
        for (Element v : part[c]) cell_of[v] = static_cast<int>(c);
      for (std::size_t c = 0; c < part.size(); ++c) {
        if (part[c].size() == 1) continue;
        std::map<std::vector<int>, Cell> split;
        for (Element v : part[c]) {
          std::vector<int> profile(2 * part.size(), 0);
          for (Element u : p_.upper_covers(v)) ++profile[2 * cell_of[u]];
          for (Element u : p_.lower_covers(v)) ++profile[2 * cell_of[u] + 1];
          split[profile].push_back(v);
        }
        if (split.size() == 1) continue;
        Partition pieces;
        for (auto& [profile, cell] : split) pieces.push_back(std::move(cell));
        part.erase(part.begin() + static_cast<std::ptrdiff_t>(c));
        part.insert(part.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }

  std::vector<std::uint8_t> encode(const std::vector<Element>& order) const {
    std::vector<std::uint8_t> bytes(1 + (static_cast<std::size_t>(n_) * n_ + 7) / 8, 0);
    bytes[0] = static_cast<std::uint8_t>(n_);
    std::size_t bit = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j, ++bit)
        if (edge(order[i], order[j])) bytes[1 + bit / 8] |= static_cast<std::uint8_t>(0x80 >> (bit % 8));
    return bytes;
  }

  // Orbits of the subgroup generated by known automorphisms that fix every
  // element of `prefix`.
  std::vector<Element> orbits_fixing(const std::vector<Element>& prefix) const {
    std::vector<Element> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Element x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      if (!std::all_of(prefix.begin(), prefix.end(), [&](Element v) { return gamma[v] == v; }))
        continue;
      for (Element x = 0; x < n_; ++x) {
        Element a = find(x), b = find(gamma[x]);
        if (a != b) parent[a] = b;
      }
    }
    for (Element x = 0; x < n_; ++x) parent[x] = find(x);
    return parent;
  }

  void record_automorphism(const std::vector<Element>& from, const std::vector<Element>& to) {
    std::vector<Element> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    automorphisms_.push_back(std::move(gamma));
  }

  // Returns the level to unwind to, or -1 to continue normally.
  int search(Partition part, std::vector<Element> prefix, bool on_first_path) {
    refine(part);
    const int level = static_cast<int>(prefix.size());
    if (part.size() == static_cast<std::size_t>(n_)) {
      std::vector<Element> order;
      order.reserve(n_);
      for (const auto& cell : part) order.push_back(cell.front());
      auto bytes = encode(order);
      if (first_.empty()) {
        first_ = best_ = bytes;
        first_order_ = best_order_ = order;
        return -1;
      }
      if (bytes == first_) {
        record_automorphism(first_order_, order);
        return divergence_;
      }
      if (bytes == best_) {
        record_automorphism(best_order_, order);
        return -1;
      }
      if (bytes < best_) {
        best_ = std::move(bytes);
        best_order_ = std::move(order);
      }
      return -1;
    }

    std::size_t target = 0;
    while (part[target].size() == 1) ++target;
    const Cell cell = part[target];
    std::vector<Element> tried;
    for (std::size_t i = 0; i < cell.size(); ++i) {
      const Element v = cell[i];
      if (!tried.empty()) {
        auto orbit = orbits_fixing(prefix);
        if (std::any_of(tried.begin(), tried.end(), [&](Element t) { return orbit[t] == orbit[v]; }))
          continue;
      }
      Partition child = part;
      Cell rest;
      for (Element u : cell)
        if (u != v) rest.push_back(u);
      child[target] = Cell{v};
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
      auto child_prefix = prefix;
      child_prefix.push_back(v);
      const bool child_first = on_first_path && i == 0;
      if (on_first_path) divergence_ = level;
      const int unwind = search(std::move(child), std::move(child_prefix), child_first);
      tried.push_back(v);
      if (unwind >= 0 && unwind < level) return unwind;
    }
    return -1;
  }

  const CoverDigraph& p_;
  int n_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::uint8_t> first_, best_;
  std::vector<Element> first_order_, best_order_;
  std::vector<std::vector<Element>> automorphisms_;
  int divergence_ = 0;
};

}  // namespace detail

inline CanonicalForm canonical_form(const CoverDigraph& p) { return detail::Canonizer(p).run(); }

inline Certificate canonical_certificate(const CoverDigraph& p) {
  return canonical_form(p).certificate;
}

inline Certificate canonical_certificate(const Lattice& l) {
  return canonical_certificate(l.digraph());
}

/// The cover digraph written in canonical labels.
inline CoverDigraph canonical_digraph(const CoverDigraph& p) {
  return relabel(p, canonical_form(p).label);
}

/// Rebuilds the canonical cover digraph stored in a certificate.
inline CoverDigraph decode_certificate(const Certificate& cert) {
  if (cert.bytes.empty()) throw Error(ErrorKind::LabelOutOfRange, "empty certificate");
  const int n = cert.bytes[0];
  std::vector<Cover> covers;
  std::size_t bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j, ++bit)
      if (cert.bytes[1 + bit / 8] & (0x80 >> (bit % 8))) covers.emplace_back(i, j);
  return build_poset(n, std::move(covers));
}

}  // namespace latcount

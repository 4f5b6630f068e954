#pragma once

// Brute-force lattice censuses used as oracles for the closed forms.
//
// Two generators with no shared candidate code:
//   * enumerate_all_lattices: every bounded poset on n elements, built by
//     adding maximal elements with down-closed down-sets, kept when it is a
//     lattice.
//   * enumerate_by_reducible: chain padding around a spine of r reducible
//     elements, with chains hung between pairs of them.
// Both deduplicate by canonical certificate and return sorted certificates.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "latcount/adjunct.hpp"
#include "latcount/canonical.hpp"
#include "latcount/formulas.hpp"
#include "latcount/reduction.hpp"

namespace latcount {

inline constexpr int kFullCensusLimit = 8;
inline constexpr int kReducibleCensusLimit = 12;

namespace detail {

inline unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

inline std::vector<Certificate> sorted_unique(std::set<Certificate> s) { return {s.begin(), s.end()}; }

}  // namespace detail

/// Certificates of all lattices on n elements, up to isomorphism.
inline std::vector<Certificate> enumerate_all_lattices(int n) {
  if (n > kFullCensusLimit)
    throw Error(ErrorKind::SizeLimitExceeded,
                "full lattice census limited to n <= " + std::to_string(kFullCensusLimit));
  if (n < 1) return {};
  if (n <= 2) return {canonical_certificate(chain(n))};

  // Inner elements 1..m sit between bottom 0 and top m + 1. down[i] is the
  // strict down-set of inner element i as a bitmask over inner indices.
  const int m = n - 2;
  std::vector<std::uint32_t> down(m, 0);
  std::set<Certificate> found;

  auto emit = [&] {
    std::vector<Cover> covers;
    for (int b = 0; b < m; ++b) {
      std::uint32_t below = down[b];
      if (below == 0) covers.emplace_back(0, b + 1);
      for (int a = 0; a < m; ++a) {
        if (!(below >> a & 1u)) continue;
        bool direct = true;
        for (int c = 0; c < m && direct; ++c)
          if ((below >> c & 1u) && (down[c] >> a & 1u)) direct = false;
        if (direct) covers.emplace_back(a + 1, b + 1);
      }
    }
    for (int a = 0; a < m; ++a) {
      bool maximal = true;
      for (int b = 0; b < m && maximal; ++b)
        if (down[b] >> a & 1u) maximal = false;
      if (maximal) covers.emplace_back(a + 1, m + 1);
    }
    try {
      found.insert(canonical_certificate(as_lattice(build_poset(n, std::move(covers)))));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotALattice) throw;
    }
  };

  auto extend = [&](auto&& self, int i) -> void {
    if (i == m) {
      emit();
      return;
    }
    for (std::uint32_t set = 0; set < (1u << i); ++set) {
      bool closed = true;
      for (int j = 0; j < i && closed; ++j)
        if ((set >> j & 1u) && (down[j] & ~set)) closed = false;
      if (!closed) continue;
      down[i] = set;
      self(self, i + 1);
    }
  };
  extend(extend, 0);
  return detail::sorted_unique(std::move(found));
}

namespace detail {

// All lattices with exactly r reducible elements that put c1 chain elements
// below the lowest reducible and c2 above the highest.
inline std::set<Certificate> reducible_job(int n, int r, int c1, int c2) {
  std::set<Certificate> found;
  std::vector<std::pair<int, int>> pairs;  // indices into the reducibles
  for (int i = 0; i + 1 < r; ++i) pairs.emplace_back(i, i + 1);
  if (r == 3) pairs.emplace_back(0, 2);

  std::vector<int> gaps(r - 1, 0);
  std::vector<std::vector<int>> lengths(pairs.size());

  auto realize_all = [&] {
    std::vector<int> pos(r);
    int spine = c1;
    for (int i = 0; i < r; ++i) {
      pos[i] = spine;
      spine += 1 + (i + 1 < r ? gaps[i] : 0);
    }
    spine += c2;
    AdjunctRep rep{spine, {}};
    for (std::size_t p = 0; p < pairs.size(); ++p)
      for (int len : lengths[p]) rep.attachments.push_back({pos[pairs[p].first], pos[pairs[p].second], len});
    const Lattice l = realize(rep);
    if (static_cast<int>(classify_elements(l).red.size()) == r) found.insert(canonical_certificate(l));
  };

  // Non-decreasing length lists per pair. On a pair of neighbours the spine
  // segment is taken to be the shortest chain, so parts are at least its gap.
  auto fill = [&](auto&& self, std::size_t p, int remaining) -> void {
    if (p == pairs.size()) {
      if (remaining == 0) realize_all();
      return;
    }
    const bool neighbours = pairs[p].second == pairs[p].first + 1;
    const int gap = neighbours ? gaps[pairs[p].first] : 0;
    const bool allowed = !neighbours || gap >= 1;
    const int min_part = std::max(1, gap);
    auto parts = [&](auto&& rec, int left, int floor) -> void {
      self(self, p + 1, left);
      if (!allowed) return;
      for (int part = floor; part <= left; ++part) {
        lengths[p].push_back(part);
        rec(rec, left - part, part);
        lengths[p].pop_back();
      }
    };
    parts(parts, remaining, min_part);
  };

  auto choose_gaps = [&](auto&& self, int i, int remaining) -> void {
    if (i == r - 1) {
      fill(fill, 0, remaining);
      return;
    }
    for (int g = 0; g <= remaining; ++g) {
      gaps[i] = g;
      self(self, i + 1, remaining - g);
    }
  };
  choose_gaps(choose_gaps, 0, n - c1 - c2 - r);
  return found;
}

}  // namespace detail

/// Certificates of the lattices on n elements with exactly r reducible
/// elements, r in {2, 3}. Work is split by chain padding across `threads`
/// workers (0 picks the hardware count); the result does not depend on it.
inline std::vector<Certificate> enumerate_by_reducible(int n, int r, unsigned threads = 0) {
  if (r != 2 && r != 3) throw std::invalid_argument("reducible count must be 2 or 3");
  if (n > kReducibleCensusLimit)
    throw Error(ErrorKind::SizeLimitExceeded,
                "reducible census limited to n <= " + std::to_string(kReducibleCensusLimit));
  std::vector<std::pair<int, int>> jobs;
  for (int c1 = 0; c1 <= n - r - 1; ++c1)
    for (int c2 = 0; c1 + c2 <= n - r - 1; ++c2) jobs.emplace_back(c1, c2);

  const unsigned workers = std::min<unsigned>(detail::resolve_threads(threads), std::max<std::size_t>(jobs.size(), 1));
  std::vector<std::future<std::set<Certificate>>> futures;
  for (unsigned w = 0; w < workers; ++w)
    futures.push_back(std::async(std::launch::async, [&, w] {
      std::set<Certificate> local;
      for (std::size_t j = w; j < jobs.size(); j += workers)
        local.merge(detail::reducible_job(n, r, jobs[j].first, jobs[j].second));
      return local;
    }));
  std::set<Certificate> merged;
  for (auto& f : futures) merged.merge(f.get());
  return detail::sorted_unique(std::move(merged));
}

inline Lattice lattice_of(const Certificate& cert) { return as_lattice(decode_certificate(cert)); }

/// Top join-reducible and bottom meet-reducible.
inline bool is_block(const Lattice& l) {
  const auto& g = l.digraph();
  return g.lower_covers(l.top()).size() >= 2 && g.upper_covers(l.bottom()).size() >= 2;
}

struct OracleCensus {
  int n = 0;
  std::map<int, std::vector<Certificate>> classes;            // by reducible count
  std::map<FbbClass, std::vector<Certificate>> fbb_fibers;  // three-reducible class
  bool complete = false;  // true when `classes` covers every lattice on n elements
};

/// Full census by reducible count for n <= kFullCensusLimit; beyond that only
/// the two- and three-reducible classes, from the adjunct generator.
inline OracleCensus census(int n, unsigned threads = 0) {
  OracleCensus c;
  c.n = n;
  if (n <= kFullCensusLimit) {
    for (const auto& cert : enumerate_all_lattices(n))
      c.classes[static_cast<int>(classify_elements(lattice_of(cert)).red.size())].push_back(cert);
    c.complete = true;
  } else if (n <= kReducibleCensusLimit) {
    c.classes[2] = enumerate_by_reducible(n, 2, threads);
    c.classes[3] = enumerate_by_reducible(n, 3, threads);
  } else {
    throw Error(ErrorKind::SizeLimitExceeded,
                "census limited to n <= " + std::to_string(kReducibleCensusLimit));
  }
  for (FbbClass f : {FbbClass::F1, FbbClass::F2, FbbClass::F3, FbbClass::F4}) c.fbb_fibers[f];
  if (auto it = c.classes.find(3); it != c.classes.end())
    for (const auto& cert : it->second) c.fbb_fibers[classify_fbb(lattice_of(cert))].push_back(cert);
  return c;
}

/// Every formula the verifier checks. Tests swap entries to inject faults.
struct FormulaSet {
  std::function<Count(int)> two_reducible;
  std::function<Count(int)> two_reducible_thakare;
  std::function<Count(int)> three_reducible;
  std::function<Count(int)> l1, l2, l3, l4;
  std::function<Count(int, int)> two_reducible_blocks;
  std::function<Count(int, int)> b1, b2, b3, b4;
};

inline FormulaSet default_formulas() {
  FormulaSet f;
  f.two_reducible = [](int n) { return two_reducible_lattices(n, TwoReducibleForm::BlockFirst); };
  f.two_reducible_thakare = [](int n) { return two_reducible_lattices(n, TwoReducibleForm::Thakare); };
  f.three_reducible = [](int n) { return three_reducible_lattices(n); };
  f.l1 = [](int n) { return l1_lattices(n); };
  f.l2 = [](int n) { return l2_lattices(n); };
  f.l3 = [](int n) { return l3_lattices(n); };
  f.l4 = [](int n) { return l4_lattices(n); };
  f.two_reducible_blocks = [](int m, int k) { return two_reducible_blocks(m, k); };
  f.b1 = [](int m, int k) { return b1_blocks(m, k); };
  f.b2 = [](int m, int k) { return b1_blocks(m, k); };
  f.b3 = [](int m, int k) { return b3_blocks(m, k); };
  f.b4 = [](int m, int k) { return b4_blocks(m, k); };
  return f;
}

struct CensusCell {
  std::string family;
  int n = 0;
  std::optional<int> k;  // edge excess for block strata: |E| = n + k
  Count expected;        // formula
  Count observed;        // oracle
  bool agree = false;
  std::optional<Certificate> witness;
};

struct CensusReport {
  int n = 0;
  std::vector<CensusCell> cells;

  bool all_agree() const {
    return std::all_of(cells.begin(), cells.end(), [](const CensusCell& c) { return c.agree; });
  }
};

namespace detail {

inline CensusCell count_cell(std::string family, int n, std::optional<int> k, Count expected,
                             const std::vector<Certificate>& members) {
  CensusCell c{std::move(family), n, k, std::move(expected), Count(members.size()), false, std::nullopt};
  c.agree = c.expected == c.observed;
  if (!c.agree && !members.empty()) c.witness = members.front();
  return c;
}

inline CensusCell set_cell(std::string family, int n, const std::vector<Certificate>& full,
                           const std::vector<Certificate>& generated) {
  CensusCell c{std::move(family), n, std::nullopt, Count(full.size()), Count(generated.size()), full == generated,
               std::nullopt};
  if (!c.agree) {
    std::vector<Certificate> diff;
    std::set_symmetric_difference(full.begin(), full.end(), generated.begin(), generated.end(),
                                  std::back_inserter(diff));
    if (!diff.empty()) c.witness = diff.front();
  }
  return c;
}

}  // namespace detail

/// Compares every formula against the oracle for each n in 1..n_max. Block
/// strata use the blocks among the generated lattices; for n within the full
/// census limit the generator is also checked against the full search.
inline std::vector<CensusReport> verify(int n_max, const FormulaSet& formulas = default_formulas(),
                                        unsigned threads = 0) {
  if (n_max > kReducibleCensusLimit)
    throw Error(ErrorKind::SizeLimitExceeded,
                "verification limited to n <= " + std::to_string(kReducibleCensusLimit));
  std::vector<CensusReport> reports;
  for (int n = 1; n <= n_max; ++n) {
    CensusReport report;
    report.n = n;
    auto& cells = report.cells;
    const auto two = enumerate_by_reducible(n, 2, threads);
    const auto three = enumerate_by_reducible(n, 3, threads);

    cells.push_back(detail::count_cell("two_reducible", n, std::nullopt, formulas.two_reducible(n), two));
    cells.push_back(
        detail::count_cell("two_reducible_thakare", n, std::nullopt, formulas.two_reducible_thakare(n), two));
    cells.push_back(detail::count_cell("three_reducible", n, std::nullopt, formulas.three_reducible(n), three));

    std::map<FbbClass, std::vector<Certificate>> fibers;
    std::map<FbbClass, std::map<int, std::vector<Certificate>>> block_fibers;
    std::map<int, std::vector<Certificate>> two_blocks;
    for (const auto& cert : three) {
      const Lattice l = lattice_of(cert);
      const FbbClass cls = classify_fbb(l);
      fibers[cls].push_back(cert);
      if (is_block(l)) block_fibers[cls][static_cast<int>(l.digraph().edge_count()) - n].push_back(cert);
    }
    for (const auto& cert : two) {
      const Lattice l = lattice_of(cert);
      if (is_block(l)) two_blocks[static_cast<int>(l.digraph().edge_count()) - n].push_back(cert);
    }

    const std::pair<const char*, FbbClass> classes[] = {
        {"L1", FbbClass::F1}, {"L2", FbbClass::F2}, {"L3", FbbClass::F3}, {"L4", FbbClass::F4}};
    const std::function<Count(int)>* lattice_formulas[] = {&formulas.l1, &formulas.l2, &formulas.l3, &formulas.l4};
    const std::function<Count(int, int)>* block_formulas[] = {&formulas.b1, &formulas.b2, &formulas.b3,
                                                              &formulas.b4};
    for (int i = 0; i < 4; ++i)
      cells.push_back(
          detail::count_cell(classes[i].first, n, std::nullopt, (*lattice_formulas[i])(n), fibers[classes[i].second]));

    for (int k = 0; k <= std::max(0, n - 4); ++k) {
      cells.push_back(
          detail::count_cell("two_reducible_blocks", n, k, formulas.two_reducible_blocks(n, k), two_blocks[k]));
      for (int i = 0; i < 4; ++i) {
        std::string family = "B";
        family += static_cast<char>('1' + i);
        cells.push_back(detail::count_cell(std::move(family), n, k, (*block_formulas[i])(n, k),
                                           block_fibers[classes[i].second][k]));
      }
    }

    if (n <= kFullCensusLimit) {
      const auto full = census(n, threads);
      auto fiber = [&](int r) {
        auto it = full.classes.find(r);
        return it == full.classes.end() ? std::vector<Certificate>{} : it->second;
      };
      cells.push_back(detail::set_cell("census_r2", n, fiber(2), two));
      cells.push_back(detail::set_cell("census_r3", n, fiber(3), three));
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace latcount

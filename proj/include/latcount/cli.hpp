#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification mismatch,
// 2 usage error, 3 size limit.

#include <CLI11.hpp>
#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "latcount/document.hpp"
#include "latcount/enumeration.hpp"
#include "latcount/formulas.hpp"

namespace latcount {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;
inline constexpr int kScale = 3;
}  // namespace exit_code

namespace detail {

// Exact integers as JSON numbers when they fit in 64 bits, strings otherwise.
inline nlohmann::ordered_json json_count(const Count& c) {
  if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
  return c.str();
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void check_range(int from, int to) {
  if (from > to) throw detail::UsageError("--from must not exceed --to");
  if (from < 0) throw detail::UsageError("sizes must be non-negative");
}

inline void write_cells_json(const std::vector<CensusReport>& reports, std::ostream& os) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports)
    for (const auto& c : r.cells) {
      nlohmann::ordered_json j;
      j["family"] = c.family;
      j["n"] = c.n;
      j["k"] = c.k ? nlohmann::ordered_json(*c.k) : nlohmann::ordered_json(nullptr);
      j["expected"] = json_count(c.expected);
      j["observed"] = json_count(c.observed);
      j["agree"] = c.agree;
      if (c.witness) {
        j["witness"] = c.witness->hex();
        j["witness_lattice"] = to_json(make_document(lattice_of(*c.witness)));
      } else {
        j["witness"] = nullptr;
      }
      arr.push_back(std::move(j));
    }
  os << arr.dump(2) << '\n';
}

}  // namespace detail

/// Runs one command line. `formulas` is what `verify` checks against.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   const FormulaSet& formulas = default_formulas()) {
  CLI::App app{"Counts and enumerates lattices with two or three reducible elements.", "latcount"};
  app.require_subcommand(1);

  int reducible = 3, n = 0, from = 0, to = 0, n_max = 8;
  unsigned threads = 0;
  std::string form = "block_first", table_format = "csv", blocks_format = "csv", enum_format = "json", out_path,
                                     json_path;

  auto* count = app.add_subcommand("count", "Closed-form count of lattices on n elements");
  count->add_option("--reducible,-r", reducible, "Number of reducible elements")->required()->check(CLI::IsMember({2, 3}));
  count->add_option("--n,-n", n, "Element count")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--form", form, "Two-reducible summation form")
      ->check(CLI::IsMember({"thakare", "block_first", "block-first"}));

  auto* table = app.add_subcommand("table", "Closed-form counts for a range of n");
  table->add_option("--reducible,-r", reducible, "Number of reducible elements")->required()->check(CLI::IsMember({2, 3}));
  table->add_option("--from,--n-from", from, "Smallest n")->required();
  table->add_option("--to,--n-to", to, "Largest n")->required();
  table->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->default_val("csv");

  auto* blocks = app.add_subcommand("blocks", "Maximal-block counts per family for a range of m");
  blocks->add_option("--from,--m-from", from, "Smallest m")->required();
  blocks->add_option("--to,--m-to", to, "Largest m")->required();
  blocks->add_option("--format", blocks_format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->default_val("csv");

  int enum_reducible = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Every lattice in a class, ordered by certificate");
  enumerate->add_option("--n,-n", n, "Element count")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--reducible,-r", enum_reducible, "2 or 3; omit for every lattice (small n only)")
      ->check(CLI::IsMember({2, 3}));
  enumerate->add_option("--format", enum_format, "json, dot or edges")
      ->check(CLI::IsMember({"json", "dot", "edges"}))
      ->default_val("json");
  enumerate->add_option("--out,-o", out_path, "Write here instead of standard output");
  enumerate->add_option("--threads", threads, "Worker threads (0 = hardware)");

  auto* verify_cmd = app.add_subcommand("verify", "Check every formula against the enumeration oracle");
  verify_cmd->add_option("--n-max", n_max, "Largest n to check")->check(CLI::NonNegativeNumber)->default_val(8);
  verify_cmd->add_option("--json", json_path, "Also write the full report as JSON");
  verify_cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  try {
    if (*count) {
      const auto f = form == "thakare" ? TwoReducibleForm::Thakare : TwoReducibleForm::BlockFirst;
      out << (reducible == 2 ? two_reducible_lattices(n, f) : three_reducible_lattices(n)) << '\n';
      return exit_code::kOk;
    }

    if (*table) {
      detail::check_range(from, to);
      auto rows = nlohmann::ordered_json::array();
      if (table_format == "csv") out << (reducible == 2 ? "n,total\n" : "n,l1,l2,l3,l4,total\n");
      for (int m = from; m <= to; ++m) {
        nlohmann::ordered_json row;
        row["n"] = m;
        if (reducible == 2) {
          row["total"] = detail::json_count(two_reducible_lattices(m));
          if (table_format == "csv") out << m << ',' << two_reducible_lattices(m) << '\n';
        } else {
          const Count l1 = l1_lattices(m), l2 = l2_lattices(m), l3 = l3_lattices(m), l4 = l4_lattices(m);
          const Count total = three_reducible_lattices(m);
          row["l1"] = detail::json_count(l1);
          row["l2"] = detail::json_count(l2);
          row["l3"] = detail::json_count(l3);
          row["l4"] = detail::json_count(l4);
          row["total"] = detail::json_count(total);
          if (table_format == "csv") out << m << ',' << l1 << ',' << l2 << ',' << l3 << ',' << l4 << ',' << total << '\n';
        }
        rows.push_back(std::move(row));
      }
      if (table_format == "json") out << rows.dump() << '\n';
      return exit_code::kOk;
    }

    if (*blocks) {
      detail::check_range(from, to);
      auto rows = nlohmann::ordered_json::array();
      if (blocks_format == "csv") out << "m,b,b1,b2,b3,b4\n";
      for (int m = from; m <= to; ++m) {
        const Count b = two_reducible_blocks(m), b1 = b1_family(m), b3 = b3_family(m), b4 = b4_family(m);
        if (blocks_format == "csv") out << m << ',' << b << ',' << b1 << ',' << b1 << ',' << b3 << ',' << b4 << '\n';
        nlohmann::ordered_json row;
        row["m"] = m;
        row["b"] = detail::json_count(b);
        row["b1"] = detail::json_count(b1);
        row["b2"] = detail::json_count(b1);
        row["b3"] = detail::json_count(b3);
        row["b4"] = detail::json_count(b4);
        rows.push_back(std::move(row));
      }
      if (blocks_format == "json") out << rows.dump() << '\n';
      return exit_code::kOk;
    }

    if (*enumerate) {
      const auto certs = enum_reducible == 0 ? enumerate_all_lattices(n) : enumerate_by_reducible(n, enum_reducible, threads);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw detail::UsageError("cannot open " + out_path);
      }
      std::ostream& sink = out_path.empty() ? out : file;
      for (std::size_t i = 0; i < certs.size(); ++i) {
        const Lattice l = lattice_of(certs[i]);
        if (enum_format == "json") sink << dump_document(make_document(l)) << '\n';
        else if (enum_format == "dot") sink << to_dot(l.digraph(), "L" + std::to_string(i));
        else sink << (i ? "\n\n" : "") << to_edges(l.digraph());
      }
      if (enum_format == "edges" && !certs.empty()) sink << '\n';
      err << certs.size() << '\n';
      return exit_code::kOk;
    }

    if (*verify_cmd) {
      const auto reports = verify(n_max, formulas, threads);
      std::size_t cells = 0, bad = 0;
      for (const auto& r : reports)
        for (const auto& c : r.cells) {
          ++cells;
          out << c.family << " n=" << c.n;
          if (c.k) out << " k=" << *c.k;
          out << " expected=" << c.expected << " observed=" << c.observed << ' ' << (c.agree ? "OK" : "MISMATCH")
              << '\n';
          if (!c.agree) {
            ++bad;
            if (c.witness) out << "  witness " << c.witness->hex() << '\n' << to_edges(lattice_of(*c.witness).digraph()) << '\n';
          }
        }
      out << (bad == 0 ? "all " + std::to_string(cells) + " cells agree" : std::to_string(bad) + " of " + std::to_string(cells) + " cells disagree")
          << '\n';
      if (!json_path.empty()) {
        std::ofstream file(json_path);
        if (!file) throw detail::UsageError("cannot open " + json_path);
        detail::write_cells_json(reports, file);
      }
      return bad == 0 ? exit_code::kOk : exit_code::kMismatch;
    }
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::SizeLimitExceeded ? exit_code::kScale : exit_code::kUsage;
  }
  return exit_code::kUsage;
}

}  // namespace latcount

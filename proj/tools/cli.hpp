#pragma once

#include "report.hpp"

#include <pentakirch/pentakirch.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace pentakirch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Bad arguments detected after parsing (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Table, Csv, Json };

inline Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw UsageError("unknown format '" + s + "' (expected table, csv or json)");
}

struct ComputeArgs {
  int n = 0;
  std::string variant = "cylinder";
  std::vector<std::string> what{"kf"};
  std::string method = "closed";
  std::string format = "table";
  int precision = kKirchhoffDigits;
  std::string out;
};

struct PublishedTableArgs {
  std::string format = "table";
  std::string out;
};

struct SeriesArgs {
  std::string variant = "cylinder";
  int n_max = 10;
  std::string format = "csv";
  int precision = kKirchhoffDigits;
  std::string out;
};

namespace detail {

inline double rel_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

/// Writes to --out when given, otherwise to the console stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& console) : console_(console) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : console_; }

 private:
  std::ofstream file_;
  std::ostream& console_;
};

inline void emit(const std::vector<InvariantReport>& reports, Format format, std::ostream& os,
                 bool force_array = false) {
  switch (format) {
    case Format::Json:
      write_json(os, reports, force_array);
      break;
    case Format::Csv:
      write_csv(os, reports);
      break;
    case Format::Table:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) os << '\n';
        write_table(os, reports[i]);
      }
      break;
  }
}

}  // namespace detail

/// Computes the requested invariants. Returns the exit code; agreement
/// failures under --method all give 1.
inline int cmd_compute(const ComputeArgs& args, std::ostream& out) {
  require_chain_length(args.n);
  const Variant variant = parse_variant(args.variant);
  const Format format = parse_format(args.format);
  if (args.precision < 0 || args.precision > 200) throw UsageError("--precision must be in [0, 200]");
  const std::string& method = args.method;
  const bool all = method == "all";
  const bool closed = all || method == "closed";
  const bool exact = all || method == "exact";
  const bool spectral = all || method == "spectral";

  auto wants = [&](const char* w) { return std::find(args.what.begin(), args.what.end(), w) != args.what.end(); };
  for (const auto& w : args.what) {
    if (w != "kf" && w != "wiener" && w != "trees" && w != "resistance") {
      throw UsageError("unknown --what item '" + w + "' (expected kf, wiener, trees, resistance)");
    }
  }
  if (wants("resistance") && method == "closed") {
    throw UsageError("resistance distances have no closed form; use --method exact, spectral or all");
  }

  const GraphFamily family{variant, args.n};
  const Graph g = build_chain(family);
  InvariantReport r{args.n, std::string(to_string(variant))};
  bool agree = true;

  std::optional<BigRational> kf_value;
  std::optional<double> kf_float;
  if (wants("kf")) {
    if (closed) {
      kf_value = kirchhoff_closed(family);
      r.kf_closed = to_decimal(*kf_value, args.precision);
    }
    if (exact) {
      const BigRational e = kirchhoff_exact(g);
      r.kf_exact = to_decimal(e, args.precision);
      if (kf_value && *kf_value != e) agree = false;
      if (!kf_value) kf_value = e;
    }
    if (spectral) {
      r.kf_spectral = kirchhoff_spectral(g);
      kf_float = *r.kf_spectral;
      if (kf_value && detail::rel_gap(to_double(*kf_value), *r.kf_spectral) > 1e-8) agree = false;
    }
  }

  if (wants("wiener")) {
    const std::int64_t bfs = (exact || spectral) ? wiener_index_bfs(g) : 0;
    if (closed) {
      const BigInteger w = wiener_closed(family);
      r.wiener = w.convert_to<std::int64_t>();
      if ((exact || spectral) && *r.wiener != bfs) agree = false;
    } else {
      r.wiener = bfs;
    }
  }

  if (wants("trees")) {
    std::optional<BigInteger> tau;
    if (closed) tau = spanning_trees_closed(family);
    if (exact) {
      const BigInteger t = spanning_tree_count(g);
      if (tau && *tau != t) agree = false;
      if (!tau) tau = t;
    }
    if (tau) r.spanning_trees = tau->str();
    if (spectral) {
      r.spanning_trees_spectral = spanning_tree_count_spectral(g);
      if (tau && detail::rel_gap(to_double(*tau), *r.spanning_trees_spectral) > 1e-8) agree = false;
    }
  }

  if (wants("resistance")) {
    const std::size_t size = g.vertex_count();
    std::optional<DenseMatrix<BigRational>> exact_r;
    if (exact) {
      exact_r = resistance_exact(g);
      std::vector<std::vector<std::string>> rows(size);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) rows[i].push_back(to_decimal((*exact_r)(i, j), args.precision));
      r.resistance_exact = std::move(rows);
    }
    if (spectral) {
      const ResistanceMatrix rm = resistance_distances(g);
      std::vector<std::vector<double>> rows(size);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
          rows[i].push_back(rm(i, j));
          if (exact_r && std::abs(to_double((*exact_r)(i, j)) - rm(i, j)) > 1e-8) agree = false;
        }
      r.resistance = std::move(rows);
    }
  }

  if (r.wiener && (kf_value || kf_float)) {
    const double kf = kf_value ? to_double(*kf_value) : *kf_float;
    r.ratio_w_over_kf = kf_value ? to_double(BigRational(*r.wiener) / *kf_value) : static_cast<double>(*r.wiener) / kf;
  }
  if (all) r.methods_agree = agree;

  detail::emit({r}, format, out);
  return agree ? kExitOk : kExitFailure;
}

/// Reproduces the published Kirchhoff/Wiener table from the closed forms.
/// Exit 1 when any cell deviates; the deviations go to `err`.
inline int cmd_table1(const PublishedTableArgs& args, std::ostream& out, std::ostream& err) {
  const Format format = parse_format(args.format);
  std::vector<TableRow> rows;
  for (const auto& published : kPublishedTable) rows.push_back(compare_published_row(published));

  if (format == Format::Table) {
    const char* headers[] = {"n", "Kf(P_n)", "W(P_n)", "W/Kf", "Kf(P'_n)", "W(P'_n)", "W'/Kf'"};
    const int widths[] = {3, 15, 8, 14, 15, 8, 14};
    for (int c = 0; c < 7; ++c) out << std::setw(widths[c]) << headers[c] << (c < 6 ? " " : "\n");
    for (const auto& row : rows) {
      out << std::setw(widths[0]) << row.n;
      for (std::size_t c = 0; c < row.cells.size(); ++c) out << ' ' << std::setw(widths[c + 1]) << row.cells[c].computed;
      out << '\n';
    }
  } else {
    std::vector<InvariantReport> reports;
    for (const auto& published : kPublishedTable)
      for (Variant v : {Variant::Cylinder, Variant::Moebius}) {
        const GraphFamily f{v, published.n};
        const BigRational kf = kirchhoff_closed(f);
        const BigInteger w = wiener_closed(f);
        InvariantReport r{published.n, std::string(to_string(v))};
        r.kf_closed = to_decimal(kf, kKirchhoffDigits);
        r.wiener = w.convert_to<std::int64_t>();
        r.ratio_w_over_kf = to_double(BigRational(w) / kf);
        reports.push_back(std::move(r));
      }
    detail::emit(reports, format, out, true);
  }

  int mismatches = 0;
  for (const auto& row : rows)
    for (const auto& cell : row.cells)
      if (!cell.matches) {
        ++mismatches;
        err << "mismatch n=" << row.n << " " << cell.column << ": published " << cell.published << ", computed "
            << cell.computed << '\n';
      }
  if (mismatches) err << mismatches << " cell(s) deviate from the published table\n";
  return mismatches ? kExitFailure : kExitOk;
}

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  if (opt.n_min < 2 || opt.n_max < opt.n_min) throw UsageError("verify requires 2 <= --n-min <= --n-max");
  const auto results = run_verification(opt);
  int passed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  [" << r.detail << "]\n";
    passed += r.passed;
  }
  out << passed << "/" << results.size() << " checks passed\n";
  return passed == static_cast<int>(results.size()) ? kExitOk : kExitFailure;
}

/// (n, Kf, W, W/Kf) rows for n = 2..n_max. The monotonicity of the ratio
/// column is reported on `err`.
inline int cmd_series(const SeriesArgs& args, std::ostream& out, std::ostream& err) {
  require_chain_length(args.n_max);
  const Variant variant = parse_variant(args.variant);
  const Format format = parse_format(args.format);
  std::vector<int> ns;
  for (int n = 2; n <= args.n_max; ++n) ns.push_back(n);
  const auto rows = parallel_map(ns, [variant](int n) {
    const GraphFamily f{variant, n};
    RatioPoint p{n, kirchhoff_closed(f), wiener_closed(f), 0.0};
    p.ratio = to_double(BigRational(p.wiener) / p.kirchhoff);
    return p;
  });

  bool increasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i) increasing = increasing && rows[i].ratio > rows[i - 1].ratio;

  if (format == Format::Json) {
    std::vector<InvariantReport> reports;
    for (const auto& p : rows) {
      InvariantReport r{p.n, std::string(to_string(variant))};
      r.kf_closed = to_decimal(p.kirchhoff, args.precision);
      r.wiener = p.wiener.convert_to<std::int64_t>();
      r.ratio_w_over_kf = p.ratio;
      reports.push_back(std::move(r));
    }
    detail::emit(reports, format, out, true);
  } else {
    const char sep = format == Format::Csv ? ',' : ' ';
    if (format == Format::Csv) {
      out << "n,kf,wiener,ratio\n";
    } else {
      out << std::setw(4) << "n" << sep << std::setw(18) << "kf" << sep << std::setw(10) << "wiener" << sep
          << "ratio\n";
    }
    for (const auto& p : rows) {
      const std::string kf = to_decimal(p.kirchhoff, args.precision);
      const std::string ratio = Json(p.ratio).dump();
      if (format == Format::Csv) {
        out << p.n << sep << kf << sep << p.wiener << sep << ratio << '\n';
      } else {
        out << std::setw(4) << p.n << sep << std::setw(18) << kf << sep << std::setw(10) << p.wiener << sep << ratio
            << '\n';
      }
    }
  }
  err << "ratio W/Kf strictly increasing over n in [2, " << args.n_max << "]: " << (increasing ? "yes" : "no")
      << '\n';
  return kExitOk;
}

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kirchhoff index, Wiener index and spanning trees of pentagonal cylinder and Moebius chains",
               "pentakirch"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute invariants of one chain graph");
  c->add_option("--n", compute.n, "Chain length (n >= 2)")->required();
  c->add_option("--variant", compute.variant, "cylinder | moebius")->capture_default_str();
  c->add_option("--what", compute.what, "Any of kf, wiener, trees, resistance")->delimiter(',')->capture_default_str();
  c->add_option("--method", compute.method, "closed | exact | spectral | all")
      ->check(CLI::IsMember({"closed", "exact", "spectral", "all"}))
      ->capture_default_str();
  c->add_option("--format", compute.format, "table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  c->add_option("--precision", compute.precision, "Decimals for exact rationals")->capture_default_str();
  c->add_option("--out", compute.out, "Write output to this file");

  PublishedTableArgs table;
  auto* t = app.add_subcommand("table1", "Reproduce the published Kf/W table (n = 2..10, 20, 99)");
  t->add_option("--format", table.format, "table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  t->add_option("--out", table.out, "Write output to this file");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Run every cross-check and print one line per check");
  v->add_option("--n-min", verify.n_min, "Smallest n")->capture_default_str();
  v->add_option("--n-max", verify.n_max, "Largest n")->capture_default_str();
  v->add_flag("--deep", verify.deep, "Raise caps: trees to n=30, Wiener to n=50");
  v->add_flag("--corrupt-corner-sign", verify.corrupt_corner_sign,
              "Self-test: flip the corner sign of L_S so the decomposition checks must fail");

  SeriesArgs series;
  auto* s = app.add_subcommand("series", "Emit (n, Kf, W, W/Kf) rows for plotting");
  s->add_option("--variant", series.variant, "cylinder | moebius")->capture_default_str();
  s->add_option("--n-max", series.n_max, "Largest n (>= 2)")->capture_default_str();
  s->add_option("--format", series.format, "table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  s->add_option("--precision", series.precision, "Decimals for Kf")->capture_default_str();
  s->add_option("--out", series.out, "Write output to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (c->parsed()) {
      detail::Sink sink(compute.out, out);
      return cmd_compute(compute, sink.stream());
    }
    if (t->parsed()) {
      detail::Sink sink(table.out, out);
      return cmd_table1(table, sink.stream(), err);
    }
    if (v->parsed()) return cmd_verify(verify, out);
    if (s->parsed()) {
      detail::Sink sink(series.out, out);
      return cmd_series(series, sink.stream(), err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace pentakirch::cli

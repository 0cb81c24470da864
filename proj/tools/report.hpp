#pragma once

#include <pentakirch/numeric.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pentakirch::cli {

using Json = nlohmann::ordered_json;

/// One graph's invariants as emitted by the CLI. Absent fields are omitted
/// from every output format.
struct InvariantReport {
  int n = 0;
  std::string variant;
  std::optional<std::string> kf_closed;  // exact rational, fixed decimals
  std::optional<std::string> kf_exact;
  std::optional<double> kf_spectral;
  std::optional<std::int64_t> wiener;
  std::optional<std::string> spanning_trees;  // decimal string, any length
  std::optional<double> spanning_trees_spectral;
  std::optional<double> ratio_w_over_kf;
  std::optional<std::vector<std::vector<std::string>>> resistance_exact;
  std::optional<std::vector<std::vector<double>>> resistance;
  std::optional<bool> methods_agree;
};

/// Canonical key order; JSON output follows it and so does the CSV header.
inline Json to_json(const InvariantReport& r) {
  Json j;
  j["n"] = r.n;
  j["variant"] = r.variant;
  if (r.kf_closed) j["kf_closed"] = *r.kf_closed;
  if (r.kf_exact) j["kf_exact"] = *r.kf_exact;
  if (r.kf_spectral) j["kf_spectral"] = *r.kf_spectral;
  if (r.wiener) j["wiener"] = *r.wiener;
  if (r.spanning_trees) j["spanning_trees"] = *r.spanning_trees;
  if (r.spanning_trees_spectral) j["spanning_trees_spectral"] = *r.spanning_trees_spectral;
  if (r.ratio_w_over_kf) j["ratio_w_over_kf"] = *r.ratio_w_over_kf;
  if (r.resistance_exact) j["resistance_exact"] = *r.resistance_exact;
  if (r.resistance) j["resistance"] = *r.resistance;
  if (r.methods_agree) j["methods_agree"] = *r.methods_agree;
  return j;
}

/// Scalar cell text shared by the CSV and table renderers. Numbers use the
/// JSON serializer so CSV and JSON carry identical digits; strings are bare;
/// matrices are row-major values joined by ';'.
inline std::string cell_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) {
    std::string out;
    for (const auto& row : value)
      for (const auto& x : row) {
        if (!out.empty()) out += ';';
        out += cell_text(x);
      }
    return out;
  }
  return value.dump();
}

/// Header plus one line per report. Every report must carry the same keys.
inline void write_csv(std::ostream& os, const std::vector<InvariantReport>& reports) {
  if (reports.empty()) return;
  const Json first = to_json(reports.front());
  bool lead = true;
  for (const auto& item : first.items()) {
    os << (lead ? "" : ",") << item.key();
    lead = false;
  }
  os << '\n';
  for (const auto& r : reports) {
    lead = true;
    const Json row = to_json(r);
    for (const auto& item : row.items()) {
      os << (lead ? "" : ",") << cell_text(item.value());
      lead = false;
    }
    os << '\n';
  }
}

/// Single report: one object. Several: an array of objects.
inline void write_json(std::ostream& os, const std::vector<InvariantReport>& reports, bool force_array = false) {
  if (reports.size() == 1 && !force_array) {
    os << to_json(reports.front()).dump() << '\n';
    return;
  }
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  os << arr.dump() << '\n';
}

/// Human-readable key/value listing; matrices print one row per line.
inline void write_table(std::ostream& os, const InvariantReport& report) {
  const Json j = to_json(report);
  std::size_t width = 0;
  for (const auto& item : j.items()) width = std::max(width, item.key().size());
  for (const auto& item : j.items()) {
    const std::string pad(width + 2 - item.key().size(), ' ');
    if (item.value().is_array()) {
      os << item.key() << '\n';
      for (const auto& row : item.value()) {
        os << "  ";
        for (const auto& x : row) os << ' ' << cell_text(x);
        os << '\n';
      }
    } else {
      os << item.key() << pad << cell_text(item.value()) << '\n';
    }
  }
}

}  // namespace pentakirch::cli

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bessel_certify::verify {

using Inputs = std::vector<std::pair<std::string, double>>;

/// One evaluated claim instance. `index` is the position in the check's
/// canonical enumeration and orders rows lexicographically.
struct SweepRow {
  std::vector<std::size_t> index;
  Inputs inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool pass = false;
  bool strict = false;  ///< margin clears the tie tolerance
};

struct Violation {
  Inputs inputs;
  double lhs;
  double rhs;
  double margin;
};

struct SweepReport {
  std::string check_id;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<Violation> violations;
  double min_margin = std::numeric_limits<double>::quiet_NaN();
  std::int64_t runtime_ms = 0;
  bool asserted = true;
  std::vector<SweepRow> rows;

  bool ok() const { return violations.empty(); }
};

/// Relative tolerance for non-strict inequalities and diagonal equalities.
inline constexpr double kInequalityTol = 1e-12;

inline double scaled_tol(double lhs, double rhs, double rel = kInequalityTol) {
  return rel * (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
}

/// lhs <= rhs up to kInequalityTol; margin = rhs - lhs.
inline SweepRow row_le(Inputs in, double lhs, double rhs) {
  const double m = rhs - lhs;
  const double tol = scaled_tol(lhs, rhs);
  return {{}, std::move(in), lhs, rhs, m, m >= -tol, m > tol};
}

/// lhs < rhs with no tolerance; margin = rhs - lhs.
inline SweepRow row_lt(Inputs in, double lhs, double rhs) {
  const double m = rhs - lhs;
  return {{}, std::move(in), lhs, rhs, m, m > 0.0, m > 0.0};
}

/// |lhs - rhs| <= tol; margin = -|lhs - rhs|.
inline SweepRow row_eq(Inputs in, double lhs, double rhs, double tol) {
  const double d = std::abs(lhs - rhs);
  return {{}, std::move(in), lhs, rhs, -d, d <= tol, false};
}

/// Sorts rows canonically and recomputes the summary fields.
inline void finalize(SweepReport& r) {
  std::stable_sort(r.rows.begin(), r.rows.end(), [](const SweepRow& a, const SweepRow& b) { return a.index < b.index; });
  r.total = r.rows.size();
  r.passed = 0;
  r.violations.clear();
  r.min_margin = std::numeric_limits<double>::quiet_NaN();
  for (const auto& row : r.rows) {
    if (row.pass) ++r.passed;
    else r.violations.push_back({row.inputs, row.lhs, row.rhs, row.margin});
    if (!std::isnan(row.margin) && !(row.margin >= r.min_margin)) r.min_margin = row.margin;
  }
}

/// Union of two chunk reports of the same check. Associative and
/// commutative: rows are re-sorted by index.
inline SweepReport merge(const SweepReport& a, const SweepReport& b) {
  SweepReport out;
  out.check_id = a.check_id.empty() ? b.check_id : a.check_id;
  out.asserted = a.asserted && b.asserted;
  out.runtime_ms = a.runtime_ms + b.runtime_ms;
  out.rows = a.rows;
  out.rows.insert(out.rows.end(), b.rows.begin(), b.rows.end());
  finalize(out);
  return out;
}

/// Shortest representation that round-trips through strtod.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline nlohmann::ordered_json number_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

inline nlohmann::ordered_json inputs_json(const Inputs& in) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : in) j[k] = number_json(v);
  return j;
}

inline nlohmann::ordered_json to_json(const SweepReport& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["total"] = r.total;
  j["passed"] = r.passed;
  auto viol = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) {
    nlohmann::ordered_json e;
    e["inputs"] = inputs_json(v.inputs);
    e["lhs"] = number_json(v.lhs);
    e["rhs"] = number_json(v.rhs);
    e["margin"] = number_json(v.margin);
    viol.push_back(std::move(e));
  }
  j["violations"] = std::move(viol);
  j["min_margin"] = number_json(r.min_margin);
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

inline std::string inputs_field(const Inputs& in) {
  std::string s;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (i) s += ';';
    s += in[i].first + '=' + format_double(in[i].second);
  }
  return s;
}

inline constexpr const char* kCsvHeader = "check_id,inputs,lhs,rhs,margin,pass";

/// One line per row (all rows, not only violations), no header.
inline void write_csv_rows(std::ostream& os, const SweepReport& r) {
  for (const auto& row : r.rows) {
    os << r.check_id << ',' << inputs_field(row.inputs) << ',' << format_double(row.lhs) << ','
       << format_double(row.rhs) << ',' << format_double(row.margin) << ',' << (row.pass ? "true" : "false") << '\n';
  }
}

}  // namespace bessel_certify::verify

// bessel-certify: evaluation, constants, bounds, chains, (p,q) regions, Mills
// ratio, gamma-gamma toolkit and the sweep engine from the command line.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bessel_certify/bessel.hpp"
#include "bessel_certify/bessel_j.hpp"
#include "bessel_certify/bounds.hpp"
#include "bessel_certify/gamma_gamma.hpp"
#include "bessel_certify/means_convexity.hpp"
#include "bessel_certify/mills.hpp"
#include "bessel_certify/verify/checks.hpp"

namespace bc = bessel_certify;
namespace bv = bessel_certify::verify;
using json = nlohmann::ordered_json;

namespace {

enum class Format { plain, json, csv };

using Field = std::variant<double, std::string, bool, std::int64_t>;
using Record = std::vector<std::pair<std::string, Field>>;

std::string plain_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string field_text(const Field& f, Format fmt) {
  if (const double* d = std::get_if<double>(&f)) return fmt == Format::plain ? plain_number(*d) : bv::format_double(*d);
  if (const bool* b = std::get_if<bool>(&f)) return *b ? "true" : "false";
  if (const auto* i = std::get_if<std::int64_t>(&f)) return std::to_string(*i);
  return std::get<std::string>(f);
}

json field_json(const Field& f) {
  if (const double* d = std::get_if<double>(&f)) return bv::number_json(*d);
  if (const bool* b = std::get_if<bool>(&f)) return *b;
  if (const auto* i = std::get_if<std::int64_t>(&f)) return *i;
  return std::get<std::string>(f);
}

json record_json(const Record& r) {
  json j = json::object();
  for (const auto& [k, v] : r) j[k] = field_json(v);
  return j;
}

/// json: one object, or an array for several records. csv: header plus rows.
/// plain: "key value" lines for one record, a header and rows otherwise.
void emit(std::ostream& os, Format fmt, const std::vector<Record>& records) {
  if (records.empty()) return;
  if (fmt == Format::json) {
    if (records.size() == 1) {
      os << record_json(records.front()).dump(2) << '\n';
    } else {
      json arr = json::array();
      for (const auto& r : records) arr.push_back(record_json(r));
      os << arr.dump(2) << '\n';
    }
    return;
  }
  if (fmt == Format::plain && records.size() == 1) {
    for (const auto& [k, v] : records.front()) os << k << ' ' << field_text(v, fmt) << '\n';
    return;
  }
  const char sep = fmt == Format::csv ? ',' : ' ';
  for (std::size_t i = 0; i < records.front().size(); ++i) os << (i ? std::string(1, sep) : "") << records.front()[i].first;
  os << '\n';
  for (const auto& r : records) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? std::string(1, sep) : "") << field_text(r[i].second, fmt);
    os << '\n';
  }
}

struct GridFlags {
  std::optional<double> umin, umax;
  std::optional<int> count;
  std::optional<std::string> spacing;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--umin", umin, "lower end of the u grid");
    cmd->add_option("--umax", umax, "upper end of the u grid");
    cmd->add_option("--count", count, "number of grid points");
    cmd->add_option("--spacing", spacing, "grid spacing")->check(CLI::IsMember({"linear", "log"}));
  }
  bool any() const { return umin || umax || count || spacing; }

  /// Applies the flags on top of `axis`.
  void apply(bv::Axis& axis) const {
    if (umin) axis.min = *umin;
    if (umax) axis.max = *umax;
    if (count) axis.count = *count;
    if (spacing) axis.spacing = *spacing == "log" ? bv::Spacing::log : bv::Spacing::linear;
  }

  std::vector<double> values(double lo, double hi, int n) const {
    bv::Axis axis = bv::log_axis("u", lo, hi, n);
    apply(axis);
    axis.validate();
    return axis.values();
  }
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BESSEL_CERTIFY_SEED")) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw bc::domain_error("BESSEL_CERTIFY_SEED must be a non-negative integer");
  }
  return 0;
}

bc::BesselKind parse_kind(const std::string& s) { return s == "I" ? bc::BesselKind::I : bc::BesselKind::K; }

// ---- subcommands ------------------------------------------------------------

struct EvalArgs {
  std::string function;
  double nu = 0.0;
  std::vector<double> points;
  GridFlags grid;
};

double eval_function(const std::string& fn, double nu, double u, const bc::EvalConfig& cfg) {
  if (fn == "I") return bc::besseli(nu, u, cfg);
  if (fn == "K") return bc::besselk(nu, u, cfg);
  if (fn == "I'") return bc::besseli_prime(nu, u, cfg);
  if (fn == "K'") return bc::besselk_prime(nu, u, cfg);
  if (fn == "logdI") return bc::log_deriv_i(nu, u, cfg);
  if (fn == "logdK") return bc::log_deriv_k(nu, u, cfg);
  return bc::besselj(nu, u, cfg);
}

int run_eval(const EvalArgs& a, Format fmt, std::ostream& os, const bc::EvalConfig& cfg) {
  std::vector<double> us = a.points;
  if (a.grid.any()) {
    const auto g = a.grid.values(0.1, 10.0, 50);
    us.insert(us.end(), g.begin(), g.end());
  }
  if (us.empty()) throw bc::domain_error("eval: give at least one u or a grid");
  if (fmt == Format::plain && us.size() == 1) {
    os << plain_number(eval_function(a.function, a.nu, us.front(), cfg)) << '\n';
    return 0;
  }
  std::vector<Record> rows;
  for (double u : us) {
    Record r;
    if (fmt != Format::plain) {
      r.emplace_back("function", a.function);
      r.emplace_back("nu", a.nu);
    }
    r.emplace_back("u", u);
    r.emplace_back("value", eval_function(a.function, a.nu, u, cfg));
    rows.push_back(std::move(r));
  }
  if (fmt == Format::plain) {
    for (const auto& r : rows) os << field_text(r[0].second, fmt) << ' ' << field_text(r[1].second, fmt) << '\n';
  } else {
    emit(os, fmt, rows);
  }
  return 0;
}

int run_constants(Format fmt, std::ostream& os, const bc::EvalConfig& cfg) {
  const double nu0 = bc::nu0_constant(cfg);
  const double u0 = bc::u0_constant(cfg);
  emit(os, fmt,
       {{{"nu0", nu0}, {"nu0_residual", bc::nu0_polynomial(nu0)}, {"u0", u0}, {"u0_residual", bc::u0_equation(u0)}}});
  return 0;
}

struct BoundsArgs {
  std::string kind;
  double nu = 0.0;
  std::vector<double> points;
};

int run_bounds(const BoundsArgs& a, Format fmt, std::ostream& os, const bc::EvalConfig& cfg) {
  std::vector<Record> rows;
  for (double u : a.points) {
    Record r{{"nu", a.nu}, {"u", u}};
    if (a.kind == "I") {
      const auto env = bc::envelope_log_deriv_i(a.nu, u);
      r.emplace_back("lower", env.lower);
      r.emplace_back("log_deriv", bc::log_deriv_i(a.nu, u, cfg));
      r.emplace_back("upper", env.upper);
      r.emplace_back("turan", a.nu > 0.0 ? bc::turan_i(a.nu, u, cfg) : std::numeric_limits<double>::quiet_NaN());
    } else {
      const auto env = bc::envelope_log_deriv_k(a.nu, u);
      const double s = bc::log_deriv_k(a.nu, u, cfg);
      r.emplace_back("lower", env.lower);
      r.emplace_back("log_deriv", s);
      r.emplace_back("upper", env.upper);
      r.emplace_back("turan", bc::turan_k(a.nu, u, cfg));
      const bool laforgia = std::abs(a.nu) <= 0.5;
      r.emplace_back("k_prime_over_k", s / u);
      r.emplace_back("laforgia", laforgia ? bc::laforgia_upper_k(a.nu, u) : std::numeric_limits<double>::quiet_NaN());
    }
    rows.push_back(std::move(r));
  }
  emit(os, fmt, rows);
  return 0;
}

struct ChainArgs {
  std::string kind;
  double nu = 0.0;
  double u1 = 1.0, u2 = 1.0;
};

Record chain_record(const std::vector<double>& v, const std::vector<bool>& applies) {
  Record r;
  for (std::size_t i = 0; i < v.size(); ++i) r.emplace_back("v" + std::to_string(i + 1), v[i]);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const std::string k = "ineq" + std::to_string(i + 1);
    r.emplace_back(k + "_margin", v[i + 1] - v[i]);
    r.emplace_back(k + "_asserted", static_cast<bool>(applies[i]));
  }
  return r;
}

int run_chain(const ChainArgs& a, Format fmt, std::ostream& os, const bc::EvalConfig& cfg) {
  using bv::detail::arithmetic;
  using bv::detail::geometric;
  using bv::detail::harmonic;
  const double u1 = a.u1, u2 = a.u2, nu = a.nu;
  bc::detail::require(u1 > 0.0 && u2 > 0.0, "chain: arguments must be positive");
  std::vector<double> v;
  std::vector<bool> applies(4, false);
  if (a.kind == "I") {
    bc::detail::require(nu > -1.0, "chain: the I chain needs nu > -1");
    const double i1 = bc::besseli(nu, u1, cfg), i2 = bc::besseli(nu, u2, cfg);
    v = {harmonic(i1, i2), bc::besseli(nu, harmonic(u1, u2), cfg), bc::besseli(nu, geometric(u1, u2), cfg),
         geometric(i1, i2), std::sqrt((u1 + u2) / (2.0 * geometric(u1, u2))) * bc::besseli(nu, arithmetic(u1, u2), cfg)};
    for (int k : bv::detail::chain_i_clauses(nu)) applies[k - 1] = true;
  } else {
    const double k1 = bc::besselk(nu, u1, cfg), k2 = bc::besselk(nu, u2, cfg);
    v = {harmonic(k1, k2), bc::besselk(nu, arithmetic(u1, u2), cfg), geometric(k1, k2),
         bc::besselk(nu, geometric(u1, u2), cfg), arithmetic(k1, k2)};
    applies = {std::abs(nu) >= 1.0, true, true, true};
  }
  Record r{{"kind", a.kind}, {"nu", nu}, {"u1", u1}, {"u2", u2}};
  for (auto& f : chain_record(v, applies)) r.push_back(std::move(f));
  if (a.kind == "K") {
    const double lhs = bc::besselk(nu, harmonic(u1, u2), cfg), rhs = arithmetic(bc::besselk(nu, u1, cfg), bc::besselk(nu, u2, cfg));
    r.emplace_back("k_harmonic_margin", rhs - lhs);
    r.emplace_back("k_harmonic_asserted", std::abs(nu) >= 1.25 || (u1 > 2.0 && u2 > 2.0));
  }
  emit(os, fmt, {r});
  return 0;
}

struct PqArgs {
  std::string kind;
  double p = 0.0, q = 0.0, nu = 0.0;
  GridFlags grid;
};

int run_pq(const PqArgs& a, Format fmt, std::ostream& os, const bc::EvalConfig& cfg) {
  const auto kind = parse_kind(a.kind);
  const bc::PQPair pq{a.p, a.q};
  const auto verdict = kind == bc::BesselKind::I ? bc::region_predicate_i(pq, a.nu) : bc::region_predicate_k(pq, a.nu);
  const auto us = a.grid.values(0.05, 20.0, 50);
  const auto test = bc::lemma3_monotonicity_test(kind, pq, a.nu, us, cfg);
  Record r{{"kind", a.kind},
           {"p", a.p},
           {"q", a.q},
           {"nu", a.nu},
           {"region", std::string(bc::to_string(verdict.region))},
           {"clause", std::string(1, verdict.clause)},
           {"classification", std::string(bc::to_string(test.classification))},
           {"margin", test.margin}};
  bool agrees = true;
  if (verdict.region == bc::Region::convex) agrees = test.classification == bc::Monotonicity::increasing;
  if (verdict.region == bc::Region::concave) agrees = test.classification == bc::Monotonicity::decreasing;
  r.emplace_back("consistent", agrees);
  emit(os, fmt, {r});
  return 0;
}

struct MillsArgs {
  std::vector<double> points;
  bool chain = false;
};

int run_mills(const MillsArgs& a, Format fmt, std::ostream& os) {
  if (a.chain) {
    if (a.points.size() != 2) throw bc::domain_error("mills --chain needs exactly two arguments u1 u2");
    const auto c = bc::mills_chain(a.points[0], a.points[1]);
    Record r{{"u1", a.points[0]}, {"u2", a.points[1]}};
    for (std::size_t i = 0; i < 6; ++i) r.emplace_back("v" + std::to_string(i + 1), c.values[i]);
    for (std::size_t i = 0; i < 5; ++i) {
      const std::string k = "ineq" + std::to_string(i + 1);
      r.emplace_back(k + "_margin", c.margins[i]);
      r.emplace_back(k + "_expected", std::string(bc::to_string(c.expected[i])));
    }
    emit(os, fmt, {r});
    return 0;
  }
  std::vector<Record> rows;
  for (double u : a.points) rows.push_back({{"u", u}, {"ratio", bc::mills_ratio(u)}});
  emit(os, fmt, rows);
  return 0;
}

struct GgArgs {
  std::string action;
  double a = 1.0, b = 1.0, alpha = 1.0;
  std::vector<double> points;
  GridFlags grid;
};

int run_gg(const GgArgs& g, Format fmt, std::ostream& os, const bc::EvalConfig& cfg) {
  const bc::GammaGammaParams params{g.a, g.b, g.alpha};
  params.validate();
  std::vector<double> us = g.points;
  if (us.empty() || g.grid.any()) {
    const auto extra = g.grid.values(0.05, 20.0, g.action == "nbu" ? 10 : 50);
    us.insert(us.end(), extra.begin(), extra.end());
  }
  if (g.action == "concavity") {
    const auto rep = bc::concavity_checks(params, us, cfg);
    if (fmt == Format::json) {
      json j;
      j["a"] = g.a;
      j["b"] = g.b;
      j["alpha"] = g.alpha;
      j["grid"] = rep.grid;
      for (const auto* s : {&rep.transformed, &rep.density, &rep.cdf_geometric, &rep.cdf_log}) {
        json e;
        e["values"] = s->values;
        e["decreasing"] = s->decreasing;
        e["margin"] = bv::number_json(s->margin);
        j[s->name] = std::move(e);
      }
      j["log_cdf"] = rep.log_cdf;
      j["log_cdf_second_differences"] = rep.log_cdf_second_differences;
      j["max_second_difference"] = bv::number_json(rep.max_second_difference);
      j["log_concave"] = rep.log_concave;
      j["all_decreasing"] = rep.all_decreasing();
      os << j.dump(2) << '\n';
      return 0;
    }
    std::vector<Record> rows;
    for (std::size_t i = 0; i < us.size(); ++i) {
      const double d2 = (i == 0 || i + 1 == us.size()) ? std::numeric_limits<double>::quiet_NaN()
                                                       : rep.log_cdf_second_differences[i - 1];
      rows.push_back({{"u", us[i]},
                      {"u_ft_prime_over_ft", rep.transformed.values[i]},
                      {"u_f_prime_over_f", rep.density.values[i]},
                      {"u_F_prime_over_F", rep.cdf_geometric.values[i]},
                      {"F_prime_over_F", rep.cdf_log.values[i]},
                      {"log_F", rep.log_cdf[i]},
                      {"second_difference", d2}});
    }
    emit(os, fmt, rows);
    if (fmt == Format::plain) {
      os << "all_decreasing " << (rep.all_decreasing() ? "true" : "false") << '\n'
         << "log_concave " << (rep.log_concave ? "true" : "false") << '\n'
         << "max_second_difference " << plain_number(rep.max_second_difference) << '\n';
    }
    return 0;
  }
  if (g.action == "nbu") {
    std::vector<std::pair<double, double>> pairs;
    if (!g.points.empty() && !g.grid.any()) {
      if (g.points.size() % 2 != 0) throw bc::domain_error("gg nbu: points must come in pairs u1 u2");
      for (std::size_t i = 0; i < g.points.size(); i += 2) pairs.emplace_back(g.points[i], g.points[i + 1]);
    } else {
      for (double u1 : us)
        for (double u2 : us) pairs.emplace_back(u1, u2);
    }
    std::vector<Record> rows;
    for (const auto& r : bc::nbu_probe(params, pairs, cfg))
      rows.push_back({{"u1", r.u1}, {"u2", r.u2}, {"value", r.value}, {"nbu", r.value <= 0.0}});
    emit(os, fmt, rows);
    return 0;
  }
  std::vector<Record> rows;
  for (double u : us) {
    double v;
    if (g.action == "pdf") v = bc::pdf(params, u, cfg);
    else if (g.action == "cdf") v = bc::cdf(params, u, cfg);
    else v = bc::hazard(params, u, cfg);
    rows.push_back({{"u", u}, {g.action, v}});
  }
  if (fmt == Format::plain && g.points.size() == 1 && !g.grid.any()) {
    os << field_text(rows.front()[1].second, fmt) << '\n';
    return 0;
  }
  emit(os, fmt, rows);
  return 0;
}

struct SweepArgs {
  std::string id;
  bool all = false;
  bool list = false;
  std::vector<double> nu;
  GridFlags grid;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  std::size_t chunks = 1;
  bool timing = false;
};

void print_plain_report(std::ostream& os, const bv::SweepReport& r) {
  os << r.check_id << " total=" << r.total << " passed=" << r.passed << " violations=" << r.violations.size()
     << " min_margin=" << plain_number(r.min_margin) << " runtime_ms=" << r.runtime_ms
     << (r.asserted ? "" : " (exploratory)") << '\n';
  constexpr std::size_t shown = 10;
  for (std::size_t i = 0; i < r.violations.size() && i < shown; ++i) {
    const auto& v = r.violations[i];
    os << "  violation ";
    for (const auto& [k, x] : v.inputs) os << k << '=' << plain_number(x) << ' ';
    os << "lhs=" << plain_number(v.lhs) << " rhs=" << plain_number(v.rhs) << " margin=" << plain_number(v.margin) << '\n';
  }
  if (r.violations.size() > shown) os << "  ... " << r.violations.size() - shown << " more\n";
}

int run_sweep(const SweepArgs& a, Format fmt, std::ostream& os, const bc::EvalConfig& cfg) {
  if (a.list) {
    for (const auto& c : bv::check_catalog()) os << c.id << "  " << c.summary << '\n';
    return 0;
  }
  if (a.all == !a.id.empty()) throw CLI::ValidationError("sweep", "give exactly one of <check_id> or --all");
  bv::SweepOptions opt;
  opt.seed = a.seed ? *a.seed : default_seed();
  opt.workers = a.workers;
  opt.chunks = a.chunks;
  opt.timing = a.timing;
  opt.cfg = cfg;
  cfg.validate();

  std::vector<bv::SweepReport> reports;
  if (a.all) {
    if (!a.nu.empty() || a.grid.any() || a.samples)
      throw CLI::ValidationError("sweep", "grid and order overrides need a single check id");
    for (const auto& c : bv::check_catalog()) reports.push_back(bv::run_check(c, opt));
  } else {
    const bv::CheckDef* def = bv::find_check(a.id);
    if (!def) throw CLI::ValidationError("sweep", "unknown check id '" + a.id + "' (see sweep --list)");
    bv::GridSpec grid = def->default_grid;
    std::vector<double> orders = a.nu.empty() ? def->default_orders : a.nu;
    if (!a.nu.empty() && def->default_orders.empty())
      throw CLI::ValidationError("sweep", "check '" + a.id + "' does not take --nu");
    if (a.grid.any()) {
      bv::Axis* u = nullptr;
      for (auto& ax : grid.axes)
        if (ax.name == "u") u = &ax;
      if (!u) throw CLI::ValidationError("sweep", "check '" + a.id + "' has no u axis");
      a.grid.apply(*u);
    }
    if (a.samples) grid.samples = *a.samples;
    reports.push_back(bv::run_check(*def, grid, orders, opt));
  }

  if (fmt == Format::json) {
    if (a.all) {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(bv::to_json(r));
      os << arr.dump(2) << '\n';
    } else {
      os << bv::to_json(reports.front()).dump(2) << '\n';
    }
  } else if (fmt == Format::csv) {
    os << bv::kCsvHeader << '\n';
    for (const auto& r : reports) bv::write_csv_rows(os, r);
  } else {
    for (const auto& r : reports) print_plain_report(os, r);
  }

  for (const auto& r : reports)
    if (r.asserted && !r.ok()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify inequalities for modified Bessel functions, Mills' ratio and the gamma-gamma law"};
  app.name("bessel-certify");
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1, 1);
  app.fallthrough();

  bc::EvalConfig cfg;
  std::string format = "plain";
  std::string output;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--output,-o", output, "write to this file instead of standard output");
  app.add_option("--rel-tol", cfg.rel_tol, "target relative error of series and quadrature");
  app.add_option("--max-series-terms", cfg.max_series_terms, "cap on summed series terms");
  app.add_option("--quad-abs-tol", cfg.quad_abs_tol, "absolute tolerance on normalised integrands");
  app.add_option("--quad-t-max-margin", cfg.quad_t_max_margin, "integrand truncation depth in exponent units");
  app.add_option("--large-arg-switch", cfg.large_arg_switch, "argument above which I uses its asymptotic expansion");
  app.add_option("--root-tol", cfg.root_tol, "bracket width at which root searches stop");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate I, K, I', K', u I'/I, u K'/K or J at one or more points");
  eval->add_option("function", eval_args.function, "function to evaluate")
      ->required()
      ->check(CLI::IsMember({"I", "K", "I'", "K'", "logdI", "logdK", "J"}));
  eval->add_option("nu", eval_args.nu, "order")->required();
  eval->add_option("u", eval_args.points, "arguments");
  eval_args.grid.add_to(eval);

  app.add_subcommand("constants", "print nu0 and u0 with their equation residuals");

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "envelope, Turan and Laforgia values at given points");
  bounds->add_option("kind", bounds_args.kind, "I or K")->required()->check(CLI::IsMember({"I", "K"}));
  bounds->add_option("nu", bounds_args.nu, "order")->required();
  bounds->add_option("u", bounds_args.points, "arguments")->required();

  ChainArgs chain_args;
  auto* chain = app.add_subcommand("chain", "mean chain members and margins for one pair");
  chain->add_option("kind", chain_args.kind, "I or K")->required()->check(CLI::IsMember({"I", "K"}));
  chain->add_option("nu", chain_args.nu, "order")->required();
  chain->add_option("u1", chain_args.u1, "first argument")->required();
  chain->add_option("u2", chain_args.u2, "second argument")->required();

  PqArgs pq_args;
  auto* pq = app.add_subcommand("pq", "(p,q)-convexity verdict and monotonicity test on a grid");
  pq->add_option("kind", pq_args.kind, "I or K")->required()->check(CLI::IsMember({"I", "K"}));
  pq->add_option("p", pq_args.p, "p")->required();
  pq->add_option("q", pq_args.q, "q")->required();
  pq->add_option("nu", pq_args.nu, "order")->required();
  pq_args.grid.add_to(pq);

  MillsArgs mills_args;
  auto* mills = app.add_subcommand("mills", "Mills ratio at points, or the mean chain for one pair");
  mills->add_option("u", mills_args.points, "arguments")->required();
  mills->add_flag("--chain", mills_args.chain, "evaluate the mean chain for u1 u2");

  GgArgs gg_args;
  auto* gg = app.add_subcommand("gg", "gamma-gamma density, CDF, hazard, concavity report or NBU probe");
  gg->add_option("action", gg_args.action, "what to compute")
      ->required()
      ->check(CLI::IsMember({"pdf", "cdf", "hazard", "concavity", "nbu"}));
  gg->add_option("a", gg_args.a, "shape a")->required();
  gg->add_option("b", gg_args.b, "shape b")->required();
  gg->add_option("alpha", gg_args.alpha, "mean")->required();
  gg->add_option("u", gg_args.points, "points (pairs u1 u2 for nbu); default a log grid on [0.05, 20]");
  gg_args.grid.add_to(gg);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "run a verification check and report its margins");
  sweep->add_option("check_id", sweep_args.id, "check to run");
  sweep->add_flag("--all", sweep_args.all, "run every check");
  sweep->add_flag("--list", sweep_args.list, "list check ids");
  sweep->add_option("--nu", sweep_args.nu, "orders replacing the check's default list")->delimiter(',');
  sweep_args.grid.add_to(sweep);
  sweep->add_option("--samples", sweep_args.samples, "random draws for sampled checks")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_args.seed, "seed for random draws (default: $BESSEL_CERTIFY_SEED or 0)");
  sweep->add_option("--workers", sweep_args.workers, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--chunks", sweep_args.chunks, "evaluate in this many chunks and merge")->check(CLI::PositiveNumber);
  sweep->add_flag("--timing", sweep_args.timing, "record runtime_ms (otherwise reported as 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Format fmt = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::plain;
  std::ofstream file;
  if (!output.empty()) {
    file.open(output, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << output << " for writing\n";
      return 2;
    }
  }
  std::ostream& os = output.empty() ? std::cout : file;

  try {
    cfg.validate();
    if (*eval) return run_eval(eval_args, fmt, os, cfg);
    if (app.got_subcommand("constants")) return run_constants(fmt, os, cfg);
    if (*bounds) return run_bounds(bounds_args, fmt, os, cfg);
    if (*chain) return run_chain(chain_args, fmt, os, cfg);
    if (*pq) return run_pq(pq_args, fmt, os, cfg);
    if (*mills) return run_mills(mills_args, fmt, os);
    if (*gg) return run_gg(gg_args, fmt, os, cfg);
    return run_sweep(sweep_args, fmt, os, cfg);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

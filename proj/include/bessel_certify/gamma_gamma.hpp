#pragma once

// Three-parameter gamma-gamma distribution with shapes a, b and mean alpha:
//   f(u) = 2 (ab)^{(a+b)/2} u^{(a+b)/2-1} K_{a-b}(2 sqrt(ab u / alpha)) / (Gamma(a) Gamma(b) alpha^{(a+b)/2}).
// The CDF is computed by quadrature in x = sqrt(t), where the density
// becomes g(x) = 2x f(x^2) = 2C x^{a+b-1} K_{a-b}(c x) with c = 2 sqrt(ab/alpha).

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "bessel_certify/bessel.hpp"
#include "bessel_certify/config.hpp"
#include "bessel_certify/errors.hpp"
#include "bessel_certify/gamma.hpp"
#include "bessel_certify/quadrature.hpp"

namespace bessel_certify {

struct GammaGammaParams {
  double a = 1.0;
  double b = 1.0;
  double alpha = 1.0;

  void validate() const {
    detail::require(std::isfinite(a) && a > 0 && std::isfinite(b) && b > 0 && std::isfinite(alpha) && alpha > 0,
                    "GammaGammaParams: a, b and alpha must be positive and finite");
  }
  double order() const { return a - b; }
};

namespace detail {

inline void check_gg_point(const GammaGammaParams& p, double u) {
  p.validate();
  require(std::isfinite(u) && u > 0.0, "gamma_gamma: argument must be positive and finite");
}

// log of 2 (ab)^s / (Gamma(a) Gamma(b) alpha^s), s = (a+b)/2.
inline double gg_log_constant(const GammaGammaParams& p) {
  const double s = 0.5 * (p.a + p.b);
  return std::numbers::ln2 + s * std::log(p.a * p.b) - ln_gamma(p.a) - ln_gamma(p.b) - s * std::log(p.alpha);
}

inline double gg_scale(const GammaGammaParams& p) { return 2.0 * std::sqrt(p.a * p.b / p.alpha); }

/// log g(x) with g(x) = 2x f(x^2), the density of sqrt(T).
struct SqrtDensity {
  GammaGammaParams p;
  EvalConfig cfg;
  double log_c2 = gg_log_constant(p) + std::numbers::ln2;
  double c = gg_scale(p);

  double log(double x) const {
    return log_c2 + (p.a + p.b - 1.0) * std::log(x) + log_besselk(p.order(), c * x, cfg);
  }
};

inline constexpr double kGgRelTol = 1e-12;
inline constexpr double kGgTailDepth = 50.0;

inline double checked(const QuadResult& r, const char* what) {
  if (!r.converged) throw accuracy_error(std::string(what) + ": quadrature failed its tolerance", r.evaluations, r.error);
  return r.value;
}

// P(sqrt(T) <= x_hi). [0, x_hi/10] is mapped from y in [0, 1] by
// x = x0 y^k with k = max(1, 1/min(a, b)), which turns the x^{2 min(a,b) - 1}
// endpoint behaviour into at worst a linear one.
inline double gg_lower_integral(const SqrtDensity& g, double x_hi) {
  const double x0 = x_hi / 10.0;
  const double k = std::max(1.0, 1.0 / std::min(g.p.a, g.p.b));
  const double log_jac = std::log(x0 * k);
  auto near_zero = [&](double y) {
    const double x = x0 * std::pow(y, k);
    if (!(x > 0.0)) return 0.0;
    return std::exp(g.log(x) + log_jac + (k - 1.0) * std::log(y));
  };
  auto bulk = [&](double x) { return std::exp(g.log(x)); };
  const double head = checked(integrate(near_zero, 0.0, 1.0, 0.0, kGgRelTol), "gamma_gamma cdf");
  const double body = checked(integrate(bulk, x0, x_hi, 0.0, kGgRelTol), "gamma_gamma cdf");
  return head + body;
}

// P(sqrt(T) > x_lo), truncated once log g has fallen kGgTailDepth below its
// largest sampled value on the decreasing side.
inline double gg_upper_integral(const SqrtDensity& g, double x_lo) {
  std::vector<double> breaks{x_lo};
  double best = g.log(x_lo);
  double prev = best;
  double width = 1.0 / g.c;
  for (int i = 0; i < 200; ++i) {
    const double x = x_lo + width;
    const double lx = g.log(x);
    breaks.push_back(x);
    best = std::max(best, lx);
    if (lx < prev && lx < best - kGgTailDepth) break;
    prev = lx;
    width *= 2.0;
  }
  auto bulk = [&](double x) { return std::exp(g.log(x)); };
  return checked(integrate(bulk, breaks, 0.0, kGgRelTol), "gamma_gamma survival");
}

struct CdfParts {
  double cdf;
  double survival;
  double log_cdf;
  bool from_tail;  ///< true when computed as 1 - P(T > u)
};

inline CdfParts gg_cdf_parts(const GammaGammaParams& p, double u, const EvalConfig& cfg) {
  check_gg_point(p, u);
  const SqrtDensity g{p, cfg};
  const double x = std::sqrt(u);
  const double lower = gg_lower_integral(g, x);
  if (lower <= 0.5) return {lower, 1.0 - lower, std::log(lower), false};
  const double upper = gg_upper_integral(g, x);
  return {1.0 - upper, upper, std::log1p(-upper), true};
}

}  // namespace detail

/// log f(u).
inline double log_pdf(const GammaGammaParams& params, double u, const EvalConfig& cfg = {}) {
  detail::check_gg_point(params, u);
  const double s = 0.5 * (params.a + params.b);
  return detail::gg_log_constant(params) + (s - 1.0) * std::log(u) +
         log_besselk(params.order(), detail::gg_scale(params) * std::sqrt(u), cfg);
}

inline double pdf(const GammaGammaParams& params, double u, const EvalConfig& cfg = {}) {
  return detail::to_linear(log_pdf(params, u, cfg), "gamma_gamma pdf");
}

/// log of f~(u) = 2^{3-(a+b)} ab u^{a+b-2} K_{a-b}(u) / (alpha Gamma(a) Gamma(b)),
/// which equals f(alpha u^2 / (4ab)).
inline double log_pdf_transformed(const GammaGammaParams& params, double u, const EvalConfig& cfg = {}) {
  detail::check_gg_point(params, u);
  const double ab = params.a * params.b;
  return (3.0 - (params.a + params.b)) * std::numbers::ln2 + std::log(ab) + (params.a + params.b - 2.0) * std::log(u) +
         log_besselk(params.order(), u, cfg) - std::log(params.alpha) - ln_gamma(params.a) - ln_gamma(params.b);
}

inline double pdf_transformed(const GammaGammaParams& params, double u, const EvalConfig& cfg = {}) {
  return detail::to_linear(log_pdf_transformed(params, u, cfg), "gamma_gamma pdf_transformed");
}

/// F(u) = P(T <= u).
inline double cdf(const GammaGammaParams& params, double u, const EvalConfig& cfg = {}) {
  return detail::gg_cdf_parts(params, u, cfg).cdf;
}

/// ln F(u), accurate also where F is close to 1.
inline double log_cdf(const GammaGammaParams& params, double u, const EvalConfig& cfg = {}) {
  return detail::gg_cdf_parts(params, u, cfg).log_cdf;
}

/// 1 - F(u), integrated directly over the upper tail once F exceeds 1/2.
inline double survival(const GammaGammaParams& params, double u, const EvalConfig& cfg = {}) {
  return detail::gg_cdf_parts(params, u, cfg).survival;
}

/// Probability mass of (u1, u2], u1 < u2, integrated directly.
inline double probability_between(const GammaGammaParams& params, double u1, double u2, const EvalConfig& cfg = {}) {
  detail::check_gg_point(params, u1);
  detail::check_gg_point(params, u2);
  detail::require(u1 < u2, "probability_between: needs u1 < u2");
  auto f = [&](double t) { return std::exp(log_pdf(params, t, cfg)); };
  return detail::checked(integrate(f, u1, u2, 0.0, detail::kGgRelTol), "gamma_gamma probability_between");
}

/// Below this survival probability the hazard rate is reported as out of range.
inline constexpr double kHazardMinSurvival = 1e-12;

/// f(u) / (1 - F(u)).
inline double hazard(const GammaGammaParams& params, double u, const EvalConfig& cfg = {}) {
  const double s = survival(params, u, cfg);
  if (s < kHazardMinSurvival) throw range_error("gamma_gamma hazard: survival probability below 1e-12");
  return pdf(params, u, cfg) / s;
}

/// One sampled quantity and whether it decreases strictly along the grid.
struct MonotoneSeries {
  std::string name;
  std::vector<double> values;
  bool decreasing = false;
  double margin = 0.0;  ///< min_i (values[i] - values[i+1])
};

inline MonotoneSeries make_decreasing_series(std::string name, std::vector<double> values) {
  MonotoneSeries s{std::move(name), std::move(values), true, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i + 1 < s.values.size(); ++i) s.margin = std::min(s.margin, s.values[i] - s.values[i + 1]);
  s.decreasing = s.margin > 0.0;
  return s;
}

/// Slack allowed on second differences of ln F before log-concavity counts as violated.
inline constexpr double kLogConcavitySlack = 1e-10;

struct ConcavityReport {
  GammaGammaParams params;
  std::vector<double> grid;
  MonotoneSeries transformed;    ///< u f~'/f~
  MonotoneSeries density;        ///< u f'/f
  MonotoneSeries cdf_geometric;  ///< u F'/F
  MonotoneSeries cdf_log;        ///< F'/F
  std::vector<double> transformed_analytic;  ///< a+b-2 + u K'_{a-b}(u)/K_{a-b}(u)
  std::vector<double> log_cdf;
  std::vector<double> log_cdf_second_differences;  ///< at interior grid points
  double max_second_difference = -std::numeric_limits<double>::infinity();
  bool log_concave = false;  ///< every second difference <= kLogConcavitySlack

  bool all_decreasing() const {
    return transformed.decreasing && density.decreasing && cdf_geometric.decreasing && cdf_log.decreasing;
  }
};

/// Relative step of the finite differences used by concavity_checks.
inline constexpr double kGgDifferenceStep = 1e-3;

namespace detail {

// (4 D(h/2) - D(h)) / 3 with D the central difference of fn.
template <class Fn>
double richardson_derivative(Fn&& fn, double u, double h) {
  const double d1 = (fn(u + h) - fn(u - h)) / (2.0 * h);
  const double d2 = (fn(u + 0.5 * h) - fn(u - 0.5 * h)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace detail

/// Samples u f~'/f~, u f'/f, u F'/F and F'/F on the grid by Richardson-
/// extrapolated central differences with step h = 1e-3 u, and the three-point
/// second difference of ln F at interior grid points. Differences of ln F
/// between u - h and nearby points come from integrating f across the step,
/// so the quadrature error of F enters only as a relative factor.
inline ConcavityReport concavity_checks(const GammaGammaParams& params, const std::vector<double>& grid,
                                        const EvalConfig& cfg = {}) {
  params.validate();
  detail::require(grid.size() >= 5, "concavity_checks: grid needs at least 5 points");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    detail::require(std::isfinite(grid[i]) && grid[i] > 0.0, "concavity_checks: grid points must be positive");
    if (i > 0) detail::require(grid[i - 1] < grid[i], "concavity_checks: grid must be strictly increasing");
  }
  ConcavityReport rep;
  rep.params = params;
  rep.grid = grid;
  const std::size_t n = grid.size();
  std::vector<double> tr(n), de(n), cg(n), cl(n);
  rep.transformed_analytic.resize(n);
  rep.log_cdf.resize(n);

  auto ln_f = [&](double t) { return log_pdf(params, t, cfg); };
  auto ln_ft = [&](double t) { return log_pdf_transformed(params, t, cfg); };
  auto mass = [&](double t1, double t2) { return probability_between(params, t1, t2, cfg); };

  for (std::size_t i = 0; i < n; ++i) {
    const double u = grid[i];
    const double h = kGgDifferenceStep * u;
    tr[i] = u * detail::richardson_derivative(ln_ft, u, h);
    de[i] = u * detail::richardson_derivative(ln_f, u, h);
    rep.transformed_analytic[i] = params.a + params.b - 2.0 + log_deriv_k(params.order(), u, cfg);

    const auto base = detail::gg_cdf_parts(params, u - h, cfg);
    const double m1 = mass(u - h, u - 0.5 * h);
    const double m2a = mass(u - 0.5 * h, u);
    const double m2b = mass(u, u + 0.5 * h);
    const double m3 = mass(u + 0.5 * h, u + h);
    const double d_full = std::log1p((m1 + m2a + m2b + m3) / base.cdf) / (2.0 * h);
    const double d_half = std::log1p((m2a + m2b) / (base.cdf + m1)) / h;
    const double dlogf = (4.0 * d_half - d_full) / 3.0;
    cg[i] = u * dlogf;
    cl[i] = dlogf;
    rep.log_cdf[i] = base.from_tail ? std::log1p(-(base.survival - m1 - m2a)) : std::log(base.cdf + m1 + m2a);
  }
  rep.transformed = make_decreasing_series("u*ft'/ft", std::move(tr));
  rep.density = make_decreasing_series("u*f'/f", std::move(de));
  rep.cdf_geometric = make_decreasing_series("u*F'/F", std::move(cg));
  rep.cdf_log = make_decreasing_series("F'/F", std::move(cl));

  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h1 = grid[i] - grid[i - 1], h2 = grid[i + 1] - grid[i];
    const double d2 = 2.0 * ((rep.log_cdf[i + 1] - rep.log_cdf[i]) / h2 - (rep.log_cdf[i] - rep.log_cdf[i - 1]) / h1) /
                      (h1 + h2);
    rep.log_cdf_second_differences.push_back(d2);
    rep.max_second_difference = std::max(rep.max_second_difference, d2);
  }
  rep.log_concave = rep.max_second_difference <= kLogConcavitySlack;
  return rep;
}

/// Survival-function sub-multiplicativity probe: S(u1 + u2) - S(u1) S(u2).
struct NbuRow {
  double u1;
  double u2;
  double value;
};

inline std::vector<NbuRow> nbu_probe(const GammaGammaParams& params, const std::vector<std::pair<double, double>>& pairs,
                                     const EvalConfig& cfg = {}) {
  std::map<double, double> memo;
  auto s = [&](double u) {
    auto it = memo.find(u);
    if (it == memo.end()) it = memo.emplace(u, survival(params, u, cfg)).first;
    return it->second;
  };
  std::vector<NbuRow> rows;
  rows.reserve(pairs.size());
  for (const auto& [u1, u2] : pairs) {
    const double v = s(u1 + u2) - s(u1) * s(u2);
    rows.push_back({u1, u2, v});
  }
  return rows;
}

}  // namespace bessel_certify

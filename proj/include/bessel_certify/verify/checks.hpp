#pragma once

// Catalog of sweep checks. Every check turns a CheckContext (grid, orders,
// evaluation settings) into a list of independent tasks; random parameters
// are drawn while building the list, so evaluation order never touches the
// random stream.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "bessel_certify/bessel.hpp"
#include "bessel_certify/bounds.hpp"
#include "bessel_certify/gamma_gamma.hpp"
#include "bessel_certify/means_convexity.hpp"
#include "bessel_certify/mills.hpp"
#include "bessel_certify/verify/engine.hpp"
#include "bessel_certify/verify/grid.hpp"
#include "bessel_certify/verify/report.hpp"
#include "bessel_certify/verify/rng.hpp"

namespace bessel_certify::verify {

struct CheckContext {
  std::string check_id;
  GridSpec grid;
  std::vector<double> orders;
  EvalConfig cfg;
};

struct CheckDef {
  std::string id;
  std::string summary;
  GridSpec default_grid;
  std::vector<double> default_orders;
  std::function<std::vector<Task>(const CheckContext&)> build;
};

inline Axis log_axis(std::string name, double lo, double hi, int n) { return {std::move(name), lo, hi, n, Spacing::log}; }
inline Axis lin_axis(std::string name, double lo, double hi, int n) { return {std::move(name), lo, hi, n, Spacing::linear}; }

namespace detail {

inline double harmonic(double x, double y) { return 2.0 * x * y / (x + y); }
inline double geometric(double x, double y) { return std::sqrt(x) * std::sqrt(y); }
inline double arithmetic(double x, double y) { return 0.5 * (x + y); }

/// Rows for a chain v[0] <= v[1] <= ... over the listed 1-based inequalities;
/// on the diagonal every listed inequality becomes an equality row.
inline std::vector<SweepRow> chain_rows(const Inputs& base, const std::vector<double>& v, const std::vector<int>& which,
                                        bool diagonal) {
  std::vector<SweepRow> rows;
  for (int k : which) {
    Inputs in = base;
    in.emplace_back("ineq", k);
    const double lhs = v[k - 1], rhs = v[k];
    rows.push_back(diagonal ? row_eq(std::move(in), lhs, rhs, scaled_tol(lhs, rhs)) : row_le(std::move(in), lhs, rhs));
  }
  return rows;
}

/// Consecutive-sample rows asserting strict decrease (sign = -1) or increase (+1).
inline std::vector<SweepRow> monotone_rows(const Inputs& base, const std::vector<double>& u, const std::vector<double>& v,
                                           int sign) {
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    Inputs in = base;
    in.emplace_back("u1", u[i]);
    in.emplace_back("u2", u[i + 1]);
    rows.push_back(sign > 0 ? row_lt(std::move(in), v[i], v[i + 1]) : row_lt(std::move(in), v[i + 1], v[i]));
  }
  return rows;
}

inline void require_orders(const CheckContext& ctx) {
  bessel_certify::detail::require(!ctx.orders.empty(), "check needs at least one order");
}

// ---- chains ---------------------------------------------------------------

inline std::vector<int> chain_i_clauses(double nu) {
  std::vector<int> c;
  if (nu >= nu0_constant()) c.push_back(1);
  c.push_back(2);
  c.push_back(3);
  if (nu >= 0.5) c.push_back(4);
  return c;
}

inline std::vector<Task> build_chain_i(const CheckContext& ctx) {
  require_orders(ctx);
  const auto us = ctx.grid.axis("u").values();
  std::vector<Task> tasks;
  for (std::size_t a = 0; a < ctx.orders.size(); ++a) {
    const double nu = ctx.orders[a];
    bessel_certify::detail::require(nu > -1.0, "chain_i: orders must satisfy nu > -1");
    const auto which = chain_i_clauses(nu);
    for (std::size_t i = 0; i < us.size(); ++i) {
      tasks.push_back({{a, i}, {{"nu", nu}, {"u1", us[i]}}, [=, cfg = ctx.cfg] {
                         std::vector<SweepRow> rows;
                         const double u1 = us[i];
                         const double i1 = besseli(nu, u1, cfg);
                         for (std::size_t j = 0; j < us.size(); ++j) {
                           const double u2 = us[j];
                           const double i2 = besseli(nu, u2, cfg);
                           const std::vector<double> v = {
                               harmonic(i1, i2), besseli(nu, harmonic(u1, u2), cfg), besseli(nu, geometric(u1, u2), cfg),
                               geometric(i1, i2),
                               std::sqrt((u1 + u2) / (2.0 * geometric(u1, u2))) * besseli(nu, arithmetic(u1, u2), cfg)};
                           auto r = chain_rows({{"nu", nu}, {"u1", u1}, {"u2", u2}}, v, which, i == j);
                           rows.insert(rows.end(), r.begin(), r.end());
                         }
                         return rows;
                       }});
    }
  }
  return tasks;
}

inline std::vector<Task> build_chain_k(const CheckContext& ctx) {
  require_orders(ctx);
  const auto us = ctx.grid.axis("u").values();
  std::vector<Task> tasks;
  for (std::size_t a = 0; a < ctx.orders.size(); ++a) {
    const double nu = ctx.orders[a];
    std::vector<int> which;
    if (std::abs(nu) >= 1.0) which.push_back(1);
    which.insert(which.end(), {2, 3, 4});
    for (std::size_t i = 0; i < us.size(); ++i) {
      tasks.push_back({{a, i}, {{"nu", nu}, {"u1", us[i]}}, [=, cfg = ctx.cfg] {
                         std::vector<SweepRow> rows;
                         const double u1 = us[i];
                         const double k1 = besselk(nu, u1, cfg);
                         for (std::size_t j = 0; j < us.size(); ++j) {
                           const double u2 = us[j];
                           const double k2 = besselk(nu, u2, cfg);
                           const std::vector<double> v = {harmonic(k1, k2), besselk(nu, arithmetic(u1, u2), cfg),
                                                          geometric(k1, k2), besselk(nu, geometric(u1, u2), cfg),
                                                          arithmetic(k1, k2)};
                           auto r = chain_rows({{"nu", nu}, {"u1", u1}, {"u2", u2}}, v, which, i == j);
                           rows.insert(rows.end(), r.begin(), r.end());
                         }
                         return rows;
                       }});
    }
  }
  return tasks;
}

/// K(H(u1,u2)) <= A(K(u1), K(u2)): every pair when |nu| >= 5/4, otherwise
/// only pairs with u1, u2 > 2.
inline std::vector<Task> build_chain_k20(const CheckContext& ctx) {
  require_orders(ctx);
  const auto us = ctx.grid.axis("u").values();
  std::vector<Task> tasks;
  for (std::size_t a = 0; a < ctx.orders.size(); ++a) {
    const double nu = ctx.orders[a];
    const bool all_pairs = std::abs(nu) >= 1.25;
    for (std::size_t i = 0; i < us.size(); ++i) {
      if (!all_pairs && !(us[i] > 2.0)) continue;
      tasks.push_back({{a, i}, {{"nu", nu}, {"u1", us[i]}}, [=, cfg = ctx.cfg] {
                         std::vector<SweepRow> rows;
                         const double u1 = us[i];
                         const double k1 = besselk(nu, u1, cfg);
                         for (std::size_t j = 0; j < us.size(); ++j) {
                           const double u2 = us[j];
                           if (!all_pairs && !(u2 > 2.0)) continue;
                           const double k2 = besselk(nu, u2, cfg);
                           const std::vector<double> v = {besselk(nu, harmonic(u1, u2), cfg), arithmetic(k1, k2)};
                           auto r = chain_rows({{"nu", nu}, {"u1", u1}, {"u2", u2}}, v, {1}, i == j);
                           rows.insert(rows.end(), r.begin(), r.end());
                         }
                         return rows;
                       }});
    }
  }
  return tasks;
}

// ---- envelopes, Turán, Laforgia -------------------------------------------

inline SweepRow side_row(const char* side, double nu, double u, double lhs, double rhs) {
  return row_lt({{"nu", nu}, {"u", u}, {side, 1}}, lhs, rhs);
}

inline std::vector<Task> build_envelope_i(const CheckContext& ctx) {
  const auto us = ctx.grid.axis("u").values();
  std::vector<Task> tasks;
  const std::vector<std::pair<const char*, bool>> parts = {{"nu", true}, {"nu_neg", false}};
  for (std::size_t part = 0; part < parts.size(); ++part) {
    const Axis* ax = ctx.grid.find(parts[part].first);
    if (!ax) continue;
    const bool with_lower = parts[part].second;
    for (double nu : ax->values()) bessel_certify::detail::require(nu > -1.0, "bounds.envelope_i: orders must exceed -1");
    const auto nus = ax->values();
    for (std::size_t i = 0; i < nus.size(); ++i) {
      const double nu = nus[i];
      tasks.push_back({{part, i}, {{"nu", nu}}, [=, cfg = ctx.cfg] {
                         std::vector<SweepRow> rows;
                         for (double u : us) {
                           const double r = log_deriv_i(nu, u, cfg);
                           const auto env = envelope_log_deriv_i(nu, u);
                           if (with_lower && env.lower_valid) rows.push_back(side_row("lower", nu, u, env.lower, r));
                           if (env.upper_valid) rows.push_back(side_row("upper", nu, u, r, env.upper));
                         }
                         return rows;
                       }});
    }
  }
  return tasks;
}

inline std::vector<Task> build_envelope_k(const CheckContext& ctx) {
  const auto us = ctx.grid.axis("u").values();
  std::vector<Task> tasks;
  const std::vector<std::pair<const char*, bool>> parts = {{"nu", true}, {"nu_all", false}};
  for (std::size_t part = 0; part < parts.size(); ++part) {
    const Axis* ax = ctx.grid.find(parts[part].first);
    if (!ax) continue;
    const bool with_lower = parts[part].second;
    const auto nus = ax->values();
    for (std::size_t i = 0; i < nus.size(); ++i) {
      const double nu = nus[i];
      tasks.push_back({{part, i}, {{"nu", nu}}, [=, cfg = ctx.cfg] {
                         std::vector<SweepRow> rows;
                         for (double u : us) {
                           const double s = log_deriv_k(nu, u, cfg);
                           const auto env = envelope_log_deriv_k(nu, u);
                           if (with_lower && env.lower_valid) rows.push_back(side_row("lower", nu, u, env.lower, s));
                           if (!with_lower && env.upper_valid) rows.push_back(side_row("upper", nu, u, s, env.upper));
                           if (with_lower && env.upper_valid) rows.push_back(side_row("upper", nu, u, s, env.upper));
                         }
                         return rows;
                       }});
    }
  }
  return tasks;
}

/// K'/K <= -nu/u - 1 for |nu| <= 1/2, equality rows at nu = 1/2.
inline std::vector<Task> build_laforgia(const CheckContext& ctx) {
  const auto nus = ctx.grid.axis("nu").values();
  const auto us = ctx.grid.axis("u").values();
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < nus.size(); ++i) {
    const double nu = nus[i];
    tasks.push_back({{i}, {{"nu", nu}}, [=, cfg = ctx.cfg] {
                       std::vector<SweepRow> rows;
                       for (double u : us) {
                         const double lhs = log_deriv_k(nu, u, cfg) / u;
                         const double rhs = laforgia_upper_k(nu, u);
                         Inputs in{{"nu", nu}, {"u", u}};
                         rows.push_back(nu == 0.5 ? row_eq(std::move(in), lhs, rhs, scaled_tol(lhs, rhs))
                                                  : row_le(std::move(in), lhs, rhs));
                       }
                       return rows;
                     }});
  }
  return tasks;
}

template <class Fn>
std::vector<Task> per_order_tasks(const CheckContext& ctx, Fn fn) {
  require_orders(ctx);
  const auto us = ctx.grid.axis("u").values();
  std::vector<Task> tasks;
  for (std::size_t a = 0; a < ctx.orders.size(); ++a) {
    const double nu = ctx.orders[a];
    tasks.push_back({{a}, {{"nu", nu}}, [=, cfg = ctx.cfg] { return fn(nu, us, cfg); }});
  }
  return tasks;
}

inline std::vector<Task> build_turan_i(const CheckContext& ctx) {
  for (double nu : ctx.orders) bessel_certify::detail::require(nu > 0.0, "turan_i: orders must be positive");
  return per_order_tasks(ctx, [](double nu, const std::vector<double>& us, const EvalConfig& cfg) {
    std::vector<SweepRow> rows;
    for (double u : us) rows.push_back(row_lt({{"nu", nu}, {"u", u}}, 0.0, turan_i(nu, u, cfg)));
    return rows;
  });
}

inline constexpr double kTuranIdentityTol = 1e-9;

inline std::vector<Task> build_turan_i_identity(const CheckContext& ctx) {
  for (double nu : ctx.orders) bessel_certify::detail::require(nu > 0.0, "turan_i: orders must be positive");
  return per_order_tasks(ctx, [](double nu, const std::vector<double>& us, const EvalConfig& cfg) {
    std::vector<SweepRow> rows;
    for (double u : us) {
      const double d = turan_i(nu, u, cfg), e = turan_i_identity(nu, u, cfg);
      rows.push_back(row_eq({{"nu", nu}, {"u", u}}, d, e, kTuranIdentityTol * std::abs(d)));
    }
    return rows;
  });
}

inline std::vector<Task> build_turan_k(const CheckContext& ctx) {
  return per_order_tasks(ctx, [](double nu, const std::vector<double>& us, const EvalConfig& cfg) {
    std::vector<SweepRow> rows;
    for (double u : us) rows.push_back(row_lt({{"nu", nu}, {"u", u}}, turan_k(nu, u, cfg), 0.0));
    return rows;
  });
}

inline std::vector<Task> build_turan_k_identity(const CheckContext& ctx) {
  return per_order_tasks(ctx, [](double nu, const std::vector<double>& us, const EvalConfig& cfg) {
    std::vector<SweepRow> rows;
    for (double u : us) {
      const double d = turan_k(nu, u, cfg), e = turan_k_identity(nu, u, cfg);
      rows.push_back(row_eq({{"nu", nu}, {"u", u}}, d, e, kTuranIdentityTol * std::abs(d)));
    }
    return rows;
  });
}

// ---- (p,q)-convexity ------------------------------------------------------

inline constexpr double kIndicatorFdStep = 1e-4;
inline constexpr double kIndicatorFdTol = 1e-5;

/// Central difference of u^{1-p} f' f^{q-1} with step 1e-4 u.
inline double indicator_fd(BesselKind kind, PQPair pq, double nu, double u, const EvalConfig& cfg) {
  const double h = kIndicatorFdStep * u;
  const double hi = lemma3_function(kind, pq, nu, u + h, cfg).value();
  const double lo = lemma3_function(kind, pq, nu, u - h, cfg).value();
  return (hi - lo) / (2.0 * h);
}

/// Size of the terms making up the indicator; differences are measured
/// relative to max(|indicator|, this).
inline double indicator_scale(BesselKind kind, PQPair pq, double nu, double u, const EvalConfig& cfg) {
  const double r = bessel_certify::detail::log_deriv(kind, nu, u, cfg);
  const double terms = u * u + nu * nu + std::abs(pq.p * r) + std::abs((1.0 - pq.q) * r * r);
  return terms * std::exp(pq.q * bessel_certify::detail::log_bessel(kind, nu, u, cfg) - (pq.p + 1.0) * std::log(u));
}

inline std::vector<Task> build_pq_fd(const CheckContext& ctx, BesselKind kind) {
  auto rng = stream_for(ctx.grid.seed, ctx.check_id);
  const Axis& ua = ctx.grid.axis("u");
  std::vector<Task> tasks;
  for (int s = 0; s < ctx.grid.samples; ++s) {
    const PQPair pq{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    const double nu = kind == BesselKind::I ? 6.0 - rng.uniform(0.0, 7.0) : rng.uniform(-6.0, 6.0);
    const double u = rng.log_uniform(ua.min, ua.max);
    Inputs in{{"p", pq.p}, {"q", pq.q}, {"nu", nu}, {"u", u}};
    tasks.push_back({{static_cast<std::size_t>(s)}, in, [=, cfg = ctx.cfg] {
                       const double ind = bessel_certify::detail::pq_indicator(kind, pq, nu, u, cfg);
                       const double fd = indicator_fd(kind, pq, nu, u, cfg);
                       const double scale = std::max(std::abs(ind), indicator_scale(kind, pq, nu, u, cfg));
                       return std::vector<SweepRow>{row_eq(in, ind, fd, kIndicatorFdTol * scale)};
                     }});
  }
  return tasks;
}

struct ClauseBox {
  double p_lo, p_hi, q_lo, q_hi, nu_lo, nu_hi;
};

/// Sampling boxes per clause. Each box covers the clause's hypotheses on
/// (p, q) and the full order range the clause allows (capped at |nu| <= 6);
/// orders are drawn from (nu_lo, nu_hi] and draws are kept only when the
/// predicate fires exactly that clause.
inline ClauseBox clause_box(BesselKind kind, char clause) {
  if (kind == BesselKind::I) {
    switch (clause) {
      case 'a': return {-3, 0, 0, 3, -1, 6};
      case 'b': return {-3, 0, -3, 0, 0, 6};
      case 'c': return {0, 3, -3, -1, 1, 6};
      case 'd': return {0, 3, 0, 3, -1, 6};
      default: return {0, 1, 1, 3, -1, 6};
    }
  }
  switch (clause) {
    case 'a': return {-3, 0, 1, 3, 1, 6};
    case 'b': return {-3, 0, -3, 0, -6, 6};
    case 'c': return {0, 3, -3, 0, -6, 6};
    case 'd': return {0, 3, 1, 3, -6, 6};
    default: return {1, 3, 0, 1, -6, 6};
  }
}

inline std::vector<Task> build_pq_clause(const CheckContext& ctx, BesselKind kind, char clause) {
  auto rng = stream_for(ctx.grid.seed, ctx.check_id);
  const auto us = ctx.grid.axis("u").values();
  const ClauseBox box = clause_box(kind, clause);
  std::vector<Task> tasks;
  int drawn = 0;
  for (int attempt = 0; drawn < ctx.grid.samples; ++attempt) {
    bessel_certify::detail::require(attempt < 1000 * ctx.grid.samples, "pq sweep: clause sampling box too sparse");
    const PQPair pq{rng.uniform(box.p_lo, box.p_hi), rng.uniform(box.q_lo, box.q_hi)};
    const double nu = box.nu_hi - rng.uniform(0.0, box.nu_hi - box.nu_lo);
    const RegionVerdict v = kind == BesselKind::I ? region_predicate_i(pq, nu) : region_predicate_k(pq, nu);
    if (v.clause != clause) continue;
    const Monotonicity expected = v.region == Region::convex ? Monotonicity::increasing : Monotonicity::decreasing;
    const int dir = expected == Monotonicity::increasing ? 1 : -1;
    Inputs in{{"p", pq.p}, {"q", pq.q}, {"nu", nu}};
    tasks.push_back({{static_cast<std::size_t>(drawn)}, in, [=, cfg = ctx.cfg] {
                       const auto res = lemma3_monotonicity_test(kind, pq, nu, us, cfg);
                       double worst = std::numeric_limits<double>::infinity();
                       for (std::size_t i = 0; i + 1 < res.values.size(); ++i)
                         worst = std::min(worst, dir * relative_step(res.values[i], res.values[i + 1]));
                       SweepRow row{{}, in, 0.0, worst, worst, res.classification == expected, worst > kMonotoneTieTol};
                       return std::vector<SweepRow>{row};
                     }});
    ++drawn;
  }
  return tasks;
}

// ---- Mills ratio ----------------------------------------------------------

inline std::vector<SweepRow> mills_rows(double u1, double u2, bool reversal) {
  const auto c = mills_chain(u1, u2);
  const std::vector<double> v(c.values.begin(), c.values.end());
  Inputs base{{"u1", u1}, {"u2", u2}};
  if (!reversal) return chain_rows(base, v, {1, 2, 3, 4, 5}, u1 == u2);
  auto rows = chain_rows(base, v, {1, 2, 3, 5}, false);
  Inputs in = base;
  in.emplace_back("ineq", 4);
  rows.insert(rows.begin() + 3, row_le(std::move(in), v[4], v[3]));
  return rows;
}

inline std::vector<Task> build_mills_random(const CheckContext& ctx, bool reversal) {
  auto rng = stream_for(ctx.grid.seed, ctx.check_id);
  const double u0 = u0_constant();
  std::vector<Task> tasks;
  for (int s = 0; s < ctx.grid.samples; ++s) {
    double u1, u2;
    if (reversal) {
      do u1 = rng.uniform(0.0, u0); while (!(u1 > 0.0));
      do u2 = rng.uniform(0.0, u0); while (!(u2 > 0.0));
    } else {
      // (u0, 10]: 10 - U [0, 10 - u0) lands in (u0, 10].
      u1 = 10.0 - rng.uniform(0.0, 10.0 - u0);
      u2 = 10.0 - rng.uniform(0.0, 10.0 - u0);
    }
    tasks.push_back({{static_cast<std::size_t>(s)}, {{"u1", u1}, {"u2", u2}}, [=] { return mills_rows(u1, u2, reversal); }});
  }
  return tasks;
}

inline std::vector<Task> build_mills_diagonal(const CheckContext& ctx) {
  const auto us = ctx.grid.axis("u").values();
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < us.size(); ++i) {
    const double u = us[i];
    tasks.push_back({{i}, {{"u", u}}, [=] { return mills_rows(u, u, false); }});
  }
  return tasks;
}

// ---- gamma-gamma ----------------------------------------------------------

inline GammaGammaParams draw_params(Xoshiro256& rng) {
  GammaGammaParams p;
  p.a = rng.uniform(0.5, 5.0);
  p.b = rng.uniform(0.5, 5.0);
  p.alpha = rng.uniform(0.5, 4.0);
  return p;
}

inline Inputs params_inputs(const GammaGammaParams& p) { return {{"a", p.a}, {"b", p.b}, {"alpha", p.alpha}}; }

inline constexpr double kNormalizationTol = 1e-6;
inline constexpr double kTransformTol = 1e-10;
inline constexpr double kTransformedAnalyticTol = 1e-8;

inline std::vector<Task> build_gg_normalization(const CheckContext& ctx) {
  auto rng = stream_for(ctx.grid.seed, ctx.check_id);
  std::vector<Task> tasks;
  for (int s = 0; s < ctx.grid.samples; ++s) {
    const auto p = draw_params(rng);
    tasks.push_back({{static_cast<std::size_t>(s)}, params_inputs(p), [=, cfg = ctx.cfg] {
                       // Split at the mean: mass below plus mass above.
                       const bessel_certify::detail::SqrtDensity g{p, cfg};
                       const double x = std::sqrt(p.alpha);
                       const double total = bessel_certify::detail::gg_lower_integral(g, x) +
                                            bessel_certify::detail::gg_upper_integral(g, x);
                       return std::vector<SweepRow>{row_eq(params_inputs(p), total, 1.0, kNormalizationTol)};
                     }});
  }
  return tasks;
}

inline std::vector<Task> build_gg_transform(const CheckContext& ctx) {
  auto rng = stream_for(ctx.grid.seed, ctx.check_id);
  const auto us = ctx.grid.axis("u").values();
  std::vector<Task> tasks;
  for (int s = 0; s < ctx.grid.samples; ++s) {
    const auto p = draw_params(rng);
    tasks.push_back({{static_cast<std::size_t>(s)}, params_inputs(p), [=, cfg = ctx.cfg] {
                       std::vector<SweepRow> rows;
                       for (double u : us) {
                         const double ft = pdf_transformed(p, u, cfg);
                         const double f = pdf(p, p.alpha * u * u / (4.0 * p.a * p.b), cfg);
                         Inputs in = params_inputs(p);
                         in.emplace_back("u", u);
                         rows.push_back(row_eq(std::move(in), ft, f, kTransformTol * std::abs(f)));
                       }
                       return rows;
                     }});
  }
  return tasks;
}

/// (a, b) pairs of the shape-parameter sweep; alpha is fixed at 1.
inline std::vector<GammaGammaParams> concavity_params() { return {{1, 1, 1}, {2, 3, 1}, {0.7, 4, 1}, {2.5, 2.5, 1}}; }

/// Rows per parameter set: quantity 0 compares the finite-difference
/// u f~'/f~ with a+b-2 + u K'/K; quantities 1-4 are strict decrease of
/// u f~'/f~, u f'/f, u F'/F, F'/F between consecutive grid points; quantity
/// 5 bounds the second difference of ln F by kLogConcavitySlack.
inline std::vector<Task> build_gg_concavity(const CheckContext& ctx) {
  const auto us = ctx.grid.axis("u").values();
  const auto sets = concavity_params();
  std::vector<Task> tasks;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto p = sets[k];
    tasks.push_back({{k}, params_inputs(p), [=, cfg = ctx.cfg] {
                       const auto rep = concavity_checks(p, us, cfg);
                       std::vector<SweepRow> rows;
                       auto with = [&](double quantity) {
                         Inputs in = params_inputs(p);
                         in.emplace_back("quantity", quantity);
                         return in;
                       };
                       for (std::size_t i = 0; i < us.size(); ++i) {
                         Inputs in = with(0);
                         in.emplace_back("u", us[i]);
                         rows.push_back(row_eq(std::move(in), rep.transformed.values[i], rep.transformed_analytic[i],
                                               kTransformedAnalyticTol));
                       }
                       const MonotoneSeries* series[] = {&rep.transformed, &rep.density, &rep.cdf_geometric, &rep.cdf_log};
                       for (int q = 0; q < 4; ++q) {
                         auto r = monotone_rows(with(q + 1), us, series[q]->values, -1);
                         rows.insert(rows.end(), r.begin(), r.end());
                       }
                       for (std::size_t i = 0; i < rep.log_cdf_second_differences.size(); ++i) {
                         Inputs in = with(5);
                         in.emplace_back("u", us[i + 1]);
                         const double d2 = rep.log_cdf_second_differences[i];
                         rows.push_back({{}, std::move(in), d2, kLogConcavitySlack, kLogConcavitySlack - d2,
                                         d2 <= kLogConcavitySlack, d2 < 0.0});
                       }
                       return rows;
                     }});
  }
  return tasks;
}

// ---- remarks and open problems ---------------------------------------------

/// u^2 K'_nu(u) = u K_nu(u) * (u K'_nu / K_nu).
inline double u2_kprime(double nu, double u, const EvalConfig& cfg) {
  return u * besselk(nu, u, cfg) * log_deriv_k(nu, u, cfg);
}

template <class Fn>
std::vector<Task> sampled_monotone(const CheckContext& ctx, int sign, Fn value) {
  return per_order_tasks(ctx, [=](double nu, const std::vector<double>& us, const EvalConfig& cfg) {
    std::vector<double> v;
    v.reserve(us.size());
    for (double u : us) v.push_back(value(nu, u, cfg));
    return monotone_rows({{"nu", nu}}, us, v, sign);
  });
}

inline std::vector<Task> build_gg_nbu(const CheckContext& ctx) {
  const auto us = ctx.grid.axis("u").values();
  const std::vector<GammaGammaParams> sets = {{2, 2, 1}, {1, 1, 1}, {0.7, 4, 1}};
  std::vector<Task> tasks;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto p = sets[k];
    tasks.push_back({{k}, params_inputs(p), [=, cfg = ctx.cfg] {
                       std::vector<std::pair<double, double>> pairs;
                       for (double u1 : us)
                         for (double u2 : us) pairs.emplace_back(u1, u2);
                       std::vector<double> s;
                       for (double u : us) s.push_back(survival(p, u, cfg));
                       std::vector<SweepRow> rows;
                       const auto probe = nbu_probe(p, pairs, cfg);
                       for (std::size_t k = 0; k < probe.size(); ++k) {
                         const auto& r = probe[k];
                         Inputs in = params_inputs(p);
                         in.emplace_back("u1", r.u1);
                         in.emplace_back("u2", r.u2);
                         const double prod = s[k / us.size()] * s[k % us.size()];
                         rows.push_back(row_le(std::move(in), r.value + prod, prod));
                       }
                       return rows;
                     }});
  }
  return tasks;
}

inline std::vector<Task> build_gg_ifr(const CheckContext& ctx) {
  const auto us = ctx.grid.axis("u").values();
  const std::vector<GammaGammaParams> sets = {{2, 2, 1}, {1, 1, 1}, {0.7, 4, 1}, {0.6, 0.8, 1}};
  std::vector<Task> tasks;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto p = sets[k];
    tasks.push_back({{k}, params_inputs(p), [=, cfg = ctx.cfg] {
                       std::vector<double> v;
                       for (double u : us) v.push_back(hazard(p, u, cfg));
                       return monotone_rows(params_inputs(p), us, v, +1);
                     }});
  }
  return tasks;
}

}  // namespace detail

/// Every check known to the sweep engine, in `sweep --all` order. Checks
/// whose id starts with "explore." are exploratory and never count as
/// failures.
inline const std::vector<CheckDef>& check_catalog() {
  using namespace detail;
  static const std::vector<CheckDef> catalog = [] {
    const double nu0 = nu0_constant();
    std::vector<CheckDef> c;
    auto grid = [](std::vector<Axis> axes, int samples = 1) { return GridSpec{std::move(axes), 0, samples}; };
    auto fixed = [](auto fn) { return std::function<std::vector<Task>(const CheckContext&)>(fn); };

    c.push_back({"chain_i", "I_nu mean chain on all grid pairs; clause set follows nu",
                 grid({log_axis("u", 0.1, 10, 30)}), {nu0, 1.5, 2, 5, -0.5, 0, 0.4, 0.5}, fixed(build_chain_i)});
    c.push_back({"chain_k", "K_nu mean chain; first inequality only for |nu| >= 1", grid({log_axis("u", 0.1, 10, 30)}),
                 {1, -1, 1.2, -1.2, 3, -3, 0.3, 0}, fixed(build_chain_k)});
    c.push_back({"chain_k20", "K(H(u1,u2)) <= A(K); all pairs for |nu| >= 5/4, else u1,u2 > 2",
                 grid({log_axis("u", 0.1, 10, 30)}), {1.25, -1.25, 2, -2, 0.3}, fixed(build_chain_k20)});
    c.push_back({"bounds.envelope_i", "envelope of u I'/I (lower for nu > 0, upper for nu > -1)",
                 grid({log_axis("nu", 0.01, 10, 60), lin_axis("nu_neg", -0.99, 0, 60), log_axis("u", 0.01, 50, 60)}),
                 {}, fixed(build_envelope_i)});
    c.push_back({"bounds.envelope_k", "envelope of u K'/K (lower for nu > 1, upper for all nu)",
                 grid({log_axis("nu", 1.01, 10, 60), lin_axis("nu_all", -10, 10, 61), log_axis("u", 0.01, 50, 60)}), {},
                 fixed(build_envelope_k)});
    c.push_back({"bounds.laforgia", "K'/K <= -nu/u - 1 for |nu| <= 1/2, equality at 1/2",
                 grid({lin_axis("nu", -0.5, 0.5, 21), log_axis("u", 0.01, 50, 60)}), {}, fixed(build_laforgia)});
    c.push_back({"turan_i", "I_nu^2 - I_{nu-1} I_{nu+1} > 0", grid({log_axis("u", 0.01, 30, 60)}), {0.1, 0.5, 1, 2, 7},
                 fixed(build_turan_i)});
    c.push_back({"turan_i.identity", "product and derivative forms of the I determinant agree to 1e-9",
                 grid({log_axis("u", 0.1, 30, 30)}), {0.1, 0.5, 1, 2, 7}, fixed(build_turan_i_identity)});
    c.push_back({"turan_k", "K_nu^2 - K_{nu-1} K_{nu+1} < 0", grid({log_axis("u", 0.01, 30, 60)}),
                 {-3, -0.5, 0, 0.5, 1, 4}, fixed(build_turan_k)});
    c.push_back({"turan_k.identity", "product and derivative forms of the K determinant agree to 1e-9",
                 grid({log_axis("u", 0.1, 30, 30)}), {-3, -0.5, 0, 0.5, 1, 4}, fixed(build_turan_k_identity)});
    c.push_back({"pq_i.fd", "lambda indicator vs central difference, 100 random points",
                 grid({log_axis("u", 0.05, 20, 2)}, 100), {},
                 fixed([](const CheckContext& x) { return build_pq_fd(x, BesselKind::I); })});
    c.push_back({"pq_k.fd", "mu indicator vs central difference, 100 random points",
                 grid({log_axis("u", 0.05, 20, 2)}, 100), {},
                 fixed([](const CheckContext& x) { return build_pq_fd(x, BesselKind::K); })});
    for (BesselKind kind : {BesselKind::I, BesselKind::K}) {
      const std::string prefix = kind == BesselKind::I ? "pq_i." : "pq_k.";
      for (char clause : {'a', 'b', 'c', 'd', 'e'}) {
        c.push_back({prefix + clause, "region predicate clause vs monotonicity test, 200 random (p,q,nu)",
                     grid({log_axis("u", 0.05, 20, 50)}, 200), {},
                     fixed([kind, clause](const CheckContext& x) { return build_pq_clause(x, kind, clause); })});
      }
    }
    c.push_back({"mills.chain", "Mills ratio chain for 500 random pairs in (u0, 10]^2", grid({}, 500), {},
                 fixed([](const CheckContext& x) { return build_mills_random(x, false); })});
    c.push_back({"mills.reversal", "fourth Mills inequality reversed for 500 random pairs in (0, u0)^2", grid({}, 500),
                 {}, fixed([](const CheckContext& x) { return build_mills_random(x, true); })});
    c.push_back({"mills.diagonal", "Mills chain equalities at u1 = u2", grid({log_axis("u", 0.01, 10, 40)}), {},
                 fixed(build_mills_diagonal)});
    c.push_back({"gg.normalization", "integral of the density is 1 for 10 random (a, b, alpha)", grid({}, 10), {},
                 fixed(build_gg_normalization)});
    c.push_back({"gg.transform", "f~(u) = f(alpha u^2 / (4ab)) for 10 random (a, b, alpha)",
                 grid({log_axis("u", 0.05, 20, 20)}, 10), {}, fixed(build_gg_transform)});
    c.push_back({"gg.concavity", "four decreasing log-derivative quantities and log-concavity of F",
                 grid({log_axis("u", 0.05, 20, 50)}), {}, fixed(build_gg_concavity)});
    c.push_back({"remark.u2kprime_01", "u^2 K'_nu strictly decreasing on (0, 1) for |nu| <= 1/2",
                 grid({log_axis("u", 0.01, 0.99, 40)}), {0, 0.25, 0.5},
                 fixed([](const CheckContext& x) { return sampled_monotone(x, -1, u2_kprime); })});
    c.push_back({"remark.u2kprime_2inf", "u^2 K'_nu strictly increasing on (2, inf)", grid({log_axis("u", 2.05, 40, 40)}),
                 {0, 3}, fixed([](const CheckContext& x) { return sampled_monotone(x, +1, u2_kprime); })});
    c.push_back({"remark.i_logconvex", "I'_nu/I_nu strictly increasing (log-convexity) for nu in [-1/2, 0]",
                 grid({log_axis("u", 0.01, 30, 60)}), {-0.5, -0.25, 0}, fixed([](const CheckContext& x) {
                   return sampled_monotone(x, +1, [](double nu, double u, const EvalConfig& cfg) {
                     return log_deriv_i(nu, u, cfg) / u;
                   });
                 })});
    c.push_back({"explore.u2kprime_12", "is u^2 K'_nu decreasing on (1, 2) for |nu| <= 1/2?",
                 grid({lin_axis("u", 1, 2, 40)}), {0, 0.25, 0.4, 0.5},
                 fixed([](const CheckContext& x) { return sampled_monotone(x, -1, u2_kprime); })});
    c.push_back({"explore.i_logconcave", "is I'_nu/I_nu decreasing for nu > 0?", grid({log_axis("u", 0.01, 30, 60)}),
                 {0.25, 1, 3}, fixed([](const CheckContext& x) {
                   return sampled_monotone(x, -1, [](double nu, double u, const EvalConfig& cfg) {
                     return log_deriv_i(nu, u, cfg) / u;
                   });
                 })});
    c.push_back({"explore.sqrt_i_logconcave", "is sqrt(u) I_nu log-concave for nu in [0, 1/2)?",
                 grid({log_axis("u", 0.01, 30, 60)}), {0, 0.25}, fixed([](const CheckContext& x) {
                   return sampled_monotone(x, -1, [](double nu, double u, const EvalConfig& cfg) {
                     return (log_deriv_i(nu, u, cfg) + 0.5) / u;
                   });
                 })});
    c.push_back({"explore.u_iprime_over_i2", "is u I'_nu/I_nu^2 decreasing for |nu| < 1?", grid({log_axis("u", 0.01, 30, 60)}),
                 {0, 0.5, 0.9}, fixed([](const CheckContext& x) {
                   return sampled_monotone(x, -1, [](double nu, double u, const EvalConfig& cfg) {
                     return log_deriv_i(nu, u, cfg) / besseli(nu, u, cfg);
                   });
                 })});
    c.push_back({"explore.k_prime_over_k2", "is K'_nu/K_nu^2 decreasing for |nu| < 1?",
                 grid({log_axis("u", 0.01, 20, 60)}), {0, 0.3, 0.7}, fixed([](const CheckContext& x) {
                   return sampled_monotone(x, -1, [](double nu, double u, const EvalConfig& cfg) {
                     return log_deriv_k(nu, u, cfg) / (u * besselk(nu, u, cfg));
                   });
                 })});
    c.push_back({"explore.gg_nbu", "S(u1 + u2) <= S(u1) S(u2) for the gamma-gamma survival function",
                 grid({log_axis("u", 0.1, 10, 10)}), {}, fixed(build_gg_nbu)});
    c.push_back({"explore.gg_ifr", "is the gamma-gamma hazard rate increasing?", grid({log_axis("u", 0.05, 20, 30)}), {},
                 fixed(build_gg_ifr)});
    return c;
  }();
  return catalog;
}

inline const CheckDef* find_check(const std::string& id) {
  for (const auto& c : check_catalog())
    if (c.id == id) return &c;
  return nullptr;
}

struct SweepOptions {
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::size_t chunks = 1;
  bool timing = false;
  EvalConfig cfg;
};

/// Runs a check with the given grid and orders.
inline SweepReport run_check(const CheckDef& def, const GridSpec& grid, const std::vector<double>& orders,
                             const SweepOptions& opt) {
  grid.validate();
  CheckContext ctx{def.id, grid, orders, opt.cfg};
  ctx.grid.seed = opt.seed;
  const auto tasks = def.build(ctx);
  return evaluate_chunked(def.id, tasks, opt.chunks, opt.workers, opt.timing);
}

/// Runs a check with its default grid and orders.
inline SweepReport run_check(const CheckDef& def, const SweepOptions& opt) {
  return run_check(def, def.default_grid, def.default_orders, opt);
}

inline SweepReport run_check(const std::string& id, const SweepOptions& opt) {
  const CheckDef* def = find_check(id);
  if (!def) throw bessel_certify::domain_error("unknown check id '" + id + "'");
  return run_check(*def, opt);
}

// Single-order conveniences mirroring the catalog entries.

inline SweepReport sweep_chain_i(Order order, const GridSpec& grid, const SweepOptions& opt = {}) {
  return run_check(*find_check("chain_i"), grid, {order.value()}, opt);
}

inline SweepReport sweep_chain_k(Order order, const GridSpec& grid, const SweepOptions& opt = {}) {
  return run_check(*find_check("chain_k"), grid, {order.value()}, opt);
}

/// Folds several reports into one under `id`; row indices are prefixed with
/// the report's position.
inline SweepReport combine(const std::string& id, const std::vector<SweepReport>& parts) {
  SweepReport out;
  out.check_id = id;
  out.asserted = false;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    out.asserted = out.asserted || parts[k].asserted;
    out.runtime_ms += parts[k].runtime_ms;
    for (auto row : parts[k].rows) {
      row.index.insert(row.index.begin(), k);
      out.rows.push_back(std::move(row));
    }
  }
  finalize(out);
  return out;
}

/// Envelope and Laforgia checks over the given order and u ranges.
inline SweepReport sweep_bounds(double nu_max, double u_min, double u_max, int count = 60, const SweepOptions& opt = {}) {
  bessel_certify::detail::require(nu_max > 1.01 && u_min > 0.0 && u_min < u_max, "sweep_bounds: invalid ranges");
  const Axis u = log_axis("u", u_min, u_max, count);
  std::vector<SweepReport> parts;
  parts.push_back(run_check(*find_check("bounds.envelope_i"),
                            {{log_axis("nu", 0.01, nu_max, count), lin_axis("nu_neg", -0.99, 0, count), u}}, {}, opt));
  parts.push_back(run_check(*find_check("bounds.envelope_k"),
                            {{log_axis("nu", 1.01, nu_max, count), lin_axis("nu_all", -nu_max, nu_max, count), u}}, {},
                            opt));
  parts.push_back(run_check(*find_check("bounds.laforgia"), {{lin_axis("nu", -0.5, 0.5, 21), u}}, {}, opt));
  return combine("bounds", parts);
}

/// Indicator finite-difference check plus every region clause for one kind.
inline SweepReport sweep_pq(BesselKind kind, const SweepOptions& opt = {}) {
  const std::string prefix = kind == BesselKind::I ? "pq_i." : "pq_k.";
  std::vector<SweepReport> parts;
  for (const char* suffix : {"fd", "a", "b", "c", "d", "e"}) parts.push_back(run_check(prefix + suffix, opt));
  return combine(prefix.substr(0, 4), parts);
}

/// Remark checks (asserted) followed by the exploratory ones.
inline std::vector<SweepReport> sweep_open_problems(const SweepOptions& opt = {}) {
  std::vector<SweepReport> out;
  for (const auto& c : check_catalog())
    if (c.id.rfind("remark.", 0) == 0 || is_exploratory(c.id)) out.push_back(run_check(c, opt));
  return out;
}

}  // namespace bessel_certify::verify

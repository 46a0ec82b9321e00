#pragma once

// Power and quasi-arithmetic means, the (p,q)-convexity indicators of I_nu
// and K_nu, the monotonicity characterisation of (p,q)-convexity, and the
// sufficient-condition region predicates.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bessel_certify/bessel.hpp"
#include "bessel_certify/config.hpp"
#include "bessel_certify/errors.hpp"
#include "bessel_certify/roots.hpp"

namespace bessel_certify {

struct PQPair {
  double p = 0.0;
  double q = 0.0;
};

/// Power-mean exponent p (0 = geometric) and weight lambda in [0, 1].
struct MeanSpec {
  double p = 1.0;
  double lambda = 0.5;
};

/// M_p^(lambda)(u1, u2) = [(1-lambda) u1^p + lambda u2^p]^(1/p) for p != 0,
/// u1^lambda u2^(1-lambda) for p = 0. The weight sits on u2 in the first
/// branch and on u1 in the second.
inline double power_mean(const MeanSpec& spec, double u1, double u2) {
  detail::require(u1 > 0.0 && u2 > 0.0 && std::isfinite(u1) && std::isfinite(u2),
                  "power_mean: arguments must be positive and finite");
  detail::require(spec.lambda >= 0.0 && spec.lambda <= 1.0, "power_mean: lambda must lie in [0, 1]");
  detail::require(std::isfinite(spec.p), "power_mean: p must be finite");
  const double lam = spec.lambda;
  if (spec.p == 0.0) return std::exp(lam * std::log(u1) + (1.0 - lam) * std::log(u2));
  // Factor out the larger argument so u^p cannot overflow for large |p|.
  const double big = std::max(u1, u2);
  const double s = (1.0 - lam) * std::pow(u1 / big, spec.p) + lam * std::pow(u2 / big, spec.p);
  const double m = big * std::pow(s, 1.0 / spec.p);
  return std::clamp(m, std::min(u1, u2), big);
}

/// phi^{-1}(lambda phi(u1) + (1 - lambda) phi(u2)) for a strictly monotone
/// generator phi with inverse phi_inv.
template <class Phi, class PhiInv>
double quasi_arithmetic_mean(Phi&& phi, PhiInv&& phi_inv, double lambda, double u1, double u2) {
  detail::require(lambda >= 0.0 && lambda <= 1.0, "quasi_arithmetic_mean: lambda must lie in [0, 1]");
  const double y = lambda * phi(u1) + (1.0 - lambda) * phi(u2);
  double x;
  try {
    x = phi_inv(y);
  } catch (const std::exception& e) {
    throw domain_error(std::string("quasi_arithmetic_mean: inverse failed: ") + e.what());
  }
  if (!std::isfinite(x)) throw domain_error("quasi_arithmetic_mean: inverse returned a non-finite value");
  return x;
}

enum class BesselKind { I, K };

inline const char* to_string(BesselKind k) { return k == BesselKind::I ? "I" : "K"; }

namespace detail {

inline double log_bessel(BesselKind kind, double nu, double u, const EvalConfig& cfg) {
  return kind == BesselKind::I ? log_besseli(nu, u, cfg) : log_besselk(nu, u, cfg);
}

inline double log_deriv(BesselKind kind, double nu, double u, const EvalConfig& cfg) {
  return kind == BesselKind::I ? log_deriv_i(nu, u, cfg) : log_deriv_k(nu, u, cfg);
}

inline void check_kind_domain(BesselKind kind, double nu, double u) {
  if (kind == BesselKind::I) check_i_domain(nu, u);
  else check_k_domain(nu, u);
}

}  // namespace detail

/// A real number stored as sign and log-magnitude, so that products such as
/// u^{-p} f^q R stay representable for large |p|, |q|.
struct SignedLog {
  int sign = 0;  ///< -1, 0 or +1
  double log_abs = -std::numeric_limits<double>::infinity();

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

/// u^{1-p} f'(u) f(u)^{q-1} = u^{-p} f^q (u f'/f), f in {I_nu, K_nu}.
inline SignedLog lemma3_function(BesselKind kind, PQPair pq, Order order, double u, const EvalConfig& cfg = {}) {
  const double nu = order.value();
  detail::check_kind_domain(kind, nu, u);
  const double r = detail::log_deriv(kind, nu, u, cfg);
  SignedLog out;
  if (r == 0.0) return out;
  out.sign = r > 0 ? 1 : -1;
  out.log_abs = -pq.p * std::log(u) + pq.q * detail::log_bessel(kind, nu, u, cfg) + std::log(std::abs(r));
  return out;
}

namespace detail {

inline double pq_indicator(BesselKind kind, PQPair pq, double nu, double u, const EvalConfig& cfg) {
  check_kind_domain(kind, nu, u);
  const double r = log_deriv(kind, nu, u, cfg);
  const double bracket = u * u + nu * nu - pq.p * r - (1.0 - pq.q) * r * r;
  if (bracket == 0.0) return 0.0;
  const double log_prefactor = pq.q * log_bessel(kind, nu, u, cfg) - (pq.p + 1.0) * std::log(u);
  return bracket * to_linear(log_prefactor, "pq_indicator");
}

}  // namespace detail

/// lambda_{p,q,nu}(u) = (I^q / u^{p+1}) [u^2 + nu^2 - p R - (1-q) R^2], R = u I'/I.
/// This is d/du of u^{1-p} I'_nu I_nu^{q-1}.
inline double pq_indicator_i(PQPair pq, Order order, double u, const EvalConfig& cfg = {}) {
  return detail::pq_indicator(BesselKind::I, pq, order.value(), u, cfg);
}

/// mu_{p,q,nu}(u), the same expression with K_nu and S = u K'/K.
inline double pq_indicator_k(PQPair pq, Order order, double u, const EvalConfig& cfg = {}) {
  return detail::pq_indicator(BesselKind::K, pq, order.value(), u, cfg);
}

enum class Monotonicity { increasing, decreasing, mixed };

inline const char* to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::increasing: return "increasing";
    case Monotonicity::decreasing: return "decreasing";
    default: return "mixed";
  }
}

/// Relative step (h2 - h1) / max(|h1|, |h2|) between two signed-log values;
/// lies in [-2, 2].
inline double relative_step(const SignedLog& a, const SignedLog& b) {
  if (a.sign == 0 && b.sign == 0) return 0.0;
  if (a.sign == 0) return b.sign;
  if (b.sign == 0) return -a.sign;
  const double d = b.log_abs - a.log_abs;
  if (a.sign == b.sign) {
    const double mag = -std::expm1(-std::abs(d));
    return a.sign * (d >= 0 ? mag : -mag);
  }
  return b.sign * (1.0 + std::exp(-std::abs(d)));
}

struct MonotonicityResult {
  Monotonicity classification = Monotonicity::mixed;
  /// Smallest relative step in the reported direction; for mixed, minus the
  /// size of the largest step against the first observed direction.
  double margin = 0.0;
  /// Grid indices (i, i+1) of the first step against the first observed direction.
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;
  std::vector<SignedLog> values;
};

/// Relative tie tolerance for consecutive samples.
inline constexpr double kMonotoneTieTol = 1e-12;

/// Samples u^{1-p} f' f^{q-1} on an increasing grid and classifies it.
/// Steps with |relative step| <= 1e-12 are ties and do not count either way;
/// a grid made only of ties is reported as mixed with margin 0.
inline MonotonicityResult lemma3_monotonicity_test(BesselKind kind, PQPair pq, Order order,
                                             const std::vector<double>& grid, const EvalConfig& cfg = {}) {
  detail::require(grid.size() >= 3, "lemma3_monotonicity_test: grid needs at least 3 points");
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    detail::require(grid[i] < grid[i + 1], "lemma3_monotonicity_test: grid must be strictly increasing");
  MonotonicityResult out;
  out.values.reserve(grid.size());
  for (double u : grid) out.values.push_back(lemma3_function(kind, pq, order, u, cfg));

  int direction = 0;
  double min_with = std::numeric_limits<double>::infinity();
  double max_against = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double step = relative_step(out.values[i], out.values[i + 1]);
    if (std::abs(step) <= kMonotoneTieTol) {
      min_with = std::min(min_with, std::abs(step));
      continue;
    }
    const int s = step > 0 ? 1 : -1;
    if (direction == 0) direction = s;
    if (s == direction) {
      min_with = std::min(min_with, std::abs(step));
    } else {
      if (!out.first_violation) out.first_violation = std::make_pair(i, i + 1);
      max_against = std::max(max_against, std::abs(step));
    }
  }
  if (direction == 0) {
    out.classification = Monotonicity::mixed;
    out.margin = 0.0;
  } else if (out.first_violation) {
    out.classification = Monotonicity::mixed;
    out.margin = -max_against;
  } else {
    out.classification = direction > 0 ? Monotonicity::increasing : Monotonicity::decreasing;
    out.margin = min_with;
  }
  return out;
}

enum class Region { convex, concave, undetermined };

inline const char* to_string(Region r) {
  switch (r) {
    case Region::convex: return "convex";
    case Region::concave: return "concave";
    default: return "undetermined";
  }
}

/// Predicate outcome plus the clause letter that fired ('-' when none did).
struct RegionVerdict {
  Region region = Region::undetermined;
  char clause = '-';
};

/// 4q(q-1) nu^3 - (p^2 - 4(q-1)) nu^2 - 2 p^2 nu - p^2.
inline double region_i_cubic(PQPair pq, double nu) {
  const double p2 = pq.p * pq.p, q = pq.q;
  return 4.0 * q * (q - 1.0) * nu * nu * nu - (p2 - 4.0 * (q - 1.0)) * nu * nu - 2.0 * p2 * nu - p2;
}

/// 4(1-q) p^2 nu^2 + 4(q-2) p^2 nu + p^2 (p^2 + 4).
inline double region_k_quartic(PQPair pq, double nu) {
  const double p2 = pq.p * pq.p, q = pq.q;
  return 4.0 * (1.0 - q) * p2 * nu * nu + 4.0 * (q - 2.0) * p2 * nu + p2 * (p2 + 4.0);
}

/// Sufficient conditions for strict (p,q)-convexity/concavity of I_nu on
/// (0, inf), nu > -1. Clauses are tried in the order a, e, d, c, b.
inline RegionVerdict region_predicate_i(PQPair pq, Order order) {
  const double p = pq.p, q = pq.q, nu = order.value();
  if (!(nu > -1.0)) return {};
  if (p <= 0 && q >= 0) return {Region::convex, 'a'};
  if (p <= 1 && q >= 1) return {Region::convex, 'e'};
  if (p >= 0 && q > 0 && nu >= p / q) return {Region::convex, 'd'};
  if (p >= 0 && q <= -1 && nu >= 1) return {Region::concave, 'c'};
  if (p <= 0 && q < 0 && nu >= -1.0 / q && region_i_cubic(pq, nu) >= 0) return {Region::concave, 'b'};
  return {};
}

/// Sufficient conditions for strict (p,q)-convexity/concavity of K_nu on
/// (0, inf). Convex clauses a, d, e are tried before concave clauses b, c.
inline RegionVerdict region_predicate_k(PQPair pq, Order order) {
  const double p = pq.p, q = pq.q, nu = order.value();
  if (p <= 0 && q >= 1 && nu > 1 && region_k_quartic(pq, nu) <= 0) return {Region::convex, 'a'};
  if (p >= 0 && q >= 1) return {Region::convex, 'd'};
  if (p >= 1 && q >= 0) return {Region::convex, 'e'};
  if (p <= 0 && q <= 0) return {Region::concave, 'b'};
  if (p >= 0 && q < 0 && std::abs(nu) >= -p / q) return {Region::concave, 'c'};
  return {};
}

/// 8 nu^3 - 9 nu^2 - 2 nu - 1.
inline double nu0_polynomial(double nu) { return ((8.0 * nu - 9.0) * nu - 2.0) * nu - 1.0; }

/// The root of 8 nu^3 - 9 nu^2 - 2 nu - 1 in (1, 2), about 1.3733185.
/// Bisected to full binary64 resolution whatever cfg.root_tol says, so the
/// residual is at rounding level.
inline double nu0_constant(const EvalConfig& cfg = {}) {
  cfg.validate();
  return bisect(nu0_polynomial, 1.0, 2.0, 0.0);
}

}  // namespace bessel_certify

#pragma once

// Standard normal density and survival function, Mills' ratio
// r(u) = Q(u) / phi(u), the threshold u0 and the six-term mean chain for r.

#include <array>
#include <cmath>
#include <numbers>

#include "bessel_certify/config.hpp"
#include "bessel_certify/errors.hpp"
#include "bessel_certify/roots.hpp"

namespace bessel_certify {

inline double normal_pdf(double u) {
  detail::require(std::isfinite(u), "normal_pdf: argument must be finite");
  return std::exp(-0.5 * u * u) / std::sqrt(2.0 * std::numbers::pi);
}

/// Q(u) = P(X > u) for standard normal X.
inline double normal_survival(double u) {
  detail::require(std::isfinite(u), "normal_survival: argument must be finite");
  return 0.5 * std::erfc(u / std::numbers::sqrt2);
}

/// Argument at which mills_ratio switches to the continued fraction.
inline constexpr double kMillsContinuedFractionSwitch = 8.0;

namespace detail {

// r(u) = 1/(u + 1/(u + 2/(u + 3/(u + ...)))), modified Lentz.
inline double mills_continued_fraction(double u) {
  constexpr double tiny = 1e-300;
  double f = u;
  double c = u;
  double d = 0.0;
  for (int k = 1; k < 500; ++k) {
    d = u + k * d;
    if (d == 0.0) d = tiny;
    c = u + k / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 / f;
}

}  // namespace detail

/// Mills' ratio Q(u)/phi(u). Strictly decreasing; r(u) ~ 1/u for large u.
inline double mills_ratio(double u) {
  detail::require(std::isfinite(u), "mills_ratio: argument must be finite");
  if (u >= kMillsContinuedFractionSwitch) return detail::mills_continued_fraction(u);
  return normal_survival(u) / normal_pdf(u);
}

/// u (u^2 + 2) Q(u) - (u^2 + 1) phi(u).
inline double u0_equation(double u) {
  return u * (u * u + 2.0) * normal_survival(u) - (u * u + 1.0) * normal_pdf(u);
}

/// Unique positive root of u (u^2 + 2) Q(u) = (u^2 + 1) phi(u), about 1.1615279,
/// bisected on (0.5, 2) to full binary64 resolution.
inline double u0_constant(const EvalConfig& cfg = {}) {
  cfg.validate();
  return bisect(u0_equation, 0.5, 2.0, 0.0);
}

/// What the chain asserts about one of its five inequalities for given (u1, u2).
enum class ChainExpectation { holds, reversed, unspecified };

inline const char* to_string(ChainExpectation e) {
  switch (e) {
    case ChainExpectation::holds: return "holds";
    case ChainExpectation::reversed: return "reversed";
    default: return "unspecified";
  }
}

/// values = {H(r(u1), r(u2)), r(A(u)), G(r), r(G(u)), A(r), r(H(u))} where
/// A, G, H are the arithmetic, geometric and harmonic means. The five
/// inequalities are values[i] <= values[i+1]; margins[i] = values[i+1] - values[i].
struct MillsChainResult {
  std::array<double, 6> values{};
  std::array<bool, 5> holds{};
  std::array<double, 5> margins{};
  std::array<ChainExpectation, 5> expected{};
};

inline MillsChainResult mills_chain(double u1, double u2) {
  detail::require(u1 > 0.0 && u2 > 0.0 && std::isfinite(u1) && std::isfinite(u2),
                  "mills_chain: arguments must be positive and finite");
  const double r1 = mills_ratio(u1), r2 = mills_ratio(u2);
  const double am = 0.5 * (u1 + u2);
  const double gm = std::sqrt(u1) * std::sqrt(u2);
  const double hm = 2.0 * u1 * u2 / (u1 + u2);
  MillsChainResult out;
  out.values = {2.0 * r1 * r2 / (r1 + r2), mills_ratio(am), std::sqrt(r1 * r2),
                mills_ratio(gm),           0.5 * (r1 + r2), mills_ratio(hm)};
  for (std::size_t i = 0; i < 5; ++i) {
    out.margins[i] = out.values[i + 1] - out.values[i];
    out.holds[i] = out.margins[i] >= 0.0;
    out.expected[i] = ChainExpectation::holds;
  }
  static const double u0 = u0_constant();
  if (u1 > u0 && u2 > u0)
    out.expected[3] = ChainExpectation::holds;
  else if (u1 < u0 && u2 < u0)
    out.expected[3] = ChainExpectation::reversed;
  else
    out.expected[3] = ChainExpectation::unspecified;
  return out;
}

}  // namespace bessel_certify

#pragma once

// Modified Bessel functions I_nu and K_nu of real order and positive
// argument, their derivatives and logarithmic derivatives.
//
// I_nu: power series for u <= large_arg_switch, Hankel large-argument
// expansion above it (falling back to a rescaled series when the expansion
// does not converge, which happens for nu^2 comparable to u).
// K_nu: adaptive quadrature of  K_nu(u) = int_0^inf exp(-u cosh t) cosh(nu t) dt,
// carried out on the peak-normalised integrand so that neither e^{-u} nor
// cosh(nu t) under- or overflows.
// Derivatives come from the three-term recurrences only:
//   I'_nu = I_{nu+1} + (nu/u) I_nu,    K'_nu = -(nu/u) K_nu - K_{nu-1}.

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "bessel_certify/config.hpp"
#include "bessel_certify/errors.hpp"
#include "bessel_certify/gamma.hpp"
#include "bessel_certify/quadrature.hpp"

namespace bessel_certify {

namespace detail {

inline void check_i_domain(double nu, double u) {
  require(std::isfinite(nu) && nu > -1.0, "I_nu: order must satisfy nu > -1");
  require(std::isfinite(u) && u > 0.0, "I_nu: argument must be positive and finite");
}

inline void check_k_domain(double nu, double u) {
  require(std::isfinite(nu), "K_nu: order must be finite");
  require(std::isfinite(u) && u > 0.0, "K_nu: argument must be positive and finite");
}

inline double to_linear(double log_value, const char* what) {
  const double v = std::exp(log_value);
  if (!std::isfinite(v) || v < std::numeric_limits<double>::min()) {
    std::ostringstream os;
    os << what << ": value exp(" << log_value << ") is not representable in binary64";
    throw range_error(os.str());
  }
  return v;
}

/// log I_nu(u) from the ascending series sum_n (u/2)^{2n+nu} / (n! Gamma(n+nu+1)).
inline double log_besseli_series(double nu, double u, const EvalConfig& cfg) {
  const double log_first = nu * std::log(0.5 * u) - ln_gamma(nu + 1.0);
  const double q = 0.25 * u * u;
  const double stop = cfg.rel_tol / 10.0;
  constexpr double kRescale = 1e250;
  double sum = 1.0;
  double term = 1.0;
  double log_scale = 0.0;
  for (int n = 0; n < cfg.max_series_terms; ++n) {
    term *= q / ((n + 1.0) * (n + 1.0 + nu));
    sum += term;
    if (term <= stop * sum) return log_first + log_scale + std::log(sum);
    if (sum > kRescale) {
      sum /= kRescale;
      term /= kRescale;
      log_scale += std::log(kRescale);
    }
  }
  throw accuracy_error("besseli: series did not converge within max_series_terms",
                       static_cast<std::size_t>(cfg.max_series_terms), term / sum);
}

/// log I_nu(u) from e^u / sqrt(2 pi u) * sum_k (-1)^k a_k(nu) / u^k.
/// Returns nullopt when the expansion stops decreasing before reaching the
/// tolerance.
inline std::optional<double> log_besseli_asymptotic(double nu, double u, const EvalConfig& cfg) {
  const double mu = 4.0 * nu * nu;
  const double stop = cfg.rel_tol / 10.0;
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k < cfg.max_series_terms; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (odd * odd - mu) / (8.0 * k * u);
    if (std::abs(next) > std::abs(term) && odd > std::sqrt(mu)) return std::nullopt;
    term = next;
    sum += term;
    if (std::abs(term) <= stop * std::abs(sum)) {
      if (!(sum > 0)) return std::nullopt;
      return u - 0.5 * std::log(2.0 * std::numbers::pi * u) + std::log(sum);
    }
  }
  return std::nullopt;
}

/// Exponent of the K_nu integrand after factoring out e^{-u}:
///   -u (cosh t - 1) + log cosh(|nu| t).
inline double k_exponent(double a, double u, double t) {
  const double s = std::sinh(0.5 * t);
  return -2.0 * u * s * s + a * t + std::log1p(std::exp(-2.0 * a * t)) - std::numbers::ln2;
}

struct KQuadrature {
  double log_value;
  double rel_error;
  std::size_t evaluations;
};

inline KQuadrature log_besselk_quadrature(double nu, double u, const EvalConfig& cfg) {
  const double a = std::abs(nu);
  const double peak = std::asinh(a / u);
  const double g_peak = k_exponent(a, u, peak);
  const double depth = cfg.quad_t_max_margin;

  double width = 1.0;
  double upper = peak + width;
  while (k_exponent(a, u, upper) - g_peak > -depth) {
    width *= 2.0;
    upper = peak + width;
  }
  auto integrand = [&](double t) { return std::exp(k_exponent(a, u, t) - g_peak); };

  std::vector<double> breaks{0.0};
  if (peak > 0) breaks.push_back(peak);
  // Split the decaying flank where the integrand has dropped by e^-30.
  {
    double lo = peak, hi = upper;
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (lo + hi);
      (k_exponent(a, u, mid) - g_peak > -30.0 ? lo : hi) = mid;
    }
    if (hi > breaks.back() && hi < upper) breaks.push_back(hi);
  }
  breaks.push_back(upper);

  const auto r = integrate(integrand, breaks, cfg.quad_abs_tol, cfg.rel_tol / 10.0);
  const double slope = -u * std::sinh(upper) + a * std::tanh(a * upper);
  const double tail = std::exp(k_exponent(a, u, upper) - g_peak) / std::abs(slope);
  const double err = r.error + tail;
  if (!r.converged || !(r.value > 0) || err > std::max(cfg.quad_abs_tol, cfg.rel_tol * r.value)) {
    std::ostringstream os;
    os << "besselk: quadrature failed its tolerance (nu=" << nu << ", u=" << u << ")";
    throw accuracy_error(os.str(), r.evaluations, err);
  }
  return {-u + g_peak + std::log(r.value), err / r.value, r.evaluations};
}

}  // namespace detail

/// log I_nu(u), nu > -1, u > 0.
inline double log_besseli(Order order, double u, const EvalConfig& cfg = {}) {
  const double nu = order.value();
  detail::check_i_domain(nu, u);
  if (u > cfg.large_arg_switch) {
    if (auto v = detail::log_besseli_asymptotic(nu, u, cfg)) return *v;
  }
  return detail::log_besseli_series(nu, u, cfg);
}

inline double besseli(Order order, double u, const EvalConfig& cfg = {}) {
  return detail::to_linear(log_besseli(order, u, cfg), "besseli");
}

/// log K_nu(u), any real nu, u > 0.
inline double log_besselk(Order order, double u, const EvalConfig& cfg = {}) {
  detail::check_k_domain(order.value(), u);
  return detail::log_besselk_quadrature(order.value(), u, cfg).log_value;
}

inline double besselk(Order order, double u, const EvalConfig& cfg = {}) {
  return detail::to_linear(log_besselk(order, u, cfg), "besselk");
}

/// u I'_nu(u) / I_nu(u) = nu + u I_{nu+1}(u) / I_nu(u). Lies in (nu, inf).
inline double log_deriv_i(Order order, double u, const EvalConfig& cfg = {}) {
  const double nu = order.value();
  detail::check_i_domain(nu, u);
  return nu + u * std::exp(log_besseli(nu + 1.0, u, cfg) - log_besseli(nu, u, cfg));
}

/// u K'_nu(u) / K_nu(u) = -|nu| - u K_{|nu|-1}(u) / K_{|nu|}(u). Always below -|nu|.
inline double log_deriv_k(Order order, double u, const EvalConfig& cfg = {}) {
  const double a = std::abs(order.value());
  detail::check_k_domain(a, u);
  return -a - u * std::exp(log_besselk(a - 1.0, u, cfg) - log_besselk(a, u, cfg));
}

/// I'_nu(u). Positive for nu >= 0; for nu in (-1, 0) it is negative near 0.
inline double besseli_prime(Order order, double u, const EvalConfig& cfg = {}) {
  return besseli(order, u, cfg) * log_deriv_i(order, u, cfg) / u;
}

/// K'_nu(u), always negative.
inline double besselk_prime(Order order, double u, const EvalConfig& cfg = {}) {
  return besselk(order, u, cfg) * log_deriv_k(order, u, cfg) / u;
}

}  // namespace bessel_certify

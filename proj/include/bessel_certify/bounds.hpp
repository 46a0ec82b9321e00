#pragma once

// Closed-form envelopes for u I'/I and u K'/K, Turán-type determinants
// across adjacent orders, and the |nu| <= 1/2 upper bound for K'/K.

#include <cmath>
#include <limits>

#include "bessel_certify/bessel.hpp"
#include "bessel_certify/config.hpp"
#include "bessel_certify/errors.hpp"

namespace bessel_certify {

/// Lower/upper bounds with per-side applicability. An inapplicable side
/// holds NaN.
struct Envelope {
  double lower = std::numeric_limits<double>::quiet_NaN();
  double upper = std::numeric_limits<double>::quiet_NaN();
  bool lower_valid = false;
  bool upper_valid = false;
};

/// sqrt(nu/(nu+1) u^2 + nu^2) < u I'_nu/I_nu < sqrt(u^2 + nu^2).
/// Lower side needs nu > 0, upper side nu > -1.
inline Envelope envelope_log_deriv_i(Order order, double u) {
  const double nu = order.value();
  detail::require(std::isfinite(u) && u > 0.0, "envelope_log_deriv_i: argument must be positive");
  Envelope e;
  if (nu > 0.0) {
    e.lower = std::sqrt(nu / (nu + 1.0) * u * u + nu * nu);
    e.lower_valid = true;
  }
  if (nu > -1.0) {
    e.upper = std::hypot(u, nu);
    e.upper_valid = true;
  }
  return e;
}

/// -sqrt(nu/(nu-1) u^2 + nu^2) < u K'_nu/K_nu < -sqrt(u^2 + nu^2).
/// Lower side needs nu > 1; the upper side holds for every real nu.
inline Envelope envelope_log_deriv_k(Order order, double u) {
  const double nu = order.value();
  detail::require(std::isfinite(u) && u > 0.0, "envelope_log_deriv_k: argument must be positive");
  Envelope e;
  if (nu > 1.0) {
    e.lower = -std::sqrt(nu / (nu - 1.0) * u * u + nu * nu);
    e.lower_valid = true;
  }
  e.upper = -std::hypot(u, nu);
  e.upper_valid = true;
  return e;
}

/// I_nu^2(u) - I_{nu-1}(u) I_{nu+1}(u), nu > 0. Positive.
inline double turan_i(Order order, double u, const EvalConfig& cfg = {}) {
  const double nu = order.value();
  detail::require(nu > 0.0, "turan_i: order must be positive");
  detail::require(std::isfinite(u) && u > 0.0, "turan_i: argument must be positive and finite");
  const double l0 = log_besseli(nu, u, cfg);
  const double lm = log_besseli(nu - 1.0, u, cfg);
  const double lp = log_besseli(nu + 1.0, u, cfg);
  const double square = detail::to_linear(2.0 * l0, "turan_i");
  return -square * std::expm1(lm + lp - 2.0 * l0);
}

/// (1 + nu^2/u^2) I_nu^2 - (I'_nu)^2, the same determinant rewritten with
/// the derivative recurrences.
inline double turan_i_identity(Order order, double u, const EvalConfig& cfg = {}) {
  const double nu = order.value();
  detail::require(nu > 0.0, "turan_i_identity: order must be positive");
  const double i = besseli(nu, u, cfg);
  const double r = log_deriv_i(nu, u, cfg);
  return i * i * ((u * u + nu * nu) - r * r) / (u * u);
}

/// K_nu^2(u) - K_{nu-1}(u) K_{nu+1}(u). Negative for every real nu.
inline double turan_k(Order order, double u, const EvalConfig& cfg = {}) {
  const double nu = order.value();
  detail::require(std::isfinite(u) && u > 0.0, "turan_k: argument must be positive and finite");
  const double l0 = log_besselk(nu, u, cfg);
  const double lm = log_besselk(nu - 1.0, u, cfg);
  const double lp = log_besselk(nu + 1.0, u, cfg);
  const double square = detail::to_linear(2.0 * l0, "turan_k");
  return -square * std::expm1(lm + lp - 2.0 * l0);
}

/// (1 + nu^2/u^2) K_nu^2 - (K'_nu)^2.
inline double turan_k_identity(Order order, double u, const EvalConfig& cfg = {}) {
  const double nu = order.value();
  const double k = besselk(nu, u, cfg);
  const double s = log_deriv_k(nu, u, cfg);
  return k * k * ((u * u + nu * nu) - s * s) / (u * u);
}

/// -nu/u - 1, an upper bound for K'_nu(u)/K_nu(u) when |nu| <= 1/2, attained at nu = 1/2.
inline double laforgia_upper_k(Order order, double u) {
  const double nu = order.value();
  detail::require(std::abs(nu) <= 0.5, "laforgia_upper_k: requires |nu| <= 1/2");
  detail::require(std::isfinite(u) && u > 0.0, "laforgia_upper_k: argument must be positive");
  return -nu / u - 1.0;
}

}  // namespace bessel_certify

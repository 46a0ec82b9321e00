#pragma once

// Bessel function J_nu of the first kind (nu > -1), its positive zeros, and
// the Weierstrass-product form of u I'_nu(u) / I_nu(u) built on those zeros.
// This is an oracle path independent of the I_nu series and recurrences.

#include <cmath>
#include <numbers>
#include <vector>

#include "bessel_certify/config.hpp"
#include "bessel_certify/errors.hpp"
#include "bessel_certify/gamma.hpp"
#include "bessel_certify/roots.hpp"

namespace bessel_certify {

namespace detail {

#if defined(__SIZEOF_FLOAT128__) && !defined(__clang__)
using wide_float = __float128;
#else
using wide_float = long double;
#endif

/// Argument above which the Hankel expansion replaces the alternating series.
inline constexpr double kBesseljHankelSwitch = 25.0;

// sum_n (-1)^n (u^2/4)^n / (n! (nu+1)_n), summed in wide precision to absorb
// the cancellation between terms as large as ~I_nu(u).
inline double besselj_series(double nu, double u, const EvalConfig& cfg) {
  const wide_float q = static_cast<wide_float>(0.25 * u * u);
  wide_float sum = 1;
  wide_float term = 1;
  wide_float largest = 1;
  const wide_float stop = static_cast<wide_float>(1e-30);
  int n = 0;
  for (; n < cfg.max_series_terms; ++n) {
    term *= -q / ((n + 1) * (n + 1 + static_cast<wide_float>(nu)));
    sum += term;
    const wide_float mag = term < 0 ? -term : term;
    if (mag > largest) largest = mag;
    if (n + 1 > 0.5 * u && mag < stop * largest) break;
  }
  if (n == cfg.max_series_terms)
    throw accuracy_error("besselj: series did not converge within max_series_terms",
                         static_cast<std::size_t>(n), 1.0);
  const double prefactor = std::exp(nu * std::log(0.5 * u) - ln_gamma(nu + 1.0));
  return prefactor * static_cast<double>(sum);
}

// sqrt(2/(pi u)) (P cos chi - Q sin chi), chi = u - (nu/2 + 1/4) pi.
inline double besselj_hankel(double nu, double u, const EvalConfig& cfg) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0, q = 0.0;
  double term = 1.0;  // a_k(nu) / u^k with alternating sign folded in below
  double smallest = 1.0;
  bool converged = false;
  for (int k = 1; k < cfg.max_series_terms; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (8.0 * k * u);
    const double mag = std::abs(term);
    if (mag > smallest && odd > std::sqrt(mu)) break;
    smallest = std::min(smallest, mag);
    // a_k contributes to P for even k, Q for odd k, sign (-1)^{floor(k/2)}.
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0)
      p += sign * term;
    else
      q += sign * term;
    if (mag < 1e-17) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw accuracy_error("besselj: Hankel expansion did not converge", 0, smallest);
  const double chi = u - (0.5 * nu + 0.25) * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * u)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace detail

/// J_nu(u) for nu > -1, u > 0.
inline double besselj(Order order, double u, const EvalConfig& cfg = {}) {
  const double nu = order.value();
  detail::require(nu > -1.0, "besselj: order must satisfy nu > -1");
  detail::require(std::isfinite(u) && u > 0.0, "besselj: argument must be positive and finite");
  if (u > detail::kBesseljHankelSwitch && u > nu * nu) return detail::besselj_hankel(nu, u, cfg);
  return detail::besselj_series(nu, u, cfg);
}

/// The first `count` positive zeros of J_nu.
struct BesselJZeroTable {
  double nu = 0.0;
  std::vector<double> zeros;
  std::size_t count() const noexcept { return zeros.size(); }
};

/// Locates j_{nu,1} < ... < j_{nu,n} by scanning [nu, nu + (n+2) pi] for
/// sign changes and bisecting each bracket to root_tol.
inline BesselJZeroTable besselj_zeros(Order order, int n, const EvalConfig& cfg = {}) {
  const double nu = order.value();
  detail::require(nu > -1.0, "besselj_zeros: order must satisfy nu > -1");
  detail::require(n >= 1, "besselj_zeros: n must be at least 1");
  const double lo = std::max(nu, 1e-3);
  const double hi = std::max(nu, 0.0) + (n + 2) * std::numbers::pi;
  constexpr double step = 0.1;

  BesselJZeroTable table{nu, {}};
  table.zeros.reserve(static_cast<std::size_t>(n));
  auto f = [&](double x) { return besselj(nu, x, cfg); };
  double a = lo;
  double fa = f(a);
  while (static_cast<int>(table.zeros.size()) < n && a < hi) {
    const double b = std::min(a + step, hi);
    const double fb = f(b);
    if (fb == 0.0) {
      table.zeros.push_back(b);
    } else if ((fa < 0) != (fb < 0) && fa != 0.0) {
      table.zeros.push_back(bisect(f, a, b, cfg.root_tol));
    }
    a = b;
    fa = fb;
  }
  if (static_cast<int>(table.zeros.size()) < n)
    throw search_error("besselj_zeros: fewer sign changes than requested zeros", lo, hi);
  return table;
}

/// Truncated Weierstrass product form of u I'_nu(u) / I_nu(u):
///   nu + 2 sum_{n<=N} u^2 / (u^2 + j_{nu,n}^2).
/// Every omitted summand is positive, so `value` is a lower bound and
/// `value + tail_bound` an upper bound.
struct WeierstrassEstimate {
  double value;
  double tail_bound;
};

/// Tail bound: u^2/(u^2 + j^2) < u^2/j^2 and the zeros beyond j_N are spaced
/// by at least s, giving 2 u^2 sum_{m>=1} (j_N + m s)^{-2} <= 2 u^2 / (s j_N).
/// For |nu| >= 1/2 the spacing never drops below pi; for |nu| < 1/2 it
/// increases with n, so the last observed spacing is a valid lower bound.
inline WeierstrassEstimate weierstrass_log_deriv_i(Order order, double u, const BesselJZeroTable& zeros) {
  const double nu = order.value();
  detail::require(nu > -1.0, "weierstrass_log_deriv_i: order must satisfy nu > -1");
  detail::require(u > 0.0, "weierstrass_log_deriv_i: argument must be positive");
  detail::require(!zeros.zeros.empty(), "weierstrass_log_deriv_i: empty zero table");
  detail::require(zeros.nu == nu, "weierstrass_log_deriv_i: zero table order mismatch");
  const double u2 = u * u;
  double sum = 0.0;
  for (auto it = zeros.zeros.rbegin(); it != zeros.zeros.rend(); ++it) sum += u2 / (u2 + (*it) * (*it));
  const auto& z = zeros.zeros;
  const double last = z.back();
  double spacing = std::numbers::pi;
  if (std::abs(nu) < 0.5) spacing = z.size() >= 2 ? last - z[z.size() - 2] : 0.5 * std::numbers::pi;
  return {nu + 2.0 * sum, 2.0 * u2 / (spacing * last)};
}

}  // namespace bessel_certify

#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: plain long double series and brute-force quadrature rules.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

using real = long double;

inline constexpr real pi = std::numbers::pi_v<long double>;

/// I_nu(u) = sum (u/2)^{2k+nu} / (k! Gamma(k+nu+1)), nu > -1.
inline real besseli(real nu, real u) {
  real sum = 0;
  for (int k = 0; k < 400; ++k) {
    const real term = std::exp((2 * k + nu) * std::log(u / 2) - std::lgamma(static_cast<real>(k + 1)) -
                               std::lgamma(k + nu + 1));
    sum += term;
    if (k > u && term < 1e-24L * sum) break;
  }
  return sum;
}

/// J_nu(u) by the alternating series; fine for u up to about 20.
inline real besselj(real nu, real u) {
  real sum = 0;
  for (int k = 0; k < 400; ++k) {
    const real mag = std::exp((2 * k + nu) * std::log(u / 2) - std::lgamma(static_cast<real>(k + 1)) -
                              std::lgamma(k + nu + 1));
    sum += (k % 2 ? -mag : mag);
    if (k > u && mag < 1e-24L) break;
  }
  return sum;
}

/// K_nu(u) = int_0^inf exp(-u cosh t) cosh(nu t) dt by the trapezoid rule
/// with step 1/128; the integrand is even in t, so the rule converges
/// geometrically.
inline real besselk(real nu, real u) {
  const real h = 1.0L / 128;
  real sum = 0.5L * std::exp(-u);
  real peak = sum;
  for (int k = 1; k < 1000000; ++k) {
    const real t = k * h;
    const real term = std::exp(-u * std::cosh(t) + std::abs(nu) * t) * 0.5L * (1 + std::exp(-2 * std::abs(nu) * t));
    sum += term;
    peak = std::max(peak, term);
    if (term < 1e-30L * peak && u * std::sinh(t) > std::abs(nu)) break;
  }
  return h * sum;
}

/// Composite Simpson rule with n (even) panels.
inline real simpson(const std::function<real(real)>& f, real a, real b, int n) {
  const real h = (b - a) / n;
  real s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4 : 2);
  return s * h / 3;
}

inline real normal_pdf(real u) { return std::exp(-u * u / 2) / std::sqrt(2 * pi); }

/// Q(u) = int_u^{u+40} phi, Simpson with 200000 panels; the cut tail is
/// below phi(u+40)/(u+40).
inline real normal_survival(real u) { return simpson(normal_pdf, u, u + 40, 200000); }

inline real gamma_gamma_pdf(real a, real b, real alpha, real u) {
  const real s = (a + b) / 2;
  return 2 * std::pow(a * b, s) * std::pow(u, s - 1) / (std::tgamma(a) * std::tgamma(b) * std::pow(alpha, s)) *
         besselk(a - b, 2 * std::sqrt(a * b * u / alpha));
}

/// Total mass of the gamma-gamma density: trapezoid in s = ln u over
/// [ln 1e-30, ln 1e5], integrand u f(u).
inline real gamma_gamma_mass(real a, real b, real alpha) {
  const real lo = std::log(1e-30L), hi = std::log(1e5L);
  const int n = 3000;
  const real h = (hi - lo) / n;
  real sum = 0;
  for (int i = 0; i <= n; ++i) {
    const real u = std::exp(lo + i * h);
    const real w = (i == 0 || i == n) ? 0.5L : 1.0L;
    sum += w * u * gamma_gamma_pdf(a, b, alpha, u);
  }
  return h * sum;
}

}  // namespace oracle

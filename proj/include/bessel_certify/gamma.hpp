#pragma once

#include <array>
#include <cmath>

#include "bessel_certify/errors.hpp"

namespace bessel_certify {

namespace detail {

// B_{2k} / (2k (2k - 1)), k = 1..9.
inline constexpr std::array<long double, 9> kStirlingCoeffs = {
    1.0L / 12.0L,         -1.0L / 360.0L,       1.0L / 1260.0L,
    -1.0L / 1680.0L,      1.0L / 1188.0L,       -691.0L / 360360.0L,
    1.0L / 156.0L,        -3617.0L / 122400.0L, 43867.0L / 244188.0L};

inline constexpr long double kStirlingShift = 15.0L;

}  // namespace detail

/// Natural log of the gamma function for x > 0.
///
/// Arguments below 15 are shifted up with Gamma(x) = Gamma(x + n) / (x (x+1) ... (x+n-1)),
/// then the Stirling series with nine correction terms is summed. All
/// intermediate arithmetic is in long double so the result is limited by
/// the final rounding to double.
inline double ln_gamma(double x) {
  if (!(x > 0) || !std::isfinite(x)) throw domain_error("ln_gamma: x must be positive and finite");
  long double y = x;
  long double shift_product = 1.0L;
  while (y < detail::kStirlingShift) {
    shift_product *= y;
    y += 1.0L;
  }
  const long double inv = 1.0L / y;
  const long double inv2 = inv * inv;
  long double correction = 0.0L;
  long double power = inv;
  for (long double c : detail::kStirlingCoeffs) {
    correction += c * power;
    power *= inv2;
  }
  const long double log_sqrt_2pi = 0.918938533204672741780329736405617639861L;
  const long double value =
      (y - 0.5L) * std::log(y) - y + log_sqrt_2pi + correction - std::log(shift_product);
  return static_cast<double>(value);
}

}  // namespace bessel_certify

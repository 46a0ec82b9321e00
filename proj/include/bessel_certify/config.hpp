#pragma once

#include <cmath>

#include "bessel_certify/errors.hpp"

namespace bessel_certify {

/// Numerical settings shared by every evaluator.
struct EvalConfig {
  double rel_tol = 1e-12;          ///< target relative error of series/quadrature
  int max_series_terms = 500;      ///< hard cap on summed series terms
  double quad_abs_tol = 1e-13;     ///< absolute tolerance on peak-normalised integrands
  double quad_t_max_margin = 745;  ///< integrand truncation depth, in exponent units
  double large_arg_switch = 30;    ///< I_nu uses the asymptotic expansion above this argument
  double root_tol = 1e-13;         ///< bracket width at which root searches stop

  void validate() const {
    detail::require(rel_tol > 0 && quad_abs_tol > 0 && quad_t_max_margin > 0 &&
                        large_arg_switch > 0 && root_tol > 0,
                    "EvalConfig: tolerances must be positive");
    detail::require(max_series_terms >= 50, "EvalConfig: max_series_terms must be >= 50");
  }
};

/// Real Bessel order. Finite by construction; the I-family additionally
/// needs nu > -1, which is checked at the call site.
class Order {
 public:
  constexpr Order() = default;
  Order(double nu) : nu_(nu) {  // NOLINT(google-explicit-constructor)
    detail::require(std::isfinite(nu), "Order: nu must be finite");
  }

  constexpr double value() const noexcept { return nu_; }
  constexpr operator double() const noexcept { return nu_; }  // NOLINT
  bool valid_for_i() const noexcept { return nu_ > -1.0; }

 private:
  double nu_ = 0.0;
};

}  // namespace bessel_certify

#pragma once

#include <cmath>

#include "bessel_certify/errors.hpp"

namespace bessel_certify {

/// Bisection on a sign-changing bracket [lo, hi]. Stops when the bracket is
/// no wider than `tol` or can no longer be split in binary64 (tol = 0 asks
/// for full double resolution). Returns whichever of the final endpoints
/// and midpoint has the smallest |f|.
template <class F>
double bisect(F&& f, double lo, double hi, double tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0)) throw search_error("bisect: no sign change", lo, hi);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    const double fmid = f(mid);
    if (fmid == 0) return mid;
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  const double mid = 0.5 * (lo + hi);
  const double fmid = f(mid);
  double best = mid;
  double best_abs = std::abs(fmid);
  if (std::abs(flo) < best_abs) {
    best = lo;
    best_abs = std::abs(flo);
  }
  if (std::abs(fhi) < best_abs) best = hi;
  return best;
}

}  // namespace bessel_certify

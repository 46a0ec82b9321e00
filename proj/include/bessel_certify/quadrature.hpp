#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace bessel_certify {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  ///< estimated absolute error
  std::size_t evaluations = 0;
  bool converged = false;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

// One 15-point Kronrod panel. The raw |K15 - G7| difference is rescaled the
// way QUADPACK's qk15 does it, which tracks the true error of K15 on smooth
// integrands far better than the raw difference.
template <class F>
Segment gauss_kronrod_15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, 15> values{};
  values[14] = f(center);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    values[2 * j] = f(center - dx);
    values[2 * j + 1] = f(center + dx);
  }
  double kronrod = values[14] * kKronrodWeights[7];
  double gauss = values[14] * kGaussWeights[3];
  double abs_sum = std::abs(values[14]) * kKronrodWeights[7];
  for (std::size_t j = 0; j < 7; ++j) {
    const double pair = values[2 * j] + values[2 * j + 1];
    kronrod += kKronrodWeights[j] * pair;
    abs_sum += kKronrodWeights[j] * (std::abs(values[2 * j]) + std::abs(values[2 * j + 1]));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[7] * std::abs(values[14] - mean);
  for (std::size_t j = 0; j < 7; ++j)
    asc += kKronrodWeights[j] * (std::abs(values[2 * j] - mean) + std::abs(values[2 * j + 1] - mean));

  const double width = std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  asc *= width;
  abs_sum *= width;
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (abs_sum > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * abs_sum, err);
  return {a, b, kronrod * half, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod quadrature of f over the consecutive
/// intervals given by `breaks` (at least two increasing points). The
/// interval with the largest error estimate is bisected until the total
/// estimate meets max(abs_tol, rel_tol * |value|).
template <class F>
QuadResult integrate(F&& f, const std::vector<double>& breaks, double abs_tol, double rel_tol,
                     std::size_t max_segments = 2000) {
  std::priority_queue<detail::Segment> queue;
  QuadResult out;
  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    auto s = detail::gauss_kronrod_15(f, breaks[i], breaks[i + 1]);
    out.evaluations += 15;
    value += s.value;
    error += s.error;
    queue.push(s);
  }
  while (!queue.empty()) {
    if (error <= std::max(abs_tol, rel_tol * std::abs(value))) {
      out.converged = true;
      break;
    }
    if (queue.size() >= max_segments) break;
    const auto worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    queue.pop();
    auto left = detail::gauss_kronrod_15(f, worst.a, mid);
    auto right = detail::gauss_kronrod_15(f, mid, worst.b);
    out.evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  if (queue.empty()) out.converged = true;
  // Re-sum to shed the drift accumulated by incremental updates.
  value = 0.0;
  error = 0.0;
  while (!queue.empty()) {
    value += queue.top().value;
    error += queue.top().error;
    queue.pop();
  }
  out.value = value;
  out.error = error;
  return out;
}

template <class F>
QuadResult integrate(F&& f, double a, double b, double abs_tol, double rel_tol,
                     std::size_t max_segments = 2000) {
  return integrate(std::forward<F>(f), std::vector<double>{a, b}, abs_tol, rel_tol, max_segments);
}

}  // namespace bessel_certify

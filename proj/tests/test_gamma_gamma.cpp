#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bessel_certify/gamma_gamma.hpp"
#include "oracles.hpp"

using namespace bessel_certify;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return g;
}

}  // namespace

TEST(GammaGammaPdf, FrozenValues) {
  EXPECT_NEAR(pdf({1, 1, 1}, 1), 0.22778774549906687, 1e-15);
  EXPECT_NEAR(pdf({1, 0.5, 1}, 1), 0.17190949153836189, 1e-15);
  EXPECT_NEAR(std::exp(log_pdf({1, 1, 1}, 1)), pdf({1, 1, 1}, 1), 1e-16);
}

TEST(GammaGammaPdf, HalfOrderClosedForm) {
  // a - b = 1/2 turns K into sqrt(pi/(2z)) e^{-z}
  const double a = 1, b = 0.5, alpha = 1.7, s = (a + b) / 2;
  for (double u : {0.01, 0.3, 1.0, 4.0, 30.0}) {
    const double z = 2 * std::sqrt(a * b * u / alpha);
    const double k = std::sqrt(std::numbers::pi / (2 * z)) * std::exp(-z);
    const double f = 2 * std::pow(a * b, s) * std::pow(u, s - 1) / (std::tgamma(a) * std::tgamma(b) * std::pow(alpha, s)) * k;
    EXPECT_NEAR(pdf({a, b, alpha}, u), f, 1e-13 * f) << u;
  }
}

TEST(GammaGammaPdf, AgainstOracle) {
  for (GammaGammaParams p : {GammaGammaParams{2, 3, 1.5}, GammaGammaParams{0.7, 4, 1}, GammaGammaParams{5, 5, 2}})
    for (double u : {0.05, 0.5, 2.0, 9.0}) {
      const double f = static_cast<double>(oracle::gamma_gamma_pdf(p.a, p.b, p.alpha, u));
      EXPECT_NEAR(pdf(p, u), f, 1e-12 * f) << p.a << ' ' << p.b << ' ' << u;
    }
}

TEST(GammaGammaPdf, NormalizedAgainstOracleMass) {
  const double mass = static_cast<double>(oracle::gamma_gamma_mass(2, 3, 1.5));
  EXPECT_NEAR(mass, 1.0, 1e-6);
  // the library's own CDF reaches the same mass
  EXPECT_NEAR(cdf({2, 3, 1.5}, 1e4) , mass, 1e-6);
}

TEST(GammaGammaPdf, ParameterValidation) {
  EXPECT_THROW(pdf({0, 1, 1}, 1), domain_error);
  EXPECT_THROW(pdf({1, -1, 1}, 1), domain_error);
  EXPECT_THROW(pdf({1, 1, 0}, 1), domain_error);
  EXPECT_THROW(pdf({1, 1, INFINITY}, 1), domain_error);
  EXPECT_THROW(pdf({1, 1, 1}, 0), domain_error);
  EXPECT_THROW(cdf({1, 1, 1}, -1), domain_error);
}

TEST(GammaGammaTransform, Identity) {
  for (GammaGammaParams p : {GammaGammaParams{2, 3, 1}, GammaGammaParams{0.6, 0.8, 2.5}})
    for (double u : {0.1, 1.0, 5.0, 20.0}) {
      const double t = pdf_transformed(p, u);
      EXPECT_NEAR(t, pdf(p, p.alpha * u * u / (4 * p.a * p.b)), 1e-10 * t) << u;
    }
}

TEST(GammaGammaCdf, FrozenValues) {
  EXPECT_NEAR(cdf({2, 2, 1}, 1), 0.66105261356780718, 1e-12);
  EXPECT_NEAR(cdf({2, 2, 1}, 10), 0.99930663409294412, 1e-12);
  EXPECT_NEAR(cdf({0.7, 4, 1}, 0.05), 0.12127417274103671, 1e-12);
  EXPECT_NEAR(survival({2, 2, 1}, 10), 1 - 0.99930663409294412, 1e-14);
  EXPECT_NEAR(std::exp(log_cdf({2, 2, 1}, 1)), 0.66105261356780718, 1e-12);
}

TEST(GammaGammaCdf, MonotoneAndComplementary) {
  const GammaGammaParams p{2, 3, 1};
  double prev = 0;
  for (double u : log_grid(1e-3, 100, 40)) {
    const double f = cdf(p, u);
    EXPECT_GT(f, prev);
    EXPECT_NEAR(f + survival(p, u), 1.0, 1e-12);
    prev = f;
  }
  EXPECT_GT(cdf(p, 10), 0.9);
  EXPECT_LT(cdf(p, 10), 1.0);
  EXPECT_NEAR(probability_between(p, 1, 2), cdf(p, 2) - cdf(p, 1), 1e-12);
}

TEST(GammaGammaHazard, FrozenAndDerivativeOfLogSurvival) {
  EXPECT_NEAR(hazard({2, 2, 1}, 1), 1.0535842701319585, 1e-11);
  const GammaGammaParams p{2, 3, 1};
  for (double u : {0.2, 1.0, 4.0}) {
    const double h = 1e-4 * u;
    const double d = -(std::log(survival(p, u + h)) - std::log(survival(p, u - h))) / (2 * h);
    EXPECT_NEAR(hazard(p, u), d, 1e-6 * d) << u;
  }
}

TEST(GammaGammaHazard, FarTailIsOutOfRange) {
  EXPECT_THROW(hazard({2, 2, 1}, 500), range_error);
}

TEST(ConcavityChecks, DecreasingAndLogConcave) {
  for (GammaGammaParams p : {GammaGammaParams{2, 3, 1}, GammaGammaParams{1, 1, 1}}) {
    const auto grid = log_grid(0.05, 20, 25);
    const auto rep = concavity_checks(p, grid);
    EXPECT_TRUE(rep.transformed.decreasing);
    EXPECT_TRUE(rep.density.decreasing);
    EXPECT_TRUE(rep.cdf_geometric.decreasing);
    EXPECT_TRUE(rep.cdf_log.decreasing);
    EXPECT_TRUE(rep.all_decreasing());
    EXPECT_TRUE(rep.log_concave);
    EXPECT_LE(rep.max_second_difference, kLogConcavitySlack);
    EXPECT_EQ(rep.log_cdf_second_differences.size(), grid.size() - 2);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      EXPECT_NEAR(rep.transformed.values[i], rep.transformed_analytic[i], 1e-8 * (1 + std::abs(rep.transformed_analytic[i])));
      EXPECT_NEAR(rep.log_cdf[i], std::log(cdf(p, grid[i])), 1e-10);
      const double fo = pdf(p, grid[i]) / cdf(p, grid[i]);
      EXPECT_NEAR(rep.cdf_log.values[i], fo, 1e-8 * fo);
    }
  }
}

TEST(ConcavityChecks, GridRequirements) {
  EXPECT_THROW(concavity_checks({2, 3, 1}, {1, 2, 3, 4}), domain_error);
  EXPECT_THROW(concavity_checks({2, 3, 1}, {1, 2, 3, 5, 4}), domain_error);
  EXPECT_THROW(concavity_checks({2, 3, 1}, {-1, 2, 3, 4, 5}), domain_error);
}

TEST(MonotoneSeries, Margin) {
  const auto s = make_decreasing_series("x", {3, 2, 1.5});
  EXPECT_TRUE(s.decreasing);
  EXPECT_DOUBLE_EQ(s.margin, 0.5);
  EXPECT_FALSE(make_decreasing_series("y", {3, 3, 1}).decreasing);
}

TEST(NbuProbe, FrozenAndShape) {
  const auto rows = nbu_probe({2, 2, 1}, {{1, 1}, {0.5, 2}, {1, 1}});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(rows[0].value, 0.013610144721096477, 1e-12);
  EXPECT_EQ(rows[0].value, rows[2].value);
  EXPECT_DOUBLE_EQ(rows[1].u1, 0.5);
  EXPECT_DOUBLE_EQ(rows[1].u2, 2.0);
  const double s = survival({2, 2, 1}, 0.5) , t = survival({2, 2, 1}, 2), st = survival({2, 2, 1}, 2.5);
  EXPECT_NEAR(rows[1].value, st - s * t, 1e-14);
}

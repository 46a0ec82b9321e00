#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "bessel_certify/bounds.hpp"
#include "oracles.hpp"

using namespace bessel_certify;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return g;
}

}  // namespace

TEST(EnvelopeI, OrderOneAtOne) {
  const auto e = envelope_log_deriv_i(1, 1);
  ASSERT_TRUE(e.lower_valid && e.upper_valid);
  EXPECT_NEAR(e.lower, std::sqrt(1.5), 1e-15);
  EXPECT_NEAR(e.upper, std::sqrt(2.0), 1e-15);
  const double r = log_deriv_i(1, 1);
  EXPECT_LT(e.lower, r);
  EXPECT_LT(r, e.upper);
}

TEST(EnvelopeI, OrderZeroHasNoLowerSide) {
  const auto e = envelope_log_deriv_i(0, 1);
  EXPECT_FALSE(e.lower_valid);
  EXPECT_TRUE(std::isnan(e.lower));
  EXPECT_TRUE(e.upper_valid);
  EXPECT_DOUBLE_EQ(e.upper, 1.0);
}

TEST(EnvelopeI, SmallArgumentCollapsesToOrder) {
  const auto e = envelope_log_deriv_i(2, 1e-9);
  EXPECT_NEAR(e.lower, 2.0, 1e-15);
  EXPECT_NEAR(e.upper, 2.0, 1e-15);
}

TEST(EnvelopeI, NoSideBelowMinusOne) {
  const auto e = envelope_log_deriv_i(-1.5, 1);
  EXPECT_FALSE(e.lower_valid);
  EXPECT_FALSE(e.upper_valid);
  EXPECT_THROW(envelope_log_deriv_i(1, 0), domain_error);
}

TEST(EnvelopeI, SandwichOnGrid) {
  for (double nu : {-0.9, -0.4, 0.01, 0.5, 1.0, 4.0, 10.0})
    for (double u : log_grid(0.01, 50, 30)) {
      const auto e = envelope_log_deriv_i(nu, u);
      const double r = log_deriv_i(nu, u);
      if (e.lower_valid) {
        EXPECT_LT(e.lower, r) << nu << ' ' << u;
      }
      EXPECT_LT(r, e.upper) << nu << ' ' << u;
    }
}

TEST(EnvelopeK, OrderTwoAtOne) {
  const auto e = envelope_log_deriv_k(2, 1);
  EXPECT_NEAR(e.lower, -std::sqrt(6.0), 1e-15);
  EXPECT_NEAR(e.upper, -std::sqrt(5.0), 1e-15);
  const double s = log_deriv_k(2, 1);
  EXPECT_LT(e.lower, s);
  EXPECT_LT(s, e.upper);
}

TEST(EnvelopeK, HalfOrder) {
  const auto e = envelope_log_deriv_k(0.5, 1);
  EXPECT_FALSE(e.lower_valid);
  EXPECT_NEAR(e.upper, -std::sqrt(1.25), 1e-15);
  EXPECT_LT(log_deriv_k(0.5, 1), e.upper);
}

TEST(EnvelopeK, LowerBlowsUpNearOrderOne) {
  const auto e = envelope_log_deriv_k(1.0000001, 1);
  EXPECT_TRUE(e.lower_valid);
  EXPECT_TRUE(std::isfinite(e.lower));
  EXPECT_LT(e.lower, -1000.0);
}

TEST(EnvelopeK, SandwichOnGrid) {
  for (double nu : {-8.0, -1.0, 0.0, 0.5, 1.01, 2.0, 10.0})
    for (double u : log_grid(0.01, 50, 30)) {
      const auto e = envelope_log_deriv_k(nu, u);
      const double s = log_deriv_k(nu, u);
      if (e.lower_valid) {
        EXPECT_LT(e.lower, s) << nu << ' ' << u;
      }
      EXPECT_LT(s, e.upper) << nu << ' ' << u;
      EXPECT_LT(s, -nu);
    }
}

TEST(TuranI, PositiveAndFrozen) {
  EXPECT_GT(turan_i(1, 1), 0.0);
  // series oracle: I_1(2)^2 - I_0(2) I_2(2)
  EXPECT_NEAR(turan_i(1, 2), 0.95960884788924315, 1e-13);
  const long double i0 = oracle::besseli(0, 2), i1 = oracle::besseli(1, 2), i2 = oracle::besseli(2, 2);
  EXPECT_NEAR(turan_i(1, 2), static_cast<double>(i1 * i1 - i0 * i2), 1e-13);
}

TEST(TuranI, IdentityForm) {
  EXPECT_NEAR(turan_i(2, 3), turan_i_identity(2, 3), 1e-9 * turan_i(2, 3));
  for (double nu : {0.1, 0.5, 1.0, 2.0, 7.0})
    for (double u : log_grid(0.1, 30, 15)) {
      const double d = turan_i(nu, u);
      EXPECT_GT(d, 0.0);
      EXPECT_NEAR(turan_i_identity(nu, u), d, 1e-9 * d) << nu << ' ' << u;
    }
}

TEST(TuranI, DerivativeForm) {
  // Delta = (1/u) I^2 (u I'/I)'
  const double h = 1e-4;
  for (double nu : {0.5, 2.0})
    for (double u : {0.5, 2.0, 8.0}) {
      const double i = besseli(nu, u);
      const double dr = (log_deriv_i(nu, u + h) - log_deriv_i(nu, u - h)) / (2 * h);
      EXPECT_NEAR(turan_i(nu, u), i * i * dr / u, 1e-5 * i * i);
    }
}

TEST(TuranI, RequiresPositiveOrder) {
  EXPECT_THROW(turan_i(0, 1), domain_error);
  EXPECT_THROW(turan_i(-0.5, 1), domain_error);
  EXPECT_THROW(turan_i_identity(0, 1), domain_error);
}

TEST(TuranK, NegativeAndFrozen) {
  // K_{-1} = K_1
  EXPECT_NEAR(turan_k(0, 1), -0.18503073616780271, 1e-13);
  const long double k0 = oracle::besselk(0, 1), k1 = oracle::besselk(1, 1);
  EXPECT_NEAR(turan_k(0, 1), static_cast<double>(k0 * k0 - k1 * k1), 1e-13);
  EXPECT_LT(turan_k(0.5, 1), 0.0);
}

TEST(TuranK, SignAndIdentityOnGrid) {
  for (double nu : {-3.0, -0.5, 0.0, 0.5, 1.0, 4.0})
    for (double u : log_grid(0.01, 30, 15)) {
      const double d = turan_k(nu, u);
      EXPECT_LT(d, 0.0) << nu << ' ' << u;
      EXPECT_NEAR(turan_k_identity(nu, u), d, 1e-9 * std::abs(d)) << nu << ' ' << u;
    }
}

TEST(TuranK, DerivativeForm) {
  const double h = 1e-4;
  for (double nu : {0.0, 1.5})
    for (double u : {0.5, 2.0, 8.0}) {
      const double k = besselk(nu, u);
      const double ds = (log_deriv_k(nu, u + h) - log_deriv_k(nu, u - h)) / (2 * h);
      EXPECT_NEAR(turan_k(nu, u), k * k * ds / u, 1e-5 * k * k);
    }
}

TEST(Laforgia, EqualityAtHalf) {
  EXPECT_DOUBLE_EQ(laforgia_upper_k(0.5, 1), -1.5);
  EXPECT_NEAR(besselk_prime(0.5, 1) / besselk(0.5, 1), -1.5, 1e-14);
  for (double u : log_grid(0.01, 50, 20)) EXPECT_NEAR(log_deriv_k(0.5, u) / u, laforgia_upper_k(0.5, u), 1e-12 * (1 + 1 / u));
}

TEST(Laforgia, BoundBelowHalf) {
  EXPECT_DOUBLE_EQ(laforgia_upper_k(0, 1), -1.0);
  EXPECT_LE(log_deriv_k(0, 1), -1.0);
  EXPECT_DOUBLE_EQ(laforgia_upper_k(-0.5, 2), -0.75);
  for (double nu : {-0.5, -0.2, 0.0, 0.3, 0.49})
    for (double u : log_grid(0.01, 50, 20)) EXPECT_LE(log_deriv_k(nu, u) / u, laforgia_upper_k(nu, u));
}

TEST(Laforgia, OrderRestriction) {
  EXPECT_THROW(laforgia_upper_k(0.6, 1), domain_error);
  EXPECT_THROW(laforgia_upper_k(-0.51, 1), domain_error);
  EXPECT_THROW(laforgia_upper_k(0.2, 0), domain_error);
}

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bessel_certify/bessel.hpp"
#include "bessel_certify/bessel_j.hpp"
#include "bessel_certify/gamma.hpp"
#include "oracles.hpp"

using namespace bessel_certify;

namespace {

constexpr double pi = std::numbers::pi;

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return g;
}

}  // namespace

// ---- Order / EvalConfig ----------------------------------------------------

TEST(Order, RejectsNonFinite) {
  EXPECT_THROW((void)Order(std::nan("")), domain_error);
  EXPECT_THROW((void)Order(INFINITY), domain_error);
  EXPECT_TRUE(Order(-0.5).valid_for_i());
  EXPECT_FALSE(Order(-1.0).valid_for_i());
}

TEST(EvalConfig, Validation) {
  EXPECT_NO_THROW(EvalConfig{}.validate());
  EvalConfig c;
  c.max_series_terms = 49;
  EXPECT_THROW(c.validate(), domain_error);
  c = {};
  c.rel_tol = 0;
  EXPECT_THROW(c.validate(), domain_error);
  c = {};
  c.root_tol = -1;
  EXPECT_THROW(c.validate(), domain_error);
}

// ---- ln_gamma --------------------------------------------------------------

TEST(LnGamma, Anchors) {
  EXPECT_NEAR(ln_gamma(1.0), 0.0, 1e-15);
  EXPECT_NEAR(ln_gamma(2.0), 0.0, 1e-15);
  EXPECT_NEAR(ln_gamma(0.5), std::log(std::sqrt(pi)), 1e-15);
  EXPECT_NEAR(ln_gamma(0.5), 0.5723649429247001, 1e-15);
}

TEST(LnGamma, MatchesLongDoubleGammaOnRange) {
  for (double x : {1e-6, 0.01, 0.3, 0.99, 1.5, 3.7, 10.0, 33.3, 100.5, 170.9}) {
    const double want = std::log(std::tgamma(static_cast<long double>(x)));
    // relative error of exp(result) equals the absolute error of the log
    EXPECT_LT(std::abs(ln_gamma(x) - want), 1e-13) << x;
  }
}

TEST(LnGamma, DomainErrors) {
  EXPECT_THROW(ln_gamma(0.0), domain_error);
  EXPECT_THROW(ln_gamma(-1.5), domain_error);
  EXPECT_THROW(ln_gamma(INFINITY), domain_error);
}

// ---- I_nu ------------------------------------------------------------------

TEST(BesselI, FrozenValues) {
  // extended-precision series, cross-checked at 30 digits
  EXPECT_LT(rel_err(besseli(0, 1), 1.2660658777520083), 1e-14);
  EXPECT_LT(rel_err(besseli(0.5, 1), 0.93767488824548765), 1e-14);
  EXPECT_LT(rel_err(besseli(2.7, 5), 12.340632426526796), 1e-13);
  EXPECT_LT(rel_err(besseli(5, 20), 23018392.213413671), 1e-13);
  EXPECT_LT(rel_err(besseli(0, 40), 14894774793419900.0), 1e-13);
  EXPECT_LT(rel_err(besseli(10, 35), 25449470018534.765), 1e-12);
}

TEST(BesselI, SmallArgumentLimit) {
  EXPECT_NEAR(besseli(0, 1e-9), 1.0, 1e-15);
  EXPECT_NEAR(besseli(0, 1e-300), 1.0, 1e-15);
}

TEST(BesselI, HalfOrderClosedForms) {
  for (double u : {0.01, 0.5, 1.0, 7.0, 29.0, 31.0, 60.0}) {
    EXPECT_LT(rel_err(besseli(0.5, u), std::sqrt(2 / (pi * u)) * std::sinh(u)), 1e-12) << u;
    EXPECT_LT(rel_err(besseli(-0.5, u), std::sqrt(2 / (pi * u)) * std::cosh(u)), 1e-12) << u;
  }
}

TEST(BesselI, MinusHalfPrefactorIsTwoOverPi) {
  // The cosh form with prefactor sqrt(pi/(2u)) is off by pi/2.
  const double u = 1.0;
  const double series = besseli(-0.5, u);
  EXPECT_LT(rel_err(series, 1.2312002145929674), 1e-14);
  EXPECT_GT(std::abs(series - std::sqrt(pi / (2 * u)) * std::cosh(u)), 0.1);
}

TEST(BesselI, MatchesSeriesOracle) {
  for (double nu : {-0.5, 0.0, 0.5, 1.0, 2.7, 5.0})
    for (double u : {0.1, 1.0, 5.0, 20.0})
      EXPECT_LT(rel_err(besseli(nu, u), static_cast<double>(oracle::besseli(nu, u))), 1e-13) << nu << ' ' << u;
}

TEST(BesselI, AsymptoticSwitchAgreesWithSeries) {
  EvalConfig series_only;
  series_only.large_arg_switch = 1e9;
  for (double nu : {-0.5, 0.0, 1.0, 2.7, 5.0})
    for (double u : {30.000001, 35.0, 50.0})
      EXPECT_LT(rel_err(besseli(nu, u), besseli(nu, u, series_only)), 1e-9) << nu << ' ' << u;
}

TEST(BesselI, PositiveOnDomain) {
  for (double nu : {-0.99, -0.5, 0.0, 3.0})
    for (double u : log_grid(1e-3, 100, 25)) EXPECT_GT(besseli(nu, u), 0.0);
}

TEST(BesselI, DomainAndAccuracyErrors) {
  EXPECT_THROW(besseli(-1.5, 1), domain_error);
  EXPECT_THROW(besseli(-1.0, 1), domain_error);
  EXPECT_THROW(besseli(0, 0), domain_error);
  EXPECT_THROW(besseli(0, -1), domain_error);
  EvalConfig c;
  c.large_arg_switch = 1e9;
  c.max_series_terms = 50;
  try {
    (void)besseli(0, 300, c);
    FAIL() << "expected accuracy_error";
  } catch (const accuracy_error& e) {
    EXPECT_EQ(e.terms_used(), 50u);
  }
  EXPECT_THROW(besseli(0, 800), range_error);
  EXPECT_NO_THROW(log_besseli(0, 800));
}

// ---- K_nu ------------------------------------------------------------------

TEST(BesselK, FrozenValues) {
  // brute-force trapezoid of the integral representation
  EXPECT_LT(rel_err(besselk(0, 1), 0.42102443824070833), 1e-13);
  EXPECT_LT(rel_err(besselk(1, 1), 0.60190723019723457), 1e-13);
  EXPECT_LT(rel_err(besselk(2, 3), 0.061510458471742038), 1e-13);
  EXPECT_LT(rel_err(besselk(2.7, 0.1), 2511.6154265701151), 1e-13);
  EXPECT_LT(rel_err(besselk(5, 20), 1.0538660139974233e-9), 1e-13);
  EXPECT_LT(rel_err(besselk(0, 30), 2.1324774964630564e-14), 1e-13);
}

TEST(BesselK, HalfOrderClosedForm) {
  EXPECT_NEAR(besselk(0.5, 1), std::sqrt(pi / 2) * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(besselk(0.5, 1), 0.461068504447895, 1e-14);
  for (double u : log_grid(0.01, 50, 20))
    EXPECT_LT(rel_err(besselk(0.5, u), std::sqrt(pi / (2 * u)) * std::exp(-u)), 1e-12) << u;
}

TEST(BesselK, MatchesTrapezoidOracle) {
  for (double nu : {-0.5, 0.0, 0.5, 1.0, 2.7, 5.0})
    for (double u : {0.1, 1.0, 5.0, 20.0})
      EXPECT_LT(rel_err(besselk(nu, u), static_cast<double>(oracle::besselk(nu, u))), 1e-12) << nu << ' ' << u;
}

TEST(BesselK, EvenInOrder) {
  EXPECT_DOUBLE_EQ(besselk(-2, 3), besselk(2, 3));
  for (double nu : {0.3, 1.0, 2.5, 7.0})
    for (double u : {0.05, 1.0, 10.0})
      EXPECT_LE(std::abs(besselk(nu, u) - besselk(-nu, u)), 1e-12 * besselk(nu, u));
}

TEST(BesselK, DomainAndRangeErrors) {
  EXPECT_THROW(besselk(0, 0), domain_error);
  EXPECT_THROW(besselk(0, -2), domain_error);
  EXPECT_THROW(besselk(std::nan(""), 1), domain_error);
  EXPECT_THROW(besselk(0, 800), range_error);
  EXPECT_LT(log_besselk(0, 800), -799.0);
}

TEST(BesselK, QuadratureFailureIsAccuracyError) {
  EvalConfig c;
  c.rel_tol = 1e-30;
  c.quad_abs_tol = 1e-300;
  EXPECT_THROW(besselk(0.3, 1, c), accuracy_error);
}

// ---- derivatives -----------------------------------------------------------

TEST(Derivatives, FrozenValues) {
  EXPECT_LT(rel_err(besseli_prime(0, 1), 0.56515910399248503), 1e-13);
  EXPECT_LT(rel_err(besseli_prime(1, 1), 0.70090677375952331), 1e-13);
  EXPECT_LT(rel_err(besselk_prime(0, 1), -0.60190723019723457), 1e-13);
  EXPECT_LT(rel_err(besselk_prime(2, 0.5), -31.857175324966779), 1e-12);
  EXPECT_LT(besselk_prime(2, 0.5), 0.0);
}

TEST(Derivatives, HalfOrderClosedForms) {
  const double u = 1.0;
  const double di = std::sqrt(2 / (pi * u)) * (std::cosh(u) - std::sinh(u) / (2 * u));
  EXPECT_LT(rel_err(besseli_prime(0.5, u), di), 1e-13);
  const double dk = -std::sqrt(pi / (2 * u)) * std::exp(-u) * (1 + 1 / (2 * u));
  EXPECT_LT(rel_err(besselk_prime(0.5, u), dk), 1e-13);
  EXPECT_NEAR(besselk_prime(0.5, u), -0.691603, 1e-6);
}

TEST(Derivatives, KPrimeZeroIsMinusK1) {
  for (double u : {0.1, 1.0, 4.0}) EXPECT_LT(rel_err(besselk_prime(0, u), -besselk(1, u)), 1e-13);
}

TEST(Derivatives, IPrimeSignFollowsOrder) {
  for (double u : {0.01, 1.0, 10.0}) EXPECT_GT(besseli_prime(0.3, u), 0.0);
  // I_{-1/2} = sqrt(2/(pi u)) cosh u decreases near 0
  EXPECT_LT(besseli_prime(-0.5, 0.1), 0.0);
}

TEST(LogDerivI, FrozenValues) {
  EXPECT_LT(rel_err(log_deriv_i(1, 1), 1.2401937238700897), 1e-13);
  EXPECT_LT(rel_err(log_deriv_i(0, 1), 0.44638996589653451), 1e-13);
  EXPECT_NEAR(log_deriv_i(2, 1e-8), 2.0, 1e-12);
}

TEST(LogDerivI, ExceedsOrderAndIncreases) {
  for (double nu : {-0.9, -0.5, 0.0, 1.0, 6.0}) {
    double prev = -INFINITY;
    for (double u : log_grid(0.01, 60, 40)) {
      const double r = log_deriv_i(nu, u);
      EXPECT_GT(r, nu);
      EXPECT_GT(r, prev);
      prev = r;
    }
  }
}

TEST(LogDerivK, FrozenValuesAndLimits) {
  EXPECT_NEAR(log_deriv_k(0.5, 1), -1.5, 1e-13);
  EXPECT_LT(rel_err(log_deriv_k(0, 1), -1.4296253982604018), 1e-13);
  EXPECT_NEAR(log_deriv_k(3, 1e-6), -3.0, 1e-6);
}

TEST(LogDerivK, BelowMinusAbsOrderAndDecreasing) {
  for (double nu : {-4.0, -0.5, 0.0, 0.7, 3.0}) {
    double prev = INFINITY;
    for (double u : log_grid(0.01, 60, 40)) {
      const double s = log_deriv_k(nu, u);
      EXPECT_LT(s, -std::abs(nu));
      EXPECT_LT(s, prev);
      prev = s;
    }
  }
}

TEST(Ode, ResidualWithinBound) {
  // I'' from differentiating I' = I_{nu+1} + (nu/u) I_nu once more.
  for (double nu : {-0.5, 0.0, 1.0, 2.7, 10.0}) {
    for (double u : log_grid(0.1, 40, 30)) {
      const double i0 = besseli(nu, u);
      const double ip = besseli_prime(nu, u), i1p = besseli_prime(nu + 1, u);
      const double ipp = i1p + (nu / u) * ip - (nu / (u * u)) * i0;
      const double resid = u * u * ipp + u * ip - (u * u + nu * nu) * i0;
      EXPECT_LE(std::abs(resid), 1e-8 * (u * u + nu * nu) * i0) << nu << ' ' << u;

      const double k0 = besselk(nu, u), kp = besselk_prime(nu, u);
      const double k1p = besselk_prime(nu + 1, u);
      // K'_nu = -K_{nu+1} + (nu/u) K_nu
      const double kpp = -k1p + (nu / u) * kp - (nu / (u * u)) * k0;
      const double kres = u * u * kpp + u * kp - (u * u + nu * nu) * k0;
      EXPECT_LE(std::abs(kres), 1e-8 * (u * u + nu * nu) * k0) << nu << ' ' << u;
    }
  }
}

TEST(ClosedForm, HalfOrderProduct) {
  for (double u : log_grid(1e-3, 20, 40))
    EXPECT_NEAR(2 * u * besseli(0.5, u) * besselk(0.5, u), -std::expm1(-2 * u), 1e-10) << u;
}

// ---- J_nu and zeros ---------------------------------------------------------

TEST(BesselJ, FrozenValues) {
  EXPECT_NEAR(besselj(0, 1), 0.76519768655796655, 1e-14);
  EXPECT_NEAR(besselj(2.5, 7), -0.2834366512016992, 1e-14);
  EXPECT_NEAR(besselj(0, 40), 0.0073668905842372896, 1e-13);
}

TEST(BesselJ, MatchesSeriesOracle) {
  for (double nu : {-0.5, 0.0, 0.5, 1.0, 2.5})
    for (double u : {0.1, 1.0, 5.0, 12.0})
      EXPECT_NEAR(besselj(nu, u), static_cast<double>(oracle::besselj(nu, u)), 1e-13) << nu << ' ' << u;
}

TEST(BesselJ, DomainErrors) {
  EXPECT_THROW(besselj(-1.2, 1), domain_error);
  EXPECT_THROW(besselj(0, 0), domain_error);
}

TEST(BesselJZeros, FirstZeroOfJ0) {
  const auto t = besselj_zeros(0, 3);
  EXPECT_EQ(t.count(), 3u);
  EXPECT_NEAR(t.zeros[0], 2.4048255576957728, 1e-12);
  EXPECT_NEAR(besselj_zeros(1, 3).zeros[2], 10.173468135062722, 1e-12);
}

TEST(BesselJZeros, HalfOrderZerosAreMultiplesOfPi) {
  const auto t = besselj_zeros(0.5, 30);
  for (std::size_t n = 0; n < t.count(); ++n) EXPECT_NEAR(t.zeros[n], (n + 1) * pi, 1e-11);
}

TEST(BesselJZeros, IncreasingAndAreZeros) {
  for (double nu : {-0.7, 0.0, 2.5}) {
    const auto t = besselj_zeros(nu, 50);
    for (std::size_t n = 0; n < t.count(); ++n) {
      if (n) {
        EXPECT_GT(t.zeros[n], t.zeros[n - 1]);
      }
      EXPECT_LT(std::abs(besselj(nu, t.zeros[n])), 1e-10);
    }
  }
}

TEST(BesselJZeros, Errors) {
  EXPECT_THROW(besselj_zeros(0, 0), domain_error);
  EXPECT_THROW(besselj_zeros(-1.0, 3), domain_error);
}

// ---- Weierstrass form --------------------------------------------------------

TEST(Weierstrass, BracketsRecurrenceValue) {
  const auto zeros = besselj_zeros(1, 200);
  const auto w = weierstrass_log_deriv_i(1, 1, zeros);
  const double r = log_deriv_i(1, 1);
  EXPECT_LE(w.value, r);
  EXPECT_GE(w.value + w.tail_bound, r);
}

TEST(Weierstrass, AgreesWithinTailBound) {
  for (double nu : {0.0, 1.0, 2.5}) {
    const auto zeros = besselj_zeros(nu, 200);
    for (double u : {0.05, 0.5, 1.0, 3.0, 10.0}) {
      const auto w = weierstrass_log_deriv_i(nu, u, zeros);
      const double r = log_deriv_i(nu, u);
      EXPECT_LE(w.value, r + 1e-12) << nu << ' ' << u;
      EXPECT_GE(w.value + w.tail_bound, r - 1e-12) << nu << ' ' << u;
    }
  }
}

TEST(Weierstrass, SmallArgumentAndMonotoneInN) {
  const auto zeros = besselj_zeros(0.7, 5);
  EXPECT_NEAR(weierstrass_log_deriv_i(0.7, 1e-8, zeros).value, 0.7, 1e-12);
  const double w1 = weierstrass_log_deriv_i(0, 1, besselj_zeros(0, 1)).value;
  const double w200 = weierstrass_log_deriv_i(0, 1, besselj_zeros(0, 200)).value;
  EXPECT_LE(w1, w200);
}

TEST(Weierstrass, Errors) {
  BesselJZeroTable empty{1.0, {}};
  EXPECT_THROW(weierstrass_log_deriv_i(1, 1, empty), domain_error);
  EXPECT_THROW(weierstrass_log_deriv_i(2, 1, besselj_zeros(1, 3)), domain_error);
}

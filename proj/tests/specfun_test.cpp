#include "volheat/specfun.hpp"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "support/testutil.hpp"

namespace sf = volheat::specfun;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kPi = 3.14159265358979323846;

double erf_oracle(double x) {
  // 2/sqrt(pi) int_0^x exp(-s^2) ds by adaptive quadrature
  return 2.0 / kSqrtPi *
         testutil::adaptive_simpson([](double s) { return std::exp(-s * s); },
                                    0.0, x, 1e-15);
}
}  // namespace

TEST(Specfun, ErfOddSymmetryIsBitwise) {
  for (const double x : {0.1, 0.77, 1.5, 3.0, 5.5}) {
    EXPECT_EQ(sf::erf(-x), -sf::erf(x));
  }
  EXPECT_EQ(sf::erf(0.0), 0.0);
}

TEST(Specfun, ErfMatchesQuadratureOracle) {
  for (const double x : {0.1, 0.5, 1.0, 2.0, 3.0, 6.0}) {
    EXPECT_NEAR(sf::erf(x), erf_oracle(x), 1e-12) << "x=" << x;
  }
}

TEST(Specfun, ErfSaturates) {
  EXPECT_NEAR(sf::erf(10.0), 1.0, 1e-15);
  EXPECT_EQ(sf::erf(38.0), 1.0);
  EXPECT_EQ(sf::erf(-38.0), -1.0);
}

TEST(Specfun, GammaReproducesIntegerFactorials) {
  double fact = 1.0;
  for (int n = 1; n <= 20; ++n) {
    fact *= n;
    EXPECT_NEAR(sf::gamma(n + 1.0), fact, 1e-14 * fact) << "n=" << n;
  }
}

TEST(Specfun, GammaHalfIntegerValues) {
  EXPECT_NEAR(sf::gamma(0.5), kSqrtPi, 1e-15);
  EXPECT_NEAR(sf::gamma(1.5), 0.5 * kSqrtPi, 1e-15);
  EXPECT_NEAR(sf::gamma(2.5), 0.75 * kSqrtPi, 1e-14);
}

TEST(Specfun, GammaRecurrence) {
  for (const double x : {0.1, 0.7, 1.3, 2.9, 5.5, 9.9}) {
    EXPECT_NEAR(sf::gamma(x + 1.0), x * sf::gamma(x),
                1e-13 * std::abs(x * sf::gamma(x)))
        << "x=" << x;
  }
}

TEST(Specfun, LogGammaConsistentWithGamma) {
  for (const double x : {0.2, 1.0, 2.5, 7.0, 20.0, 80.0}) {
    EXPECT_NEAR(std::exp(sf::log_gamma(x)), sf::gamma(x),
                1e-12 * sf::gamma(x))
        << "x=" << x;
  }
}

TEST(Specfun, LogFactorialExactForSmallN) {
  std::uint64_t fact = 1;
  for (int n = 0; n <= 20; ++n) {
    if (n > 0) fact *= static_cast<std::uint64_t>(n);
    EXPECT_EQ(sf::log_factorial(n), std::log(static_cast<double>(fact)))
        << "n=" << n;
  }
}

TEST(Specfun, LogFactorialContinuousAcrossSwitch) {
  EXPECT_NEAR(sf::log_factorial(21), sf::log_factorial(20) + std::log(21.0),
              1e-13);
  EXPECT_NEAR(sf::log_factorial(100), sf::log_gamma(101.0), 0.0);
}

TEST(Specfun, OddDoubleFactorialSmallValues) {
  // 1!!, 3!!, 5!!, 7!!, 9!! = 1, 3, 15, 105, 945
  const double exact[] = {1.0, 3.0, 15.0, 105.0, 945.0};
  for (int k = 0; k < 5; ++k) {
    EXPECT_NEAR(sf::log_odd_double_factorial(2 * k + 1), std::log(exact[k]),
                1e-12)
        << "m=" << 2 * k + 1;
  }
}

TEST(Specfun, OddDoubleFactorialRecurrence) {
  for (int m = 1; m <= 999; m += 2) {
    EXPECT_NEAR(sf::log_odd_double_factorial(m + 2),
                sf::log_odd_double_factorial(m) + std::log(m + 2.0), 1e-11)
        << "m=" << m;
  }
}

TEST(Specfun, BetaHalfHalfIsPi) {
  EXPECT_NEAR(sf::beta(0.5, 0.5), kPi, 1e-13 * kPi);
}

TEST(Specfun, BetaAgainstGammaRatio) {
  for (const double x : {0.5, 1.5, 2.5}) {
    for (const double y : {0.5, 2.0, 3.5}) {
      const double want = sf::gamma(x) * sf::gamma(y) / sf::gamma(x + y);
      EXPECT_NEAR(sf::beta(x, y), want, 1e-12 * want);
    }
  }
}

TEST(Specfun, BetaSymmetric) {
  EXPECT_EQ(sf::beta(2.5, 3.5), sf::beta(3.5, 2.5));
  EXPECT_EQ(sf::beta(0.3, 1.9), sf::beta(1.9, 0.3));
}

TEST(Specfun, BetaAgainstIntegralOracle) {
  // B(2.5, 3.5) = int_0^1 s^1.5 (1-s)^2.5 ds
  const double oracle = testutil::adaptive_simpson(
      [](double s) { return std::pow(s, 1.5) * std::pow(1.0 - s, 2.5); }, 0.0,
      1.0, 1e-14);
  EXPECT_NEAR(sf::beta(2.5, 3.5), oracle, 1e-12);
}

TEST(Specfun, DomainErrors) {
  EXPECT_THROW(sf::gamma(0.0), std::invalid_argument);
  EXPECT_THROW(sf::gamma(-1.5), std::invalid_argument);
  EXPECT_THROW(sf::log_gamma(0.0), std::invalid_argument);
  EXPECT_THROW(sf::log_factorial(-1), std::invalid_argument);
  EXPECT_THROW(sf::log_odd_double_factorial(2), std::invalid_argument);
  EXPECT_THROW(sf::log_odd_double_factorial(-3), std::invalid_argument);
  EXPECT_THROW(sf::beta(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(sf::beta(1.0, -2.0), std::invalid_argument);
  EXPECT_THROW(sf::erf(std::numeric_limits<double>::quiet_NaN()),
               std::invalid_argument);
}

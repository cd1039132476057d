#include "volheat/heat.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "volheat/series.hpp"
#include "volheat/specfun.hpp"
#include "volheat/volterra.hpp"
#include "support/testutil.hpp"

using volheat::eval_flux0;
using volheat::eval_u;
using volheat::eval_U;
using volheat::eval_y;
using volheat::GridFunction;
using volheat::HeatSolution;
using volheat::pde_residual;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

TEST(FluxPotential, ZeroAtOrigin) {
  const GridFunction U = eval_U(1.0, 1.0, 1.0, 100);
  EXPECT_EQ(U.values[0], 0.0);
}

TEST(FluxPotential, LambdaZeroClosedForm) {
  // lambda = 0 gives y = 1 and U(t) = 2 h0 sqrt(t/pi) exactly; the
  // convolution weights integrate the constant exactly.
  const GridFunction U = eval_U(0.0, 3.0, 1.0, 500);
  for (int i = 1; i <= 500; ++i) {
    const double t = U.dt * i;
    const double want = 2.0 * 3.0 * std::sqrt(t) / kSqrtPi;
    EXPECT_NEAR(U.values[i], want, 1e-12 * want) << "i=" << i;
  }
}

TEST(FluxPotential, MatchesSubstitutedQuadratureOracle) {
  // U(t)/h0 = (1/sqrt(pi)) int_0^t y(tau)/sqrt(t-tau) dtau; substituting
  // tau = t - u^2 removes the singularity, so adaptive Simpson of
  // 2 y(t - u^2) on [0, sqrt(t)] is an independent oracle.
  const double t = 1.0;
  const GridFunction U = eval_U(1.0, 1.0, t, 1000);
  const double oracle =
      testutil::adaptive_simpson(
          [&](double u) { return 2.0 * eval_y(1.0, t - u * u, 1e-14).value; },
          0.0, std::sqrt(t), 1e-13) /
      kSqrtPi;
  EXPECT_NEAR(oracle, 0.706528037064176, 1e-12);  // frozen oracle value
  EXPECT_NEAR(U.values.back(), oracle, 1e-6);     // measured 3.3e-8
}

TEST(Field, BoundaryValueIsExactlyZero) {
  const HeatSolution sol(1.0, 1.0, 1.0, 400);
  for (const int i : {1, 100, 400}) EXPECT_EQ(sol.u_at_index(0.0, i), 0.0);
  const auto profile = sol.u_profile(0.0);
  EXPECT_EQ(profile[0], 0.0);
  for (const double v : profile) EXPECT_EQ(v, 0.0);
}

TEST(Field, LambdaZeroReducesToErfProfile) {
  // steps = 256 makes dt a power of two, so t = dt * i reproduces the
  // internal time values exactly.
  const double h0 = 2.0;
  const HeatSolution sol(0.0, h0, 1.0, 256);
  for (const int i : {1, 128, 256}) {
    const double t = i / 256.0;
    for (const double x : {0.05, 0.5, 2.0}) {
      EXPECT_DOUBLE_EQ(sol.u_at_index(x, i),
                       h0 * volheat::specfun::erf(x / (2.0 * std::sqrt(t))));
    }
  }
}

TEST(Field, FarFieldKeepsInitialDatum) {
  // For x far outside the diffusion length the solution still equals h0.
  EXPECT_NEAR(eval_u(1.0, 1.0, 0.1, 1e-7, 1000), 1.0, 1e-9);
}

TEST(Field, ApproachesInitialDatumAsTimeShrinks) {
  const double x = 0.5;
  double prev = 1.0;
  for (const double t : {1e-2, 1e-3, 1e-4}) {
    const double gap = std::abs(eval_u(1.0, 1.0, x, t, 1000) - 1.0);
    EXPECT_LT(gap, prev) << "t=" << t;
    prev = gap;
  }
}

TEST(Field, H0ScalingIsBitwiseLinear) {
  // Doubling h0 multiplies every stored double by a power of two, which
  // commutes with rounding, so the scaled fields agree bitwise.
  const HeatSolution a(1.5, 1.0, 1.0, 200);
  const HeatSolution b(1.5, 2.0, 1.0, 200);
  for (std::size_t i = 0; i < a.flux_potential().values.size(); ++i)
    EXPECT_EQ(2.0 * a.flux_potential().values[i],
              b.flux_potential().values[i]);
  const auto pa = a.u_profile(0.7);
  const auto pb = b.u_profile(0.7);
  for (std::size_t i = 0; i < pa.size(); ++i)
    EXPECT_EQ(2.0 * pa[i], pb[i]);
}

TEST(Field, ProfileMatchesPointEvaluationBitwise) {
  const HeatSolution sol(-2.0, 1.0, 1.0, 250);
  const auto profile = sol.u_profile(0.3);
  ASSERT_EQ(profile.size(), 251u);
  for (const int i : {1, 17, 125, 250})
    EXPECT_EQ(profile[i], sol.u_at_index(0.3, i));
}

TEST(Flux, LambdaZeroClosedForm) {
  // u_x(0,t) = h0 / sqrt(pi t) exactly when lambda = 0 (Simpson on the
  // constant 1 is exact).
  EXPECT_DOUBLE_EQ(eval_flux0(0.0, 2.0, 0.25, 100),
                   2.0 / (kSqrtPi * 0.5));
}

TEST(Flux, MatchesAdaptiveOracle) {
  const double lambda = 1.0;
  const double t = 1.0;
  const double q = testutil::adaptive_simpson(
      [&](double tau) { return eval_y(lambda, tau, 1e-14).value; }, 0.0, t,
      1e-13);
  const double want = 1.0 / (kSqrtPi * std::sqrt(t)) - lambda * q;
  EXPECT_NEAR(eval_flux0(lambda, 1.0, t, 1000), want, 1e-8);
}

TEST(Flux, ConsistentWithFieldGradient) {
  // One-sided third-order stencil (u(0,t) = 0 drops out):
  //   u_x(0) = (18 u(h) - 9 u(2h) + 2 u(3h)) / (6h) + O(h^3).
  // h must stay well above sqrt(dt): below that scale the trapezoid's
  // endpoint treatment of the erf boundary layer leaves an O(dt) offset
  // in u that does not vanish as x -> 0+, so a raw difference quotient
  // at x << sqrt(dt) measures the quadrature, not the gradient.
  // The expansion parameter is h / sqrt(t) (diffusive similarity), so the
  // early-time probe gets a finer stencil and grid.
  const double lambda = 1.0;
  struct Probe {
    double t, h;
    int steps;
  };
  for (const Probe p :
       {Probe{0.1, 0.05, 4000}, Probe{0.5, 0.1, 2000}, Probe{1.0, 0.1, 2000}}) {
    const HeatSolution sol(lambda, 1.0, p.t, p.steps);
    const double grad = (18.0 * sol.u_at_index(p.h, p.steps) -
                         9.0 * sol.u_at_index(2.0 * p.h, p.steps) +
                         2.0 * sol.u_at_index(3.0 * p.h, p.steps)) /
                        (6.0 * p.h);
    const double flux = eval_flux0(lambda, 1.0, p.t, p.steps);
    EXPECT_NEAR(grad, flux, 1e-3 * std::max(1.0, std::abs(flux)))
        << "t=" << p.t;
  }
}

TEST(Flux, ConsistentWithFieldRepresentation) {
  // Differentiating the field formula at x = 0 gives
  //   u_x(0,t) = h0/sqrt(pi t) - (lambda/sqrt(pi)) conv(1/sqrt, U)(t),
  // while eval_flux0 uses h0/sqrt(pi t) - h0 lambda int_0^t y.  Equality
  // of the two is the kernel interchange identity on real data.
  const double lambda = 1.0;
  const double h0 = 1.0;
  const int steps = 2000;
  const GridFunction U = eval_U(lambda, h0, 1.0, steps);
  for (const int i : {steps / 4, steps / 2, steps}) {
    const double t = U.dt * i;
    const double grad = h0 / (kSqrtPi * std::sqrt(t)) -
                        lambda / kSqrtPi * volheat::convolve_inv_sqrt(U, i);
    const double flux = eval_flux0(lambda, h0, t, steps);
    EXPECT_NEAR(grad, flux, 1e-5) << "i=" << i;
  }
}

TEST(PdeResidual, SmallAndConvergingUnderJointRefinement) {
  // The defect must shrink at second order when dx and dt_fd are refined
  // together (both discretizations contribute O(h^2) terms).
  struct Case {
    double lambda, x, t, fine_bound;
  };
  for (const Case c :
       {Case{1.0, 1.0, 0.5, 1e-5}, Case{-2.0, 0.5, 0.25, 1e-4}}) {
    const double coarse = pde_residual(c.lambda, 1.0, c.x, c.t, 2e-3, 2e-3);
    const double fine = pde_residual(c.lambda, 1.0, c.x, c.t, 1e-3, 1e-3);
    EXPECT_LE(fine, c.fine_bound) << "lambda=" << c.lambda;
    EXPECT_LE(coarse, 4.5 * c.fine_bound) << "lambda=" << c.lambda;
    EXPECT_GE(coarse / fine, 3.5) << "lambda=" << c.lambda;  // 3.997/4.000
  }
}

TEST(PdeResidual, LambdaZeroIsPureErfSolution) {
  EXPECT_LE(pde_residual(0.0, 1.0, 0.7, 0.3, 1e-3, 1e-3), 1e-4);
}

TEST(Heat, ArgumentValidation) {
  EXPECT_THROW(eval_U(1.0, 1.0, 0.0, 100), std::invalid_argument);
  EXPECT_THROW(eval_U(1.0, 1.0, 1.0, 1), std::invalid_argument);
  EXPECT_THROW(HeatSolution(1.0, 1.0, 1.0, 1), std::invalid_argument);

  const HeatSolution sol(1.0, 1.0, 1.0, 100);
  EXPECT_THROW(sol.u_at_index(-0.1, 10), std::invalid_argument);
  EXPECT_THROW(sol.u_at_index(0.5, 0), std::invalid_argument);
  EXPECT_THROW(sol.u_at_index(0.5, 101), std::invalid_argument);
  EXPECT_THROW(sol.u_profile(-1.0), std::invalid_argument);

  EXPECT_THROW(eval_flux0(1.0, 1.0, 0.0, 100), std::invalid_argument);
  EXPECT_THROW(pde_residual(1.0, 1.0, 0.5, 1.0, 0.0, 1e-3),
               std::invalid_argument);
  // x must exceed dx so the 3-point stencil stays inside the domain
  EXPECT_THROW(pde_residual(1.0, 1.0, 1e-4, 1.0, 1e-3, 1e-3),
               std::invalid_argument);
  // t must allow the centered 8-step time stencil
  EXPECT_THROW(pde_residual(1.0, 1.0, 0.5, 5e-4, 1e-3, 1e-3),
               std::invalid_argument);
}

#pragma once

#include <vector>

#include "volheat/series.hpp"

namespace volheat {

// Coefficient convention for the forcing term of the third-order form
//   y''' = lambda^2 y + c * t^(-3/2).
// Differentiating the second-derivative identity
//   y'' = -lambda/sqrt(pi t) + lambda^2 int_0^t y
// gives c = lambda / (2 sqrt(pi)); that is `half`, the default, and the
// residual tests show it is the convention the series solution satisfies.
// `full` keeps the doubled coefficient c = lambda / sqrt(pi) available so
// the discrepancy between the two conventions stays measurable: with it
// the residual equals |lambda|/(2 sqrt(pi)) t^(-3/2) instead of ~0.
enum class Forcing {
  half,  // c = lambda / (2 sqrt(pi))
  full,  // c = lambda / sqrt(pi)
};

// |y'''(t) - lambda^2 y(t) - c t^(-3/2)| at one point, all derivatives
// taken termwise from the series.  Requires t > 0.
double ode_residual(double lambda, double t, double tol = 1e-12,
                    Forcing forcing = Forcing::half);

// Checks at the left end of the interval:
//   y(0) = 1 exactly,
//   y'(0+) = 0 (sampled at t = 1e-6; the true decay is O(t^(1/2))),
//   y''(t) + lambda/sqrt(pi t) - lambda^2 int_0^t y = 0 (defect at 1e-6),
//   y''(t) ~ -lambda/sqrt(pi t) as t -> 0+: the remainder
//   |y''(t) + lambda/sqrt(pi t)| = lambda^2 int_0^t y ~ lambda^2 t is
//   probed at t = 1e-4, 1e-6, 1e-8 and d2y0_trend_ok records that it
//   decreases along the sequence (or is already < 1e-12, e.g. lambda=0).
struct InitialConditionCheck {
  double y0_error = 0.0;
  double dy0_error = 0.0;
  double d2y0_error = 0.0;   // full identity defect at t = 1e-6
  bool d2y0_trend_ok = false;
};
InitialConditionCheck check_initial_conditions(double lambda,
                                               double tol = 1e-12);

// |y''(1) + lambda/sqrt(pi) - lambda^2 int_0^1 y| with the integral done
// by composite Simpson on `steps` subintervals (rounded up to even).
double check_integral_bc(double lambda, int steps, double tol = 1e-12);

// Sup over t_values of the defects of the two integro-differential
// identities satisfied by the solution:
//   y'(t)  = lambda^2 int_0^t y(tau)(t - tau) dtau - 2 lambda sqrt(t/pi)
//   y''(t) = -lambda/sqrt(pi t) + lambda^2 int_0^t y(tau) dtau
// Integrals by composite Simpson with `steps` subintervals per point.
struct DerivativeIdentityCheck {
  double first_sup = 0.0;
  double second_sup = 0.0;
};
DerivativeIdentityCheck check_derivative_identities(
    double lambda, const std::vector<double>& t_values, int steps,
    double tol = 1e-12);

// Everything above plus the integral-equation defect, bundled with the
// tolerances used for the verdict.  Defaults scale with lambda:
//   ode_residual_sup        <= 1e-6  * max(1, lambda^2)
//   y0_error                <= 1e-15
//   dy0_error               <= 3e-3  * |lambda|           (+1e-15 floor)
//   d2y0_error              <= 1e-6  * max(1, |lambda|)
//   integral_bc_error       <= 1e-7  * max(1, lambda^2)
//   identity sups           <= 1e-6  * max(1, lambda^2)
//   volterra_residual_sup   <= 5 dt^2 (1 + |lambda|)
struct EquivalenceTolerances {
  double ode_residual = 0.0;
  double y0 = 0.0;
  double dy0 = 0.0;
  double d2y0 = 0.0;
  double integral_bc = 0.0;
  double deriv_identity = 0.0;
  double volterra_residual = 0.0;
};

struct EquivalenceReport {
  double lambda = 0.0;
  double t_max = 0.0;
  int steps = 0;
  double tol = 0.0;
  Forcing forcing = Forcing::half;

  double ode_residual_sup = 0.0;        // over 33 log-spaced t in [t_max/1000, t_max]
  double y0_error = 0.0;
  double dy0_error = 0.0;
  double d2y0_error = 0.0;
  bool d2y0_trend_ok = false;
  double integral_bc_error = 0.0;
  double first_deriv_identity_sup = 0.0;   // over 48 log-spaced t in [t_max/100, t_max]
  double second_deriv_identity_sup = 0.0;
  double volterra_residual_sup = 0.0;      // defect of the sampled series on the grid

  EquivalenceTolerances tolerances;
  bool pass = false;
};

EquivalenceReport full_equivalence_report(const ModelParams& params,
                                          int steps, double tol,
                                          Forcing forcing = Forcing::half);

}  // namespace volheat

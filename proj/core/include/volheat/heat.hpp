#pragma once

#include <vector>

#include "volheat/grid.hpp"

namespace volheat {

// Solution machinery for the half-line heat problem with a flux-memory
// source term:
//
//   u_t = u_xx - lambda * U(t),   x > 0, 0 < t <= T,
//   u(x, 0) = h0,                 x > 0,
//   u(0, t) = 0,
//
// where U(t) = int_0^t u_x(0, tau) dtau is the accumulated boundary flux.
// With y the series solution of the companion Volterra equation (same
// lambda), the solution is explicit:
//
//   U(t)    = (h0 / sqrt(pi)) int_0^t y(tau) / sqrt(t - tau) dtau
//   u(x, t) = h0 erf(x / (2 sqrt t))
//             - lambda int_0^t erf(x / (2 sqrt(t - tau))) U(tau) dtau
//   u_x(0,t) = h0 / sqrt(pi t) - h0 lambda int_0^t y(tau) dtau
//
// U also satisfies the smooth representation
//   U(t) = (2 h0 / sqrt(pi)) sqrt(t) - h0 lambda int_0^t y(s) (t - s) ds,
// which pde_residual uses as an independent route to the source term.

// U on the uniform grid over [0, t_max]: series samples of y convolved
// with the 1/sqrt kernel, scaled by h0/sqrt(pi).  U(0) = 0 exactly.
GridFunction eval_U(double lambda, double h0, double t_max, int steps,
                    double tol = 1e-10);

// Precomputes U once so u can be evaluated at many (x, t_i) cheaply.
// u_at_index applies the trapezoid rule on the grid; the integrand's
// value at tau = t is the limit (x > 0 ? 1 : 0) * U(t), since
// erf(x / (2 sqrt s)) -> 1 as s -> 0+ for x > 0.
class HeatSolution {
 public:
  HeatSolution(double lambda, double h0, double t_max, int steps,
               double tol = 1e-10);

  double lambda_value() const { return lambda_; }
  double h0_value() const { return h0_; }
  const GridFunction& flux_potential() const { return U_; }

  // u(x, t_i) for 1 <= i <= steps, x >= 0.
  double u_at_index(double x, int i) const;

  // u(x, t_i) for all i at once (index 0 holds the initial datum:
  // h0 for x > 0, 0 at x = 0).  Shares one erf table across all i and
  // sums in the same order as u_at_index, so matching entries agree
  // bitwise.
  std::vector<double> u_profile(double x) const;

 private:
  double lambda_ = 0.0;
  double h0_ = 0.0;
  GridFunction U_;
};

// u(x, t) via a fresh HeatSolution on [0, t] with `steps` subintervals.
double eval_u(double lambda, double h0, double x, double t, int steps,
              double tol = 1e-10);

// Boundary flux u_x(0, t) = h0/sqrt(pi t) - h0 lambda int_0^t y, the
// integral by composite Simpson with `steps` subintervals (rounded up
// to even).
double eval_flux0(double lambda, double h0, double t, int steps,
                  double tol = 1e-10);

// Finite-difference defect  |u_t - u_xx + lambda U(t)|  at (x, t) with
// spatial step dx and temporal step dt_fd.  All five u samples come from
// one internal HeatSolution whose grid step is dt_fd / 8, so the
// quadrature error of u itself is shared between the time snapshots and
// the defect measures the PDE, not the integrator.  The source term U(t)
// is evaluated through the smooth representation above (Simpson), not
// through the singular convolution, so the two sides are independent.
// Requires x > dx > 0 and t >= 9/8 * dt_fd; (x, t) is snapped to the
// internal grid in time.
double pde_residual(double lambda, double h0, double x, double t, double dx,
                    double dt_fd, double tol = 1e-10);

}  // namespace volheat

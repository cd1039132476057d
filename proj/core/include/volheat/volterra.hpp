#pragma once

#include <vector>

#include "volheat/grid.hpp"

namespace volheat {

// Weakly singular convolution kernels handled by product integration.
enum class Kernel {
  sqrt_s,      // k(s) = sqrt(s)
  inv_sqrt_s,  // k(s) = 1/sqrt(s)
};

// Exact moments of the kernel against the piecewise-linear nodal basis,
// one pair per lag d = 1..lags.  For an evaluation point t_m and source
// interval [t_{m-d}, t_{m-d+1}]:
//
//   contribution = f_{m-d} * far[d-1] + f_{m-d+1} * near[d-1]
//
// where "far"/"near" refer to distance from t_m.  Both weights are exact
// integrals of kernel * hat function, so polynomials of degree <= 1 are
// integrated exactly and no quadrature error is incurred at the kernel
// singularity.
struct KernelMoments {
  double dt = 0.0;
  std::vector<double> far;
  std::vector<double> near;
};

KernelMoments kernel_moments(Kernel kind, double dt, int lags);

// int_0^{t_m} f(tau) k(t_m - tau) dtau for f given on a uniform grid,
// where the integrand uses the piecewise-linear interpolant of f.
// t_index selects t_m = t_index * dt; convolve_full returns all indices
// at once (values[0] == 0).
double convolve_sqrt(const GridFunction& f, int t_index);
double convolve_inv_sqrt(const GridFunction& f, int t_index);
GridFunction convolve_full(Kernel kind, const GridFunction& f);

// Marching product-integration solve of
//   y(t) = 1 - (2 lambda / sqrt(pi)) int_0^t y(tau) sqrt(t - tau) dtau
// on steps+1 nodes covering [0, t_max].  Throws NumericalError if the
// per-step divisor 1 + (2 lambda/sqrt(pi)) * near-weight falls below
// 1e-14 in magnitude.
GridFunction solve_volterra(double lambda, double t_max, int steps);

// Defect phi_i = y_i - 1 + (2 lambda / sqrt(pi)) * conv(y, sqrt)_i of a
// gridded candidate solution.  phi_0 is exact (no quadrature at t = 0).
GridFunction volterra_residual(const GridFunction& y, double lambda);

// First n_terms of the successive-approximation (Adomian) decomposition:
//   y_0 = 1,   y_{k+1} = -(2 lambda / sqrt(pi)) * conv(y_k, sqrt)
// evaluated on the shared grid.  Partial sums converge to the series
// solution; even-index terms reproduce the even part in lambda, odd-index
// terms the odd part.
std::vector<GridFunction> adomian_terms(double lambda, double t_max,
                                        int steps, int n_terms);

}  // namespace volheat

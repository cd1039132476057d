#pragma once

#include <string>
#include <vector>

#include "volheat/grid.hpp"

namespace volheat {

// Quantitative parameter-dependence bounds.  For |lambda| <=
// lambda_threshold(eps, T) the kernel norm (2|lambda|/sqrt(pi)) *
// (2/3) T^(3/2) stays <= eps < 1, and explicit bounds follow for the
// Volterra solution g and the heat solution u:
//
//   ||g||_T        <= 1 / (1 - eps)
//   ||g(l1)-g(l2)|| <= (4/(3 sqrt pi)) T^(3/2) / (1-eps)^2 * |l1 - l2|
//   ||U||_T        <= 2 h0 sqrt(T) / (sqrt(pi) (1 - eps))
//   ||u||          <= h0 (1 + 3 eps / (2 (1 - eps)))
//   ||u - u0||     <= 2 h0 T^(3/2) |lambda| / (sqrt(pi) (1 - eps))
//   ||u(l1)-u(l2)|| <= 2 h0 sqrt(T)/(sqrt(pi)(1-eps)) (eps pi/(1-eps) + T) |l1-l2|
//
// (u0 is the lambda = 0 solution h0 erf(x/(2 sqrt t)).)  The verifiers
// sample lambda uniformly in [-threshold, threshold] and check every bound
// with an absolute slack of 1e-9 to absorb roundoff when a bound is met
// with equality (e.g. lambda = 0).

inline constexpr double kBoundSlack = 1e-9;

// Largest |lambda| with kernel norm <= eps:  (3 sqrt(pi) / 4) eps / T^(3/2).
// Requires eps in (0, 1), T > 0.
double lambda_threshold(double epsilon, double t_max);

double sup_norm(const GridFunction& f);

// n uniformly spaced values spanning [-lambda_max, lambda_max]; for odd n
// the midpoint is exactly 0.  Requires n >= 2.
std::vector<double> lambda_samples(double lambda_max, int n);

// Spatial probe grid: 64 uniform points on [0, 8 sqrt(T)] plus the
// far-field point 100 sqrt(T) where u must sit at the initial datum.
std::vector<double> default_x_grid(double t_max);

struct SolutionBoundsReport {
  double epsilon = 0.0;
  double t_max = 0.0;
  double lambda_max = 0.0;

  double g_norm_bound = 0.0;
  double g_norm_measured = 0.0;       // max over lambda samples of sup |g|
  double g_lipschitz_bound = 0.0;
  double g_lipschitz_measured = 0.0;  // max pairwise sup|g_i-g_j| / |l_i-l_j|

  std::vector<std::string> violations;
  bool pass = false;
};

SolutionBoundsReport verify_solution_bounds(double epsilon, double t_max,
                                            int n_lambda = 9, int steps = 512,
                                            double tol = 1e-10);

struct HeatBoundsReport {
  double epsilon = 0.0;
  double t_max = 0.0;
  double h0 = 0.0;
  double lambda_max = 0.0;

  double U_norm_bound = 0.0;
  double U_norm_measured = 0.0;
  double u_norm_bound = 0.0;
  double u_norm_measured = 0.0;
  double u_dev_coeff = 0.0;     // per-lambda: dev(lambda) <= coeff * |lambda|
  double u_dev_bound = 0.0;     // coeff * lambda_max
  double u_dev_measured = 0.0;  // max over lambda of sup |u - u0|
  double u_lipschitz_bound = 0.0;
  double u_lipschitz_measured = 0.0;

  std::vector<std::string> violations;
  bool pass = false;
};

// Empty x_grid means default_x_grid(t_max).
HeatBoundsReport verify_heat_bounds(double epsilon, double t_max, double h0,
                                    int n_lambda = 9, int steps = 512,
                                    std::vector<double> x_grid = {},
                                    double tol = 1e-10);

struct BoundsReport {
  double epsilon = 0.0;
  double t_max = 0.0;
  double h0 = 0.0;
  double lambda_max = 0.0;
  SolutionBoundsReport solution;
  HeatBoundsReport heat;
  bool pass = false;
};

BoundsReport verify_bounds(double epsilon, double t_max, double h0,
                           int n_lambda = 9, int steps = 512,
                           double tol = 1e-10);

}  // namespace volheat

#include "volheat/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "volheat/heat.hpp"
#include "volheat/series.hpp"
#include "volheat/specfun.hpp"

namespace volheat {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kPi = 3.14159265358979323846;

std::string describe(const char* fmt, double a, double b, double c) {
  char buf[192];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

void check_eps_t(double epsilon, double t_max) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw std::invalid_argument("bounds: epsilon must lie in (0, 1)");
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw std::invalid_argument("bounds: t_max must be positive and finite");
}

}  // namespace

double lambda_threshold(double epsilon, double t_max) {
  check_eps_t(epsilon, t_max);
  // Kernel norm of the integral operator is (2|lambda|/sqrt(pi)) *
  // (2/3) t_max^(3/2); solving norm == epsilon for |lambda|:
  return 0.75 * kSqrtPi * epsilon / (t_max * std::sqrt(t_max));
}

double sup_norm(const GridFunction& f) {
  validate_grid(f);
  double m = 0.0;
  for (const double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> lambda_samples(double lambda_max, int n) {
  if (!(lambda_max >= 0.0) || !std::isfinite(lambda_max))
    throw std::invalid_argument("bounds: lambda_max must be >= 0 and finite");
  if (n < 2) throw std::invalid_argument("bounds: need at least two samples");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = -lambda_max +
             2.0 * lambda_max * (static_cast<double>(i) / (n - 1));
  return out;
}

std::vector<double> default_x_grid(double t_max) {
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw std::invalid_argument("bounds: t_max must be positive and finite");
  const double s = std::sqrt(t_max);
  std::vector<double> xs(65);
  for (int i = 0; i < 64; ++i) xs[i] = 8.0 * s * (i / 63.0);
  xs[64] = 100.0 * s;  // far field: u should sit at the initial datum
  return xs;
}

SolutionBoundsReport verify_solution_bounds(double epsilon, double t_max,
                                            int n_lambda, int steps,
                                            double tol) {
  check_eps_t(epsilon, t_max);
  if (steps < 2)
    throw std::invalid_argument("verify_solution_bounds: steps must be >= 2");

  SolutionBoundsReport r;
  r.epsilon = epsilon;
  r.t_max = t_max;
  r.lambda_max = lambda_threshold(epsilon, t_max);
  const double om = 1.0 - epsilon;
  r.g_norm_bound = 1.0 / om;
  r.g_lipschitz_bound =
      (4.0 / (3.0 * kSqrtPi)) * t_max * std::sqrt(t_max) / (om * om);

  const std::vector<double> ls = lambda_samples(r.lambda_max, n_lambda);
  std::vector<GridFunction> gs;
  gs.reserve(ls.size());
  for (const double l : ls) gs.push_back(sample_y(l, t_max, steps, tol));

  for (std::size_t i = 0; i < ls.size(); ++i) {
    const double norm = sup_norm(gs[i]);
    r.g_norm_measured = std::max(r.g_norm_measured, norm);
    if (norm > r.g_norm_bound + kBoundSlack)
      r.violations.push_back(describe(
          "solution norm %.6g exceeds bound %.6g at lambda=%.6g", norm,
          r.g_norm_bound, ls[i]));
  }

  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      const double dl = std::abs(ls[i] - ls[j]);
      if (dl == 0.0) continue;
      double dsup = 0.0;
      for (std::size_t k = 0; k < gs[i].values.size(); ++k)
        dsup = std::max(dsup, std::abs(gs[i].values[k] - gs[j].values[k]));
      r.g_lipschitz_measured = std::max(r.g_lipschitz_measured, dsup / dl);
      if (dsup > r.g_lipschitz_bound * dl + kBoundSlack)
        r.violations.push_back(describe(
            "solution deviation %.6g exceeds Lipschitz budget %.6g for "
            "lambda gap %.6g",
            dsup, r.g_lipschitz_bound * dl, dl));
    }
  }

  r.pass = r.violations.empty();
  return r;
}

HeatBoundsReport verify_heat_bounds(double epsilon, double t_max, double h0,
                                    int n_lambda, int steps,
                                    std::vector<double> x_grid, double tol) {
  check_eps_t(epsilon, t_max);
  if (!(h0 > 0.0) || !std::isfinite(h0))
    throw std::invalid_argument("verify_heat_bounds: h0 must be positive");
  if (steps < 2)
    throw std::invalid_argument("verify_heat_bounds: steps must be >= 2");
  if (x_grid.empty()) x_grid = default_x_grid(t_max);
  for (const double x : x_grid)
    if (!(x >= 0.0) || !std::isfinite(x))
      throw std::invalid_argument("verify_heat_bounds: x grid must be >= 0");

  HeatBoundsReport r;
  r.epsilon = epsilon;
  r.t_max = t_max;
  r.h0 = h0;
  r.lambda_max = lambda_threshold(epsilon, t_max);
  const double om = 1.0 - epsilon;
  const double sqt = std::sqrt(t_max);
  r.U_norm_bound = 2.0 * h0 * sqt / (kSqrtPi * om);
  r.u_norm_bound = h0 * (1.0 + 1.5 * epsilon / om);
  r.u_dev_coeff = 2.0 * h0 * t_max * sqt / (kSqrtPi * om);
  r.u_dev_bound = r.u_dev_coeff * r.lambda_max;
  r.u_lipschitz_bound =
      (2.0 * h0 * sqt / (kSqrtPi * om)) * (epsilon * kPi / om + t_max);

  const std::vector<double> ls = lambda_samples(r.lambda_max, n_lambda);
  const double dt = t_max / steps;

  // lambda = 0 reference field h0 erf(x / (2 sqrt t)), shared across
  // samples; index 0 is the initial datum.
  std::vector<std::vector<double>> ref(x_grid.size());
  for (std::size_t xi = 0; xi < x_grid.size(); ++xi) {
    ref[xi].resize(static_cast<std::size_t>(steps) + 1);
    ref[xi][0] = x_grid[xi] > 0.0 ? h0 : 0.0;
    for (int i = 1; i <= steps; ++i)
      ref[xi][i] = h0 * specfun::erf(x_grid[xi] / (2.0 * std::sqrt(dt * i)));
  }

  std::vector<std::vector<std::vector<double>>> profiles(ls.size());
  for (std::size_t k = 0; k < ls.size(); ++k) {
    const HeatSolution sol(ls[k], h0, t_max, steps, tol);

    const double un = sup_norm(sol.flux_potential());
    r.U_norm_measured = std::max(r.U_norm_measured, un);
    if (un > r.U_norm_bound + kBoundSlack)
      r.violations.push_back(
          describe("flux potential norm %.6g exceeds bound %.6g at "
                   "lambda=%.6g",
                   un, r.U_norm_bound, ls[k]));

    profiles[k].reserve(x_grid.size());
    for (const double x : x_grid) profiles[k].push_back(sol.u_profile(x));

    double unorm = 0.0, dev = 0.0;
    for (std::size_t xi = 0; xi < x_grid.size(); ++xi) {
      for (std::size_t i = 0; i < profiles[k][xi].size(); ++i) {
        unorm = std::max(unorm, std::abs(profiles[k][xi][i]));
        dev = std::max(dev, std::abs(profiles[k][xi][i] - ref[xi][i]));
      }
    }
    r.u_norm_measured = std::max(r.u_norm_measured, unorm);
    r.u_dev_measured = std::max(r.u_dev_measured, dev);
    if (unorm > r.u_norm_bound + kBoundSlack)
      r.violations.push_back(describe(
          "temperature norm %.6g exceeds bound %.6g at lambda=%.6g", unorm,
          r.u_norm_bound, ls[k]));
    if (dev > r.u_dev_coeff * std::abs(ls[k]) + kBoundSlack)
      r.violations.push_back(describe(
          "deviation from the lambda=0 field %.6g exceeds budget %.6g at "
          "lambda=%.6g",
          dev, r.u_dev_coeff * std::abs(ls[k]), ls[k]));
  }

  for (std::size_t a = 0; a < ls.size(); ++a) {
    for (std::size_t b = a + 1; b < ls.size(); ++b) {
      const double dl = std::abs(ls[a] - ls[b]);
      if (dl == 0.0) continue;
      double dsup = 0.0;
      for (std::size_t xi = 0; xi < x_grid.size(); ++xi)
        for (std::size_t i = 0; i < profiles[a][xi].size(); ++i)
          dsup = std::max(dsup,
                          std::abs(profiles[a][xi][i] - profiles[b][xi][i]));
      r.u_lipschitz_measured = std::max(r.u_lipschitz_measured, dsup / dl);
      if (dsup > r.u_lipschitz_bound * dl + kBoundSlack)
        r.violations.push_back(describe(
            "temperature deviation %.6g exceeds Lipschitz budget %.6g for "
            "lambda gap %.6g",
            dsup, r.u_lipschitz_bound * dl, dl));
    }
  }

  r.pass = r.violations.empty();
  return r;
}

BoundsReport verify_bounds(double epsilon, double t_max, double h0,
                           int n_lambda, int steps, double tol) {
  BoundsReport r;
  r.epsilon = epsilon;
  r.t_max = t_max;
  r.h0 = h0;
  r.lambda_max = lambda_threshold(epsilon, t_max);
  r.solution = verify_solution_bounds(epsilon, t_max, n_lambda, steps, tol);
  r.heat = verify_heat_bounds(epsilon, t_max, h0, n_lambda, steps, {}, tol);
  r.pass = r.solution.pass && r.heat.pass;
  return r;
}

}  // namespace volheat

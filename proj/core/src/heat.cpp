#include "volheat/heat.hpp"

#include <cmath>
#include <stdexcept>

#include "volheat/quadrature.hpp"
#include "volheat/series.hpp"
#include "volheat/specfun.hpp"
#include "volheat/volterra.hpp"

namespace volheat {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kPi = 3.14159265358979323846;

void check_h0(double h0) {
  if (!(h0 > 0.0) || !std::isfinite(h0))
    throw std::invalid_argument("heat: h0 must be positive and finite");
}

void check_x(double x) {
  if (!(x >= 0.0) || !std::isfinite(x))
    throw std::invalid_argument("heat: x must be >= 0 and finite");
}

}  // namespace

GridFunction eval_U(double lambda, double h0, double t_max, int steps,
                    double tol) {
  check_h0(h0);
  if (steps < 2) throw std::invalid_argument("eval_U: steps must be >= 2");
  const GridFunction g = sample_y(lambda, t_max, steps, tol);
  GridFunction U = convolve_full(Kernel::inv_sqrt_s, g);
  const double scale = h0 / kSqrtPi;
  for (double& v : U.values) v *= scale;
  return U;
}

HeatSolution::HeatSolution(double lambda, double h0, double t_max, int steps,
                           double tol)
    : lambda_(lambda), h0_(h0), U_(eval_U(lambda, h0, t_max, steps, tol)) {}

double HeatSolution::u_at_index(double x, int i) const {
  check_x(x);
  if (i < 1 || i > U_.last_index())
    throw std::invalid_argument("heat: time index out of range");
  const double dt = U_.dt;
  // Trapezoid over tau = t_1 .. t_i; the tau = 0 node drops out because
  // U(0) = 0.  Lag arguments are written as dt * (i - j) so this matches
  // u_profile bitwise.
  double acc = 0.0;
  for (int j = 1; j < i; ++j)
    acc += specfun::erf(x / (2.0 * std::sqrt(dt * (i - j)))) * U_.values[j];
  acc += (x > 0.0 ? 0.5 : 0.0) * U_.values[i];
  return h0_ * specfun::erf(x / (2.0 * std::sqrt(dt * i))) -
         lambda_ * dt * acc;
}

std::vector<double> HeatSolution::u_profile(double x) const {
  check_x(x);
  const int n = U_.last_index();
  const double dt = U_.dt;
  std::vector<double> erf_at_lag(static_cast<std::size_t>(n) + 1, 0.0);
  for (int d = 1; d <= n; ++d)
    erf_at_lag[d] = specfun::erf(x / (2.0 * std::sqrt(dt * d)));

  std::vector<double> u(static_cast<std::size_t>(n) + 1);
  u[0] = x > 0.0 ? h0_ : 0.0;
  const double tail = x > 0.0 ? 0.5 : 0.0;
  for (int i = 1; i <= n; ++i) {
    double acc = 0.0;
    for (int j = 1; j < i; ++j) acc += erf_at_lag[i - j] * U_.values[j];
    acc += tail * U_.values[i];
    u[i] = h0_ * erf_at_lag[i] - lambda_ * dt * acc;
  }
  return u;
}

double eval_u(double lambda, double h0, double x, double t, int steps,
              double tol) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw std::invalid_argument("eval_u: t must be positive and finite");
  if (steps < 2) throw std::invalid_argument("eval_u: steps must be >= 2");
  const HeatSolution sol(lambda, h0, t, steps, tol);
  return sol.u_at_index(x, steps);
}

double eval_flux0(double lambda, double h0, double t, int steps, double tol) {
  check_h0(h0);
  if (!std::isfinite(lambda))
    throw std::invalid_argument("eval_flux0: lambda must be finite");
  if (!(t > 0.0) || !std::isfinite(t))
    throw std::invalid_argument("eval_flux0: t must be positive and finite");
  if (steps < 2) throw std::invalid_argument("eval_flux0: steps must be >= 2");
  const int n = steps % 2 == 0 ? steps : steps + 1;
  const double q = composite_simpson(
      [&](double tau) { return eval_y(lambda, tau, tol).value; }, 0.0, t, n);
  return h0 / std::sqrt(kPi * t) - h0 * lambda * q;
}

double pde_residual(double lambda, double h0, double x, double t, double dx,
                    double dt_fd, double tol) {
  check_h0(h0);
  if (!(dx > 0.0) || !(x > dx))
    throw std::invalid_argument("pde_residual: requires x > dx > 0");
  if (!(t > 0.0) || !(dt_fd > 0.0) || !std::isfinite(t) ||
      !std::isfinite(dt_fd))
    throw std::invalid_argument("pde_residual: t and dt_fd must be positive");

  const double h = dt_fd / 8.0;
  const int m = static_cast<int>(std::llround(t / h));
  if (m < 9)
    throw std::invalid_argument("pde_residual: need t >= 9/8 * dt_fd");
  const int n = m + 8;

  const HeatSolution sol(lambda, h0, n * h, n, tol);
  const double dt = sol.flux_potential().dt;  // == h up to one rounding
  const double tm = dt * m;

  const double ut =
      (sol.u_at_index(x, m + 8) - sol.u_at_index(x, m - 8)) / (16.0 * dt);
  const double uc = sol.u_at_index(x, m);
  const double uxx = (sol.u_at_index(x - dx, m) - 2.0 * uc +
                      sol.u_at_index(x + dx, m)) /
                     (dx * dx);

  // Source term via the smooth representation of U: closed singular part
  // plus a Simpson integral of the bounded integrand y(s)(tm - s).
  const double q = composite_simpson(
      [&](double s) { return eval_y(lambda, s, tol).value * (tm - s); }, 0.0,
      tm, 2048);
  const double source = (2.0 * h0 / kSqrtPi) * std::sqrt(tm) - h0 * lambda * q;

  return std::abs(ut - uxx + lambda * source);
}

}  // namespace volheat

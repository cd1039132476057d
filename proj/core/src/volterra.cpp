#include "volheat/volterra.hpp"

#include <cmath>
#include <stdexcept>

#include "volheat/errors.hpp"

namespace volheat {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

void check_index(const GridFunction& f, int t_index) {
  if (t_index < 0 || t_index > f.last_index())
    throw std::invalid_argument("convolve: t_index out of range");
}

double convolve_at(const GridFunction& f, const KernelMoments& mom, int m) {
  // lag 1 .. m, nearest interval first; at lag d the source nodes are
  // m-d (far weight) and m-d+1 (near weight)
  double acc = 0.0;
  for (int d = 1; d <= m; ++d)
    acc += f.values[m - d] * mom.far[d - 1] + f.values[m - d + 1] * mom.near[d - 1];
  return acc;
}

}  // namespace

KernelMoments kernel_moments(Kernel kind, double dt, int lags) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw std::invalid_argument("kernel_moments: dt must be positive and finite");
  if (lags < 1) throw std::invalid_argument("kernel_moments: need lags >= 1");

  KernelMoments mom;
  mom.dt = dt;
  mom.far.resize(lags);
  mom.near.resize(lags);

  for (int d = 1; d <= lags; ++d) {
    // Kernel argument s runs over [a, b] = [(d-1) dt, d dt].  M0 and M1
    // are the exact moments int s^0 k(s) ds and int s^1 k(s) ds; the
    // differences of fractional powers are written in divided form so a
    // close to b at large d costs no cancellation:
    //   b^(3/2) - a^(3/2) = dt (b + sqrt(ab) + a) / (sqrt a + sqrt b)
    //   b^(5/2) - a^(5/2) = dt (b^2 + b sqrt(ab) + ab + a sqrt(ab) + a^2)
    //                          / (sqrt a + sqrt b)
    const double a = (d - 1) * dt;
    const double b = d * dt;
    const double sa = std::sqrt(a);
    const double sb = std::sqrt(b);
    const double sab = sa * sb;
    const double d32 = dt * (b + sab + a) / (sa + sb);
    double m0, m1;
    if (kind == Kernel::sqrt_s) {
      const double d52 =
          dt * (b * b + b * sab + a * b + a * sab + a * a) / (sa + sb);
      m0 = (2.0 / 3.0) * d32;
      m1 = (2.0 / 5.0) * d52;
    } else {
      m0 = 2.0 * dt / (sa + sb);
      m1 = (2.0 / 3.0) * d32;
    }
    // Resolve the moments onto the two hat functions of the interval.
    // The far node sits at s = b, the near node at s = a.
    mom.far[d - 1] = (m1 - a * m0) / dt;
    mom.near[d - 1] = (b * m0 - m1) / dt;
  }
  return mom;
}

double convolve_sqrt(const GridFunction& f, int t_index) {
  validate_grid(f);
  check_index(f, t_index);
  if (t_index == 0) return 0.0;
  return convolve_at(f, kernel_moments(Kernel::sqrt_s, f.dt, t_index), t_index);
}

double convolve_inv_sqrt(const GridFunction& f, int t_index) {
  validate_grid(f);
  check_index(f, t_index);
  if (t_index == 0) return 0.0;
  return convolve_at(f, kernel_moments(Kernel::inv_sqrt_s, f.dt, t_index),
                     t_index);
}

GridFunction convolve_full(Kernel kind, const GridFunction& f) {
  validate_grid(f);
  const int n = f.last_index();
  const KernelMoments mom = kernel_moments(kind, f.dt, n);
  GridFunction out;
  out.dt = f.dt;
  out.values.resize(f.size());
  out.values[0] = 0.0;
  for (int m = 1; m <= n; ++m) out.values[m] = convolve_at(f, mom, m);
  return out;
}

GridFunction solve_volterra(double lambda, double t_max, int steps) {
  if (!std::isfinite(lambda))
    throw std::invalid_argument("solve_volterra: lambda must be finite");
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw std::invalid_argument("solve_volterra: t_max must be positive");
  if (steps < 2) throw std::invalid_argument("solve_volterra: steps must be >= 2");

  const double dt = t_max / steps;
  const KernelMoments mom = kernel_moments(Kernel::sqrt_s, dt, steps);
  const double kappa = 2.0 * lambda / kSqrtPi;
  // The unknown y_m multiplies the near weight of lag 1.
  const double divisor = 1.0 + kappa * mom.near[0];
  if (std::abs(divisor) < 1e-14)
    throw NumericalError("solve_volterra: marching divisor vanished");

  GridFunction y;
  y.dt = dt;
  y.values.resize(static_cast<std::size_t>(steps) + 1);
  y.values[0] = 1.0;
  for (int m = 1; m <= steps; ++m) {
    double known = y.values[m - 1] * mom.far[0];
    for (int d = 2; d <= m; ++d)
      known +=
          y.values[m - d] * mom.far[d - 1] + y.values[m - d + 1] * mom.near[d - 1];
    y.values[m] = (1.0 - kappa * known) / divisor;
  }
  return y;
}

GridFunction volterra_residual(const GridFunction& y, double lambda) {
  validate_grid(y);
  if (!std::isfinite(lambda))
    throw std::invalid_argument("volterra_residual: lambda must be finite");
  GridFunction conv = convolve_full(Kernel::sqrt_s, y);
  GridFunction phi;
  phi.dt = y.dt;
  phi.values.resize(y.size());
  const double kappa = 2.0 * lambda / kSqrtPi;
  for (std::size_t i = 0; i < y.size(); ++i)
    phi.values[i] = y.values[i] - 1.0 + kappa * conv.values[i];
  return phi;
}

std::vector<GridFunction> adomian_terms(double lambda, double t_max, int steps,
                                        int n_terms) {
  if (!std::isfinite(lambda))
    throw std::invalid_argument("adomian_terms: lambda must be finite");
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw std::invalid_argument("adomian_terms: t_max must be positive");
  if (steps < 2) throw std::invalid_argument("adomian_terms: steps must be >= 2");
  if (n_terms < 1) throw std::invalid_argument("adomian_terms: n_terms must be >= 1");

  std::vector<GridFunction> terms;
  terms.reserve(n_terms);
  GridFunction y0;
  y0.dt = t_max / steps;
  y0.values.assign(static_cast<std::size_t>(steps) + 1, 1.0);
  terms.push_back(std::move(y0));

  const double kappa = -2.0 * lambda / kSqrtPi;
  for (int k = 1; k < n_terms; ++k) {
    GridFunction next = convolve_full(Kernel::sqrt_s, terms.back());
    for (double& v : next.values) v *= kappa;
    terms.push_back(std::move(next));
  }
  return terms;
}

}  // namespace volheat

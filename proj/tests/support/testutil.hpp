#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "volheat/grid.hpp"

// Oracle helpers shared by the test binaries.  These deliberately avoid
// the library's own quadrature machinery so agreement means two
// independent routes reached the same number.
namespace testutil {

inline double adaptive_simpson_rec(const std::function<double(double)>& f,
                                   double a, double b, double fa, double fm,
                                   double fb, double whole, double tol,
                                   int depth) {
  const double m = 0.5 * (a + b);
  const double flm = f(0.5 * (a + m));
  const double frm = f(0.5 * (m + b));
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;  // Richardson-corrected
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol,
                              depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol,
                              depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double tol = 1e-13) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = a + (b - a) * (static_cast<double>(i) / (n - 1));
  return out;
}

inline double sup_diff(const std::vector<double>& a,
                       const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double sup_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (const double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Exact repeated double integral of the piecewise-linear interpolant:
//   int_0^T int_0^xi fhat(tau) dtau dxi
// On each interval the inner cumulative is quadratic, so its integral has
// the closed form C_j h + h^2 (f_j / 3 + f_{j+1} / 6).
inline double repeated_integral_exact(const volheat::GridFunction& f) {
  const double h = f.dt;
  double cum = 0.0;    // inner integral at the left node
  double total = 0.0;  // outer integral
  for (int j = 0; j + 1 < static_cast<int>(f.values.size()); ++j) {
    const double fj = f.values[j];
    const double fj1 = f.values[j + 1];
    total += cum * h + h * h * (fj / 3.0 + fj1 / 6.0);
    cum += 0.5 * h * (fj + fj1);
  }
  return total;
}

// Exact linear-kernel convolution of the same interpolant:
//   int_0^T fhat(tau) (T - tau) dtau
// assembled from per-lag kernel moments like the library does for the
// singular kernels, but with k(s) = s, where the moments are polynomial.
inline double linear_kernel_exact(const volheat::GridFunction& f) {
  const double h = f.dt;
  const int n = static_cast<int>(f.values.size()) - 1;
  double total = 0.0;
  for (int d = 1; d <= n; ++d) {
    const double a = (d - 1) * h;
    const double b = d * h;
    const double m0 = 0.5 * (b * b - a * a);
    const double m1 = (b * b * b - a * a * a) / 3.0;
    const double w_far = (m1 - a * m0) / h;
    const double w_near = (b * m0 - m1) / h;
    total += f.values[n - d] * w_far + f.values[n - d + 1] * w_near;
  }
  return total;
}

}  // namespace testutil

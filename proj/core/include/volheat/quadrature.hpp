#pragma once

#include <stdexcept>
#include <utility>

namespace volheat {

// Composite Simpson rule on [a, b] with n subintervals (n even, >= 2).
// Plain fixed-order rule; used for the smooth auxiliary integrals
// (integral boundary condition, derivative identities, heat memory term)
// where the integrand is cheap and the step count is part of the API.
template <class F>
double composite_simpson(F&& f, double a, double b, int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("composite_simpson: n must be even and >= 2");
  const double h = (b - a) / n;
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < n; i += 2) odd += f(a + h * i);
  for (int i = 2; i < n; i += 2) even += f(a + h * i);
  return (h / 3.0) * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

}  // namespace volheat

#pragma once

namespace volheat::specfun {

// Error function, odd-symmetric by construction: the value is computed at
// |x| and the sign restored, so erf(-x) == -erf(x) holds bitwise.
double erf(double x);

// Gamma(x) for x > 0.  Throws std::invalid_argument outside the domain.
double gamma(double x);

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// ln(n!) for n >= 0.  For n <= 20 the value is log of the exact integer
// factorial; beyond that it falls back to log_gamma(n + 1).
double log_factorial(int n);

// ln(m!!) for odd m >= 1, i.e. ln(1 * 3 * 5 * ... * m).  Uses
//   (2k+1)!! = (2k+1)! / (2^k k!)
// so the cost is O(1) per call regardless of m.
double log_odd_double_factorial(int m);

// Beta(x, y) = Gamma(x) Gamma(y) / Gamma(x + y) for x, y > 0, evaluated in
// log space to dodge overflow for large arguments.
double beta(double x, double y);

}  // namespace volheat::specfun

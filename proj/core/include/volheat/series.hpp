#pragma once

#include "volheat/grid.hpp"

namespace volheat {

// The model solved throughout this library:
//
//   y(t) = 1 - (2 lambda / sqrt(pi)) * int_0^t y(tau) sqrt(t - tau) dtau
//
// whose unique continuous solution on t >= 0 is the explicit series
//
//   y(t) = I(t) - sqrt(2/pi) J(t)
//   I(t) = sum_{n>=0} lambda^(2n)   t^(3n)        / (3n)!
//   J(t) = sum_{n>=0} 2^(3(2n+1)/2) lambda^(2n+1) t^(3(2n+1)/2) / (3(2n+1))!!
//
// I is even and J is odd in lambda, so both are well defined for lambda of
// either sign.  y also solves the singular third-order problem
//
//   y''' = lambda^2 y + lambda / (2 sqrt(pi)) t^(-3/2),   t > 0
//   y(0) = 1,  y'(0) = 0,  y''(1) = -lambda/sqrt(pi) + lambda^2 int_0^1 y
//
// which the odecheck module verifies numerically.

inline constexpr int kDefaultTermCap = 10000;

// Shared parameter bundle.  epsilon and h0 only matter to the bounds and
// heat modules but live here so one validated struct can flow everywhere.
struct ModelParams {
  double lambda = 1.0;  // coupling; any finite real
  double t_max = 1.0;   // horizon; > 0
  double h0 = 1.0;      // heat boundary datum scale; > 0
  double epsilon = 0.5; // contraction margin for the bounds module; in (0,1)

  void validate() const;
};

// Result of summing one truncated series.
struct SeriesEvaluation {
  double value = 0.0;
  int terms_used = 0;            // number of terms actually summed
  double last_term_magnitude = 0.0;  // |last term|, 0 if the tail vanished
};

// Each evaluator sums terms in increasing order until the current term is
// <= tol * max(1, |partial sum|) and term magnitudes have decreased for
// three consecutive terms (the series are not monotone from term one at
// large lambda * t).  Throws NumericalError if max_terms is exhausted or
// the partial sum leaves the representable range; throws
// std::invalid_argument for t < 0, tol <= 0, max_terms < 1 or non-finite
// arguments.
SeriesEvaluation eval_I(double lambda, double t, double tol,
                        int max_terms = kDefaultTermCap);
SeriesEvaluation eval_J(double lambda, double t, double tol,
                        int max_terms = kDefaultTermCap);

// y = I - sqrt(2/pi) J with both sub-series run at tol/2.  If cancellation
// between I and J leaves the combined truncation estimate above
// tol * max(1, |y|), both sub-series are re-run at a tighter tolerance so
// the reported last_term_magnitude honours the same contract as I and J.
SeriesEvaluation eval_y(double lambda, double t, double tol,
                        int max_terms = kDefaultTermCap);

// Termwise derivative of order 1..3.  Half-integer powers never vanish
// under differentiation, so every J term contributes for all orders; I
// terms with exponent < order drop out.  order 1 at t = 0 returns 0 (the
// one-sided limit); order >= 2 at t = 0 is rejected because y'' diverges
// like t^(-1/2) there.
SeriesEvaluation eval_y_derivative(double lambda, double t, int order,
                                   double tol,
                                   int max_terms = kDefaultTermCap);

// Samples eval_y on the uniform grid t_i = i * t_max / steps, i = 0..steps.
GridFunction sample_y(double lambda, double t_max, int steps, double tol,
                      int max_terms = kDefaultTermCap);

}  // namespace volheat

#include "volheat/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "volheat/errors.hpp"
#include "volheat/specfun.hpp"

namespace volheat {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kSqrt2OverPi = 0.79788456080286535588;  // sqrt(2/pi)

// Left-to-right accumulation with the shared stopping rule: stop once the
// term magnitude has decreased three times in a row AND the current term
// is below tol * max(1, |partial sum|).  The decrease streak matters: for
// large lambda*t the terms first grow by orders of magnitude, and an
// early small term (t close to a sign structure zero never happens here,
// but a small first term does) must not end the sum prematurely.
struct TermSum {
  double sum = 0.0;
  double prev_mag = std::numeric_limits<double>::quiet_NaN();
  int drops = 0;
  int terms = 0;
  double last = 0.0;
};

bool push(TermSum& s, double term, double tol) {
  s.sum += term;
  s.terms += 1;
  const double mag = std::abs(term);
  // NaN compares false, so the very first term never counts as a drop.
  s.drops = (mag < s.prev_mag) ? s.drops + 1 : 0;
  s.prev_mag = mag;
  s.last = mag;
  if (mag == 0.0) return true;  // tail underflowed to zero: done
  return s.drops >= 3 && mag <= tol * std::max(1.0, std::abs(s.sum));
}

enum class Part {
  even_part,  // I:  sum lambda^(2n) t^(3n) / (3n)!
  odd_part,   // J:  sum 2^(3(2n+1)/2) lambda^(2n+1) t^(3(2n+1)/2) / (3(2n+1))!!
};

// Sums the k-th termwise derivative of one part.  Terms are assembled in
// log space so |lambda|, t far from 1 cannot underflow intermediate
// factors; only the final exp can overflow, which the finiteness check
// converts into NumericalError.  Caller handles lambda == 0 / t == 0.
SeriesEvaluation sum_part(Part part, double lambda, double t, int k,
                          double tol, int max_terms) {
  const double ll = std::log(std::abs(lambda));
  const double lt = std::log(t);
  TermSum s;
  int n = (part == Part::even_part && k > 0) ? 1 : 0;  // t^(3n) with 3n < k differentiates away
  for (;; ++n) {
    if (s.terms >= max_terms)
      throw NumericalError("series: term cap reached before convergence");
    double term;
    if (part == Part::even_part) {
      double fac = 1.0;  // prod_{j<k} (3n - j), an exact small integer
      for (int j = 0; j < k; ++j) fac *= 3.0 * n - j;
      const double lmag = 2.0 * n * ll + (3.0 * n - k) * lt -
                          specfun::log_factorial(3 * n) + std::log(fac);
      term = std::exp(lmag);
    } else {
      const int m = 6 * n + 3;
      const double e = 0.5 * m;  // half-integer exponent, never zero under d/dt
      double fac = 1.0;          // prod_{j<k} (e - j); negative only for n=0, k=3
      for (int j = 0; j < k; ++j) fac *= e - j;
      double sign = lambda < 0.0 ? -1.0 : 1.0;  // lambda^(2n+1) keeps lambda's sign
      if (fac < 0.0) {
        sign = -sign;
        fac = -fac;
      }
      const double lmag = e * kLn2 + (2.0 * n + 1.0) * ll + (e - k) * lt -
                          specfun::log_odd_double_factorial(m) + std::log(fac);
      term = sign * std::exp(lmag);
    }
    const bool done = push(s, term, tol);
    if (!std::isfinite(s.sum))
      throw NumericalError("series: partial sum left the finite range");
    if (done) break;
  }
  return {s.sum, s.terms, s.last};
}

void check_args(double lambda, double t, double tol, int max_terms) {
  if (!std::isfinite(lambda))
    throw std::invalid_argument("series: lambda must be finite");
  if (!(t >= 0.0) || !std::isfinite(t))
    throw std::invalid_argument("series: t must be finite and >= 0");
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw std::invalid_argument("series: tol must be positive and finite");
  if (max_terms < 1)
    throw std::invalid_argument("series: max_terms must be >= 1");
}

// y^(k) = I^(k) - sqrt(2/pi) J^(k), both parts at tol/2.  When I and J
// nearly cancel (large positive lambda near the zero of y) the combined
// value can be much smaller than either part, so the tol/2 stopping no
// longer guarantees last <= tol * max(1, |y|); in that case re-run both
// parts tighter until the reported truncation honours the contract.
SeriesEvaluation combine(double lambda, double t, int k, double tol,
                         int max_terms) {
  double sub = 0.5 * tol;
  SeriesEvaluation ev{}, od{};
  double value = 0.0;
  double last = 0.0;
  int terms = 0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    ev = sum_part(Part::even_part, lambda, t, k, sub, max_terms);
    od = sum_part(Part::odd_part, lambda, t, k, sub, max_terms);
    value = ev.value - kSqrt2OverPi * od.value;
    last = std::max(ev.last_term_magnitude,
                    kSqrt2OverPi * od.last_term_magnitude);
    terms = ev.terms_used + od.terms_used;
    if (last <= tol * std::max(1.0, std::abs(value))) break;
    sub *= 0.125;
  }
  return {value, terms, last};
}

}  // namespace

void ModelParams::validate() const {
  if (!std::isfinite(lambda))
    throw std::invalid_argument("params: lambda must be finite");
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw std::invalid_argument("params: t_max must be positive and finite");
  if (!(h0 > 0.0) || !std::isfinite(h0))
    throw std::invalid_argument("params: h0 must be positive and finite");
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw std::invalid_argument("params: epsilon must lie in (0, 1)");
}

SeriesEvaluation eval_I(double lambda, double t, double tol, int max_terms) {
  check_args(lambda, t, tol, max_terms);
  if (lambda == 0.0 || t == 0.0) return {1.0, 1, 0.0};
  return sum_part(Part::even_part, lambda, t, 0, tol, max_terms);
}

SeriesEvaluation eval_J(double lambda, double t, double tol, int max_terms) {
  check_args(lambda, t, tol, max_terms);
  if (lambda == 0.0 || t == 0.0) return {0.0, 1, 0.0};
  return sum_part(Part::odd_part, lambda, t, 0, tol, max_terms);
}

SeriesEvaluation eval_y(double lambda, double t, double tol, int max_terms) {
  check_args(lambda, t, tol, max_terms);
  if (lambda == 0.0 || t == 0.0) return {1.0, 2, 0.0};
  return combine(lambda, t, 0, tol, max_terms);
}

SeriesEvaluation eval_y_derivative(double lambda, double t, int order,
                                   double tol, int max_terms) {
  check_args(lambda, t, tol, max_terms);
  if (order < 1 || order > 3)
    throw std::invalid_argument("series: derivative order must be 1, 2 or 3");
  if (t == 0.0) {
    if (order == 1) return {0.0, 1, 0.0};  // y' ~ -(2 lambda/sqrt(pi)) sqrt(t) -> 0
    throw std::invalid_argument(
        "series: derivatives of order >= 2 diverge at t = 0");
  }
  if (lambda == 0.0) return {0.0, 1, 0.0};  // y is identically 1
  return combine(lambda, t, order, tol, max_terms);
}

GridFunction sample_y(double lambda, double t_max, int steps, double tol,
                      int max_terms) {
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw std::invalid_argument("series: t_max must be positive and finite");
  if (steps < 1) throw std::invalid_argument("series: steps must be >= 1");
  GridFunction g;
  g.dt = t_max / steps;
  g.values.resize(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i)
    g.values[i] = eval_y(lambda, g.dt * i, tol, max_terms).value;
  return g;
}

}  // namespace volheat

#include "volheat/specfun.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace volheat::specfun {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

// n! fits in uint64 exactly up to n = 20.
constexpr std::array<std::uint64_t, 21> kFactorials = [] {
  std::array<std::uint64_t, 21> f{};
  f[0] = 1;
  for (int n = 1; n <= 20; ++n) f[n] = f[n - 1] * static_cast<std::uint64_t>(n);
  return f;
}();

}  // namespace

double erf(double x) {
  if (std::isnan(x)) throw std::invalid_argument("erf: nan argument");
  const double mag = std::erf(std::fabs(x));
  return x < 0.0 ? -mag : mag;
}

double gamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("gamma: requires x > 0");
  return std::tgamma(x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("log_gamma: requires x > 0");
  return std::lgamma(x);
}

double log_factorial(int n) {
  if (n < 0) throw std::invalid_argument("log_factorial: requires n >= 0");
  if (n <= 20) return std::log(static_cast<double>(kFactorials[n]));
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_odd_double_factorial(int m) {
  if (m < 1 || m % 2 == 0)
    throw std::invalid_argument("log_odd_double_factorial: requires odd m >= 1");
  // m = 2k+1:  (2k+1)!! = (2k+1)! / (2^k k!)
  const double k = (m - 1) / 2;
  return std::lgamma(static_cast<double>(m) + 1.0) - k * kLn2 -
         std::lgamma(k + 1.0);
}

double beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0))
    throw std::invalid_argument("beta: requires x, y > 0");
  return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

}  // namespace volheat::specfun

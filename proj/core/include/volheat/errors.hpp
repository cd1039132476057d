#pragma once

#include <stdexcept>
#include <string>

namespace volheat {

// Thrown when an algorithm cannot deliver a trustworthy number: series
// overflow or term-cap exhaustion, a vanishing marching divisor, a
// non-finite partial result.  Argument/domain violations use
// std::invalid_argument instead, so callers can tell "you asked wrong"
// from "the computation broke" by exception type.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace volheat

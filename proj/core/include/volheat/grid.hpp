#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace volheat {

// A real-valued function sampled on the uniform grid t_i = i * dt,
// i = 0 .. values.size()-1.  All marching/convolution routines consume and
// produce this shape.
struct GridFunction {
  double dt = 0.0;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  int last_index() const { return static_cast<int>(values.size()) - 1; }
  double t_at(int i) const { return dt * i; }
  double back() const { return values.back(); }
};

inline void validate_grid(const GridFunction& f) {
  if (!(f.dt > 0.0) || !std::isfinite(f.dt))
    throw std::invalid_argument("grid: dt must be positive and finite");
  if (f.values.size() < 2)
    throw std::invalid_argument("grid: need at least two samples");
}

}  // namespace volheat

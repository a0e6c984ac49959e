#pragma once

#include <span>
#include <vector>

namespace eeganx {

// Natural cubic spline through (xs, ys), xs strictly increasing.
// Two knots degrade to a line, one knot to a constant.
class CubicSpline {
public:
  CubicSpline(std::span<const double> xs, std::span<const double> ys);

  double operator()(double x) const;

  // evaluate at 0, 1, ..., n-1
  std::vector<double> sample_grid(std::size_t n) const;

private:
  std::vector<double> x_, y_, m_;  // knots and second derivatives
};

}  // namespace eeganx

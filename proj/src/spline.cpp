#include "eeganx/spline.hpp"

#include <algorithm>

#include "eeganx/error.hpp"

namespace eeganx {

CubicSpline::CubicSpline(std::span<const double> xs, std::span<const double> ys)
    : x_(xs.begin(), xs.end()), y_(ys.begin(), ys.end()) {
  const std::size_t n = x_.size();
  if (n == 0 || n != y_.size())
    throw Error(errc::bad_argument, "spline needs matching non-empty knot lists");
  for (std::size_t i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1]))
      throw Error(errc::bad_argument, "spline knots must be strictly increasing");

  m_.assign(n, 0.0);
  if (n < 3) return;  // natural spline with < 3 knots has zero curvature

  // tridiagonal system for the second derivatives (Thomas algorithm)
  std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
  diag[0] = 1.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = x_[i] - x_[i - 1];
    const double h1 = x_[i + 1] - x_[i];
    diag[i] = 2.0 * (h0 + h1);
    upper[i] = h1;
    rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
  }
  diag[n - 1] = 1.0;

  // forward sweep (lower diagonal of row i is h0 = x_[i]-x_[i-1])
  for (std::size_t i = 2; i + 1 < n; ++i) {
    const double lower = x_[i] - x_[i - 1];
    const double w = lower / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(n) - 2; i >= 1; --i) {
    const auto u = static_cast<std::size_t>(i);
    m_[u] = (rhs[u] - upper[u] * m_[u + 1]) / diag[u];
  }
}

double CubicSpline::operator()(double x) const {
  const std::size_t n = x_.size();
  if (n == 1) return y_[0];

  // clamp to the boundary segments rather than extrapolating wildly
  std::size_t i;
  if (x <= x_[0]) {
    i = 0;
  } else if (x >= x_[n - 1]) {
    i = n - 2;
  } else {
    i = static_cast<std::size_t>(
            std::upper_bound(x_.begin(), x_.end(), x) - x_.begin()) - 1;
  }
  const double h = x_[i + 1] - x_[i];
  const double a = (x_[i + 1] - x) / h;
  const double b = (x - x_[i]) / h;
  return a * y_[i] + b * y_[i + 1] +
         ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * (h * h) / 6.0;
}

std::vector<double> CubicSpline::sample_grid(std::size_t n) const {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (*this)(static_cast<double>(i));
  return out;
}

}  // namespace eeganx

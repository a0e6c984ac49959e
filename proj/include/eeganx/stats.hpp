#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "eeganx/error.hpp"

namespace eeganx {

inline double mean(std::span<const double> x) {
  if (x.empty()) return 0.0;
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

inline double mean_square(std::span<const double> x) {
  if (x.empty()) return 0.0;
  double s = 0.0;
  for (double v : x) s += v * v;
  return s / static_cast<double>(x.size());
}

// population variance when sample=false, n-1 denominator when sample=true
inline double variance(std::span<const double> x, bool sample = true) {
  const std::size_t n = x.size();
  if (n < 2) return 0.0;
  const double m = mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(sample ? n - 1 : n);
}

inline double stddev(std::span<const double> x, bool sample = true) {
  return std::sqrt(variance(x, sample));
}

// adjusted Fisher-Pearson coefficient; 0 for constant input
inline double skewness(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 3) return 0.0;
  const double m = mean(x);
  double m2 = 0.0, m3 = 0.0;
  for (double v : x) {
    const double d = v - m;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= static_cast<double>(n);
  m3 /= static_cast<double>(n);
  if (m2 <= 0.0) return 0.0;
  const double g1 = m3 / std::pow(m2, 1.5);
  const double nd = static_cast<double>(n);
  return g1 * std::sqrt(nd * (nd - 1.0)) / (nd - 2.0);
}

// excess kurtosis with the standard bias adjustment; 0 for constant input
inline double kurtosis_excess(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 4) return 0.0;
  const double m = mean(x);
  double m2 = 0.0, m4 = 0.0;
  for (double v : x) {
    const double d = v - m;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  m2 /= static_cast<double>(n);
  m4 /= static_cast<double>(n);
  if (m2 <= 0.0) return 0.0;
  const double nd = static_cast<double>(n);
  const double g2 = m4 / (m2 * m2) - 3.0;
  return ((nd - 1.0) / ((nd - 2.0) * (nd - 3.0))) * ((nd + 1.0) * g2 + 6.0);
}

// linear-interpolation percentile, q in [0,100]
inline double percentile(std::span<const double> x, double q) {
  if (x.empty()) throw Error(errc::bad_argument, "percentile of empty sequence");
  std::vector<double> s(x.begin(), x.end());
  std::sort(s.begin(), s.end());
  if (s.size() == 1) return s[0];
  const double pos = q / 100.0 * static_cast<double>(s.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  const double w = pos - static_cast<double>(lo);
  return s[lo] * (1.0 - w) + s[hi] * w;
}

inline double median(std::span<const double> x) { return percentile(x, 50.0); }

inline double pearson_correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2)
    throw Error(errc::bad_argument, "correlation needs two equal-length sequences");
  const double ma = mean(a), mb = mean(b);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma, db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa <= 0.0 || sbb <= 0.0)
    throw Error(errc::degenerate, "correlation of a constant sequence");
  return sab / std::sqrt(saa * sbb);
}

inline bool all_finite(std::span<const double> x) {
  for (double v : x)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace eeganx

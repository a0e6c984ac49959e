#include "eeganx/features/time_features.hpp"

#include <cmath>
#include <string>

namespace eeganx {

namespace {

double mean_square_of(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s / static_cast<double>(x.size());
}

double mean_square_diff(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double d = x[i + 1] - x[i];
    s += d * d;
  }
  return s / static_cast<double>(x.size() - 1);
}

double variance_pop(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m += v;
  m /= static_cast<double>(x.size());
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size());
}

}  // namespace

HjorthParams hjorth(std::span<const double> x, bool classical) {
  const std::size_t n = x.size();
  if (n < 3)
    throw Error(errc::too_short, "Hjorth parameters need at least 3 samples");

  std::vector<double> dx(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) dx[i] = x[i + 1] - x[i];
  std::vector<double> ddx(n - 2);
  for (std::size_t i = 0; i + 1 < dx.size(); ++i) ddx[i] = dx[i + 1] - dx[i];

  HjorthParams p;
  if (!classical) {
    p.activity = mean_square_of(x);
    if (p.activity <= 0.0)
      throw Error(errc::degenerate, "degenerate signal (zero activity)");
    const double msd = mean_square_diff(x);
    p.mobility = msd / p.activity;
    if (msd <= 0.0)
      throw Error(errc::degenerate, "degenerate signal (constant input)");
    const double msdd =
        ddx.empty() ? 0.0 : [&] {
          double s = 0.0;
          for (double v : ddx) s += v * v;
          return s / static_cast<double>(ddx.size());
        }();
    const double inner = msdd / msd - msd / p.activity;
    p.complexity = std::sqrt(std::max(0.0, inner));
  } else {
    p.activity = variance_pop(x);
    if (p.activity <= 0.0)
      throw Error(errc::degenerate, "degenerate signal (zero activity)");
    const double var_dx = variance_pop(dx);
    if (var_dx <= 0.0)
      throw Error(errc::degenerate, "degenerate signal (constant input)");
    p.mobility = std::sqrt(var_dx / p.activity);
    const double var_ddx = variance_pop(ddx);
    const double mob_dx = std::sqrt(var_ddx / var_dx);
    p.complexity = mob_dx / p.mobility;
  }
  return p;
}

FeatureVector hjorth_vector(const Trial& trial, bool classical) {
  const auto idx = montage_indices(trial);
  const auto data = trial.valid_data();

  FeatureVector fv;
  fv.group = FeatureGroup::time;
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const std::string& name = kEegChannels[c];
    HjorthParams p;
    try {
      p = hjorth(data[idx[c]], classical);
    } catch (const Error& e) {
      throw Error(e.code(), "channel " + name + ": " + e.what());
    }
    fv.push("hjorth.activity." + name, p.activity);
    fv.push("hjorth.mobility." + name, p.mobility);
    fv.push("hjorth.complexity." + name, p.complexity);
  }
  return fv;
}

int default_higuchi_kmax(std::size_t n) { return n >= 5 * 128 ? 16 : 8; }

double higuchi_fd(std::span<const double> x, const HiguchiConfig& cfg) {
  const std::size_t n = x.size();
  const int k_max = cfg.k_max;
  if (k_max < 2) throw Error(errc::bad_argument, "k_max must be >= 2");
  if (n < 2 * static_cast<std::size_t>(k_max))
    throw Error(errc::too_short, "Higuchi FD needs at least 2*k_max samples");

  std::vector<double> ln_k, ln_l;
  ln_k.reserve(static_cast<std::size_t>(k_max));
  ln_l.reserve(static_cast<std::size_t>(k_max));
  const double nd = static_cast<double>(n);

  for (int k = 1; k <= k_max; ++k) {
    double l_sum = 0.0;
    for (int m = 1; m <= k; ++m) {
      const auto steps = static_cast<std::size_t>((nd - m) / k);
      if (steps == 0) continue;
      double acc = 0.0;
      for (std::size_t i = 1; i <= steps; ++i) {
        const std::size_t hi = static_cast<std::size_t>(m - 1) + i * static_cast<std::size_t>(k);
        const std::size_t lo = hi - static_cast<std::size_t>(k);
        acc += std::abs(x[hi] - x[lo]);
      }
      const double norm = (nd - 1.0) / (static_cast<double>(steps) * k);
      l_sum += acc * norm / k;
    }
    const double l_k = l_sum / k;  // average of L_m(k) over the k offsets
    if (!(l_k > 0.0))
      throw Error(errc::degenerate, "constant signal: curve length is zero");
    ln_k.push_back(std::log(static_cast<double>(k)));
    ln_l.push_back(std::log(l_k));
  }

  // least squares over k = 1..k_max, equally weighted; D is the negated slope
  const double count = static_cast<double>(ln_k.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < ln_k.size(); ++i) {
    sx += ln_k[i];
    sy += ln_l[i];
    sxx += ln_k[i] * ln_k[i];
    sxy += ln_k[i] * ln_l[i];
  }
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  return -slope;
}

FeatureVector higuchi_vector(const Trial& trial) {
  const auto idx = montage_indices(trial);
  const auto data = trial.valid_data();

  FeatureVector fv;
  fv.group = FeatureGroup::time;
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const std::string& name = kEegChannels[c];
    HiguchiConfig cfg{default_higuchi_kmax(data[idx[c]].size())};
    double d = 0.0;
    try {
      d = higuchi_fd(data[idx[c]], cfg);
    } catch (const Error& e) {
      throw Error(e.code(), "channel " + name + ": " + e.what());
    }
    fv.push("hfd." + name, d);
  }
  return fv;
}

}  // namespace eeganx

#include "eeganx/features/hht.hpp"

#include <algorithm>
#include <cmath>

#include "eeganx/fft.hpp"
#include "eeganx/spline.hpp"

namespace eeganx {

namespace {

struct ExtremaLists {
  std::vector<double> max_t, max_v, min_t, min_v;
};

ExtremaLists find_extrema(std::span<const double> x) {
  ExtremaLists e;
  const std::size_t n = x.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (x[i] > x[i - 1] && x[i] >= x[i + 1]) {
      // flat-topped peaks count once, at their left edge
      e.max_t.push_back(static_cast<double>(i));
      e.max_v.push_back(x[i]);
    } else if (x[i] < x[i - 1] && x[i] <= x[i + 1]) {
      e.min_t.push_back(static_cast<double>(i));
      e.min_v.push_back(x[i]);
    }
  }
  return e;
}

std::size_t zero_crossings(std::span<const double> x) {
  std::size_t z = 0;
  for (std::size_t i = 1; i < x.size(); ++i)
    if ((x[i - 1] < 0.0 && x[i] >= 0.0) || (x[i - 1] > 0.0 && x[i] <= 0.0)) ++z;
  return z;
}

// Mirror the two first/last extrema past the signal ends so the envelope
// spline has support on the full [0, n-1] range.
void extend_extrema(std::vector<double>& t, std::vector<double>& v, std::size_t n) {
  const double left_edge = 0.0;
  const double right_edge = static_cast<double>(n - 1);
  std::vector<double> nt, nv;
  const std::size_t mirror = std::min<std::size_t>(2, t.size());
  for (std::size_t i = 0; i < mirror; ++i) {
    nt.push_back(2.0 * left_edge - t[i]);
    nv.push_back(v[i]);
  }
  std::reverse(nt.begin(), nt.end());
  std::reverse(nv.begin(), nv.end());
  nt.insert(nt.end(), t.begin(), t.end());
  nv.insert(nv.end(), v.begin(), v.end());
  for (std::size_t i = 0; i < mirror; ++i) {
    const std::size_t j = t.size() - 1 - i;
    nt.push_back(2.0 * right_edge - t[j]);
    nv.push_back(v[j]);
  }
  t = std::move(nt);
  v = std::move(nv);
}

// mean of the upper and lower spline envelopes; false when there are not
// enough extrema to build them
bool envelope_mean(std::span<const double> x, std::vector<double>& mean_env) {
  ExtremaLists e = find_extrema(x);
  if (e.max_t.size() < 2 || e.min_t.size() < 2) return false;
  extend_extrema(e.max_t, e.max_v, x.size());
  extend_extrema(e.min_t, e.min_v, x.size());
  const CubicSpline upper(e.max_t, e.max_v);
  const CubicSpline lower(e.min_t, e.min_v);
  mean_env.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = static_cast<double>(i);
    mean_env[i] = 0.5 * (upper(t) + lower(t));
  }
  return true;
}

}  // namespace

std::vector<double> ImfDecomposition::reconstruct() const {
  std::vector<double> out = residual;
  for (const auto& imf : imfs)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += imf[i];
  return out;
}

ImfDecomposition emd(std::span<const double> x, const EmdConfig& cfg) {
  const std::size_t n = x.size();
  if (n < 16) throw Error(errc::too_short, "EMD needs at least 16 samples");
  {
    const double first = x[0];
    bool constant = true;
    for (double v : x)
      if (v != first) {
        constant = false;
        break;
      }
    if (constant) throw Error(errc::degenerate, "EMD of a constant signal");
  }

  ImfDecomposition dec;
  std::vector<double> residual(x.begin(), x.end());

  for (int k = 0; k < cfg.max_imfs; ++k) {
    const ExtremaLists ext = find_extrema(residual);
    // monotone-ish residual: not enough extrema for both envelopes
    if (ext.max_t.size() < 2 || ext.min_t.size() < 2) break;

    std::vector<double> h = residual;
    std::vector<double> mean_env;
    for (int sift = 0; sift < cfg.max_sifts; ++sift) {
      if (!envelope_mean(h, mean_env)) break;
      double sd_num = 0.0, sd_den = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double next = h[i] - mean_env[i];
        sd_num += (h[i] - next) * (h[i] - next);
        sd_den += h[i] * h[i];
        h[i] = next;
      }
      if (sd_den > 0.0 && sd_num / sd_den < cfg.sd_threshold) break;
    }

    for (std::size_t i = 0; i < n; ++i) residual[i] -= h[i];
    dec.imfs.push_back(std::move(h));
  }

  if (dec.imfs.empty())
    throw Error(errc::degenerate, "signal has fewer than 2 extrema");
  dec.residual = std::move(residual);
  return dec;
}

std::vector<double> imf_energy_density(const ImfDecomposition& dec,
                                       double edge_fraction) {
  if (dec.imfs.empty()) throw Error(errc::bad_argument, "empty decomposition");
  std::vector<double> ied;
  ied.reserve(dec.count());
  for (const auto& imf : dec.imfs) {
    if (imf.size() < 8)
      throw Error(errc::too_short, "IMF too short for the Hilbert envelope");
    const auto env = hilbert_envelope(imf);
    const auto margin = static_cast<std::size_t>(
        std::floor(edge_fraction * static_cast<double>(env.size())));
    const std::size_t lo = margin;
    const std::size_t hi = env.size() - margin;
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += env[i] * env[i];
    ied.push_back(acc / static_cast<double>(hi - lo));
  }
  return ied;
}

std::size_t hht_feature_dim(double duration_s) {
  if (duration_s >= 15.0) return 10;
  if (duration_s >= 5.0) return 9;
  return 7;
}

FeatureVector hht_vector(const Trial& trial, const EmdConfig& cfg) {
  const auto idx = montage_indices(trial);
  const auto data = trial.valid_data();
  const std::size_t dim = hht_feature_dim(trial.duration_s);

  std::vector<double> acc(dim, 0.0);
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const auto dec = emd(data[idx[c]], cfg);
    const auto ied = imf_energy_density(dec);
    for (std::size_t k = 0; k < dim && k < ied.size(); ++k) acc[k] += ied[k];
  }

  FeatureVector fv;
  fv.group = FeatureGroup::time_frequency;
  const double channels = static_cast<double>(idx.size());
  for (std::size_t k = 0; k < dim; ++k)
    fv.push("hht.ied.imf" + std::to_string(k + 1), acc[k] / channels);
  return fv;
}

}  // namespace eeganx

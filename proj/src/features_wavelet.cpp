#include "eeganx/features/wavelet_features.hpp"

#include <cmath>
#include <string>

namespace eeganx {

namespace {

double mean_sq(std::span<const double> v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double c : v) s += c * c;
  return s / static_cast<double>(v.size());
}

const std::vector<double>& detail_level(const Dwt1D& dec, int level) {
  if (level < 1 || level > dec.levels())
    throw Error(errc::bad_argument,
                "decomposition has no detail level " + std::to_string(level));
  return dec.details[static_cast<std::size_t>(level - 1)];
}

}  // namespace

double dwt_band_power(const Dwt1D& dec, Band band) {
  return mean_sq(detail_level(dec, band_dwt_level(band)));
}

double dwt_delta_power(const Dwt1D& dec) { return mean_sq(dec.approx); }

double dwt_band_rms(const Dwt1D& dec, Band band, RmsMode mode) {
  const int j = band_dwt_level(band);
  if (mode == RmsMode::per_level) {
    const auto& d = detail_level(dec, j);
    return std::sqrt(mean_sq(d));
  }
  double sq = 0.0;
  std::size_t count = 0;
  for (int i = 1; i <= j; ++i) {
    const auto& d = detail_level(dec, i);
    for (double c : d) sq += c * c;
    count += d.size();
  }
  if (count == 0) throw Error(errc::degenerate, "empty detail levels");
  return std::sqrt(sq / static_cast<double>(count));
}

FeatureVector dwt_power_vector(const Trial& trial, bool include_delta) {
  const auto idx = montage_indices(trial);
  const auto data = trial.valid_data();

  FeatureVector fv;
  fv.group = FeatureGroup::time_frequency;
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const std::string& name = kEegChannels[c];
    const Dwt1D dec = dwt_db5(data[idx[c]]);
    for (Band b : kBands)
      fv.push("dwt.power." + std::string(to_string(b)) + "." + name,
              dwt_band_power(dec, b));
    if (include_delta) fv.push("dwt.power.delta." + name, dwt_delta_power(dec));
  }
  return fv;
}

FeatureVector dwt_rms_vector(const Trial& trial, RmsMode mode) {
  const auto idx = montage_indices(trial);
  const auto data = trial.valid_data();

  FeatureVector fv;
  fv.group = FeatureGroup::time_frequency;
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const std::string& name = kEegChannels[c];
    const Dwt1D dec = dwt_db5(data[idx[c]]);
    for (Band b : kBands)
      fv.push("dwt.rms." + std::string(to_string(b)) + "." + name,
              dwt_band_rms(dec, b, mode));
  }
  return fv;
}

FeatureVector asymmetry_index(const Trial& trial, const AsymmetryConfig& cfg) {
  if (!(cfg.epoch_s > 0.0) || cfg.overlap < 0.0 || cfg.overlap >= 1.0)
    throw Error(errc::bad_argument, "bad asymmetry epoch configuration");
  const auto data = trial.valid_data();
  const std::size_t n = data.front().size();
  auto epoch_len = static_cast<std::size_t>(std::llround(cfg.epoch_s * trial.sample_rate));
  if (epoch_len < 32) epoch_len = 32;  // D4 needs a workable window
  if (epoch_len > n) epoch_len = n;
  auto hop = static_cast<std::size_t>(
      std::llround(static_cast<double>(epoch_len) * (1.0 - cfg.overlap)));
  if (hop == 0) hop = 1;

  // alpha (D4) power of one channel over one epoch
  auto alpha_power = [&](std::size_t ch, std::size_t start) {
    std::span<const double> seg(data[ch].data() + start, epoch_len);
    return dwt_band_power(dwt_db5(seg, 4), Band::alpha);
  };

  FeatureVector fv;
  fv.group = FeatureGroup::frequency;
  for (const auto& pair : kAsymmetryPairs) {
    const std::size_t li = channel_index(trial, pair.left);
    const std::size_t ri = channel_index(trial, pair.right);
    double acc = 0.0;
    std::size_t epochs = 0;
    for (std::size_t start = 0; start + epoch_len <= n; start += hop) {
      const double pl = alpha_power(li, start);
      const double pr = alpha_power(ri, start);
      if (!(pl > 0.0) || !(pr > 0.0))
        throw Error(errc::degenerate,
                    std::string("zero alpha power in pair ") + pair.left + "/" + pair.right +
                        " at epoch " + std::to_string(epochs));
      acc += std::log(pl) - std::log(pr);
      ++epochs;
    }
    if (epochs == 0)
      throw Error(errc::too_short, "trial shorter than one asymmetry epoch");
    fv.push(std::string("asym.") + pair.left + "_" + pair.right,
            acc / static_cast<double>(epochs));
  }
  return fv;
}

}  // namespace eeganx

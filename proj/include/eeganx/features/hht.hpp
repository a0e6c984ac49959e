#pragma once

#include <span>
#include <vector>

#include "eeganx/features/common.hpp"
#include "eeganx/recording.hpp"

namespace eeganx {

struct EmdConfig {
  double sd_threshold = 0.2;  // Cauchy-style stop between successive sifts
  int max_sifts = 10;
  int max_imfs = 12;
};

struct ImfDecomposition {
  std::vector<std::vector<double>> imfs;  // fastest oscillation first
  std::vector<double> residual;

  std::size_t count() const { return imfs.size(); }
  // sum of IMFs plus residual; equals the input up to float roundoff
  std::vector<double> reconstruct() const;
};

// Sifting with cubic-spline envelopes through the local extrema; extraction
// stops when the residual is monotone or max_imfs is reached.
ImfDecomposition emd(std::span<const double> x, const EmdConfig& cfg = {});

// instantaneous energy density: mean squared Hilbert envelope per IMF,
// excluding edge_fraction of samples at each end
std::vector<double> imf_energy_density(const ImfDecomposition& dec,
                                       double edge_fraction = 0.05);

// number of retained IMF slots per trial duration (15 s / 5 s / 1 s)
std::size_t hht_feature_dim(double duration_s);

// per-IMF energy density averaged across the montage channels, padded or
// truncated to the configured dimension for the trial duration
FeatureVector hht_vector(const Trial& trial, const EmdConfig& cfg = {});

}  // namespace eeganx

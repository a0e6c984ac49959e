#pragma once

#include <span>

#include "eeganx/dwt.hpp"
#include "eeganx/features/common.hpp"
#include "eeganx/recording.hpp"

namespace eeganx {

// mean of squared coefficients at the band's decomposition level
double dwt_band_power(const Dwt1D& dec, Band band);

// delta band lives in the A5 approximation; off the default feature path
// because the 4-45 Hz front-end removes it
double dwt_delta_power(const Dwt1D& dec);

enum class RmsMode {
  cumulative,  // sums run over levels 1..j, as the printed equation reads
  per_level,   // only the band's own detail level
};

double dwt_band_rms(const Dwt1D& dec, Band band, RmsMode mode = RmsMode::cumulative);

// 4 bands x 14 channels = 56 features, channel-major (all bands of AF3 first)
FeatureVector dwt_power_vector(const Trial& trial, bool include_delta = false);
FeatureVector dwt_rms_vector(const Trial& trial, RmsMode mode = RmsMode::cumulative);

struct AsymmetryConfig {
  double epoch_s = 1.0;     // recommended 1-2 s epochs
  double overlap = 0.5;     // fraction of the epoch shared with its neighbor
};

// ln(alpha power, left) - ln(alpha power, right) averaged over overlapping
// epochs; alpha power comes from the D4 detail level. Seven values, one per
// homologous electrode pair.
FeatureVector asymmetry_index(const Trial& trial, const AsymmetryConfig& cfg = {});

}  // namespace eeganx

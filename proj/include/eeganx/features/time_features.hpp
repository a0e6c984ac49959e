#pragma once

#include <span>

#include "eeganx/features/common.hpp"
#include "eeganx/recording.hpp"

namespace eeganx {

struct HjorthParams {
  double activity = 0.0;    // mean square of the signal
  double mobility = 0.0;    // mean square of first differences over activity
  double complexity = 0.0;  // sqrt of the nested difference ratio
};

// Literal moment-ratio form: activity is the mean of squares (not the
// mean-removed variance) and mobility is a plain ratio of mean squares.
// classical=true switches to variance-based parameters with square roots.
HjorthParams hjorth(std::span<const double> x, bool classical = false);

// [activity, mobility, complexity] per montage channel, dimension 42
FeatureVector hjorth_vector(const Trial& trial, bool classical = false);

struct HiguchiConfig {
  int k_max = 8;  // 8 suits 1 s (128-sample) windows, 16 suits >= 5 s
};

int default_higuchi_kmax(std::size_t n);

// curve-length fractal dimension: negated slope of ln L(k) vs ln k
double higuchi_fd(std::span<const double> x, const HiguchiConfig& cfg);

// one dimension per montage channel, k_max keyed to the trial length
FeatureVector higuchi_vector(const Trial& trial);

}  // namespace eeganx

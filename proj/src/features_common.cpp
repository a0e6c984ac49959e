#include "eeganx/features/common.hpp"

#include <algorithm>

namespace eeganx {

const char* to_string(FeatureGroup g) {
  switch (g) {
    case FeatureGroup::time: return "time";
    case FeatureGroup::frequency: return "frequency";
    case FeatureGroup::time_frequency: return "time_frequency";
    case FeatureGroup::qeeg: return "qeeg";
  }
  return "?";
}

FeatureGroup feature_group_from_string(const std::string& s) {
  if (s == "time") return FeatureGroup::time;
  if (s == "frequency") return FeatureGroup::frequency;
  if (s == "time_frequency") return FeatureGroup::time_frequency;
  if (s == "qeeg") return FeatureGroup::qeeg;
  throw Error(errc::bad_argument, "unknown feature group: " + s);
}

const char* to_string(Band b) {
  switch (b) {
    case Band::theta: return "theta";
    case Band::alpha: return "alpha";
    case Band::beta: return "beta";
    case Band::gamma: return "gamma";
  }
  return "?";
}

double band_low_hz(Band b) {
  switch (b) {
    case Band::theta: return 4.0;
    case Band::alpha: return 8.0;
    case Band::beta: return 13.0;
    case Band::gamma: return 32.0;
  }
  return 0.0;
}

double band_high_hz(Band b) {
  switch (b) {
    case Band::theta: return 8.0;
    case Band::alpha: return 13.0;
    case Band::beta: return 32.0;
    case Band::gamma: return 64.0;
  }
  return 0.0;
}

int band_dwt_level(Band b) {
  switch (b) {
    case Band::theta: return 5;
    case Band::alpha: return 4;
    case Band::beta: return 3;
    case Band::gamma: return 2;
  }
  return 0;
}

std::size_t channel_index(const Trial& trial, const std::string& name) {
  const auto it = std::find(trial.channels.begin(), trial.channels.end(), name);
  if (it == trial.channels.end())
    throw Error(errc::bad_argument, "trial is missing channel " + name);
  return static_cast<std::size_t>(it - trial.channels.begin());
}

std::vector<std::size_t> montage_indices(const Trial& trial) {
  std::size_t eeg_count = 0;
  for (const auto& name : trial.channels)
    if (is_eeg_channel(name)) ++eeg_count;
  if (eeg_count != kEegChannels.size())
    throw Error(errc::bad_argument,
                "expected 14 channels, trial has " + std::to_string(eeg_count) +
                    " montage channels");
  std::vector<std::size_t> idx;
  idx.reserve(kEegChannels.size());
  for (const char* name : kEegChannels) idx.push_back(channel_index(trial, name));
  return idx;
}

}  // namespace eeganx

#pragma once

#include <array>
#include <string>
#include <vector>

#include "eeganx/error.hpp"
#include "eeganx/recording.hpp"

namespace eeganx {

enum class FeatureGroup { time, frequency, time_frequency, qeeg };

const char* to_string(FeatureGroup g);
FeatureGroup feature_group_from_string(const std::string& s);

struct FeatureVector {
  std::vector<std::string> names;
  std::vector<double> values;
  FeatureGroup group = FeatureGroup::time;

  std::size_t size() const { return values.size(); }
  void push(std::string name, double value) {
    names.push_back(std::move(name));
    values.push_back(value);
  }
  void append(const FeatureVector& other) {
    names.insert(names.end(), other.names.begin(), other.names.end());
    values.insert(values.end(), other.values.begin(), other.values.end());
  }
};

// canonical EEG bands after the 4-45 Hz front-end filter; delta (1-4 Hz,
// approximation level) is excluded by default
enum class Band { theta, alpha, beta, gamma };

inline constexpr std::array<Band, 4> kBands = {Band::theta, Band::alpha, Band::beta,
                                               Band::gamma};

const char* to_string(Band b);
double band_low_hz(Band b);    // theta 4, alpha 8, beta 13, gamma 32
double band_high_hz(Band b);   // theta 8, alpha 13, beta 32, gamma 64
int band_dwt_level(Band b);    // theta D5, alpha D4, beta D3, gamma D2

// homologous left/right electrode pairs; every montage channel appears once
struct AsymmetryPair {
  const char* left;
  const char* right;
};

inline constexpr std::array<AsymmetryPair, 7> kAsymmetryPairs = {{
    {"AF3", "AF4"},
    {"F7", "F8"},
    {"F3", "F4"},
    {"FC5", "FC6"},
    {"T7", "T8"},
    {"P7", "P8"},
    {"O1", "O2"},
}};

// index of a channel in a trial, error if missing
std::size_t channel_index(const Trial& trial, const std::string& name);

// trials entering the montage-wide feature extractors must carry the 14
// expected channels (any order); returns indices in montage order
std::vector<std::size_t> montage_indices(const Trial& trial);

}  // namespace eeganx

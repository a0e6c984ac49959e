#pragma once

#include <string>
#include <vector>

#include "eeganx/features/common.hpp"
#include "eeganx/features/hht.hpp"
#include "eeganx/features/qeeg.hpp"
#include "eeganx/features/wavelet_features.hpp"
#include "eeganx/recording.hpp"

namespace eeganx {

// The feature families the extractor can emit, in manifest order. Grouping:
//   time           : hjorth (42) + hfd (14)
//   frequency      : welch_power (56) + sef (14) + asym (7)
//   time_frequency : dwt_power (56) + dwt_rms (56) + hht (7/9/10)
//   qeeg           : qeeg (25)
// "all" concatenates everything, which lands on 277 for 1 s trials.
enum class FeatureFamily {
  hjorth,
  hfd,
  welch_power,
  sef,
  asym,
  dwt_power,
  dwt_rms,
  hht,
  qeeg,
};

struct FamilyInfo {
  FeatureFamily family;
  const char* name;
  FeatureGroup group;
};

const std::vector<FamilyInfo>& all_families();
const char* to_string(FeatureFamily f);
FeatureFamily feature_family_from_string(const std::string& s);

// expected output dimension; hht varies with the trial duration
std::size_t family_dim(FeatureFamily f, double duration_s);

struct ExtractorConfig {
  bool classical_hjorth = false;
  RmsMode rms_mode = RmsMode::cumulative;
  bool include_delta = false;
  AsymmetryConfig asym{};
  EmdConfig emd{};
  QeegConfig qeeg{};
};

FeatureVector extract_family(const Trial& trial, FeatureFamily family,
                             const ExtractorConfig& cfg = {});

// comma-separated groups ("time"), family names ("dwt_rms"), or "all";
// result is deduplicated and kept in manifest order
std::vector<FeatureFamily> parse_feature_selection(const std::string& selection);

// concatenation in manifest order, dimension checked against family_dim
FeatureVector extract_features(const Trial& trial,
                               const std::vector<FeatureFamily>& families,
                               const ExtractorConfig& cfg = {});

// 56 Welch absolute band powers (4 bands x 14 channels)
FeatureVector welch_power_vector(const Trial& trial, const WelchConfig& cfg = {});

// static name list per family, matching the extractor's emission order
std::vector<std::string> family_feature_names(FeatureFamily f, double duration_s);

// text manifest: name, family, group, per-band flag, channel policy
std::string feature_manifest_table(double duration_s);

}  // namespace eeganx

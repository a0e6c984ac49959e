#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "eeganx/classify/dataset.hpp"
#include "eeganx/classify/knn.hpp"
#include "eeganx/classify/ssae.hpp"
#include "eeganx/classify/svm.hpp"

namespace eeganx {

struct KnnSpec {
  std::size_t k = 5;
};
struct SvmSpec {
  SvmParams params;
};
struct SsaeSpec {
  SsaeConfig config;
};
// always predicts the most frequent training class; the chance baseline
struct MajoritySpec {};

using ModelSpec = std::variant<KnnSpec, SvmSpec, SsaeSpec, MajoritySpec>;

std::string describe(const ModelSpec& spec);

struct CvConfig {
  int folds = 5;
  std::uint64_t seed = 0;
  std::string fingerprint;  // embedded verbatim in the report
};

struct CvReport {
  std::vector<double> fold_accuracy;
  std::vector<std::size_t> fold_test_size;
  double mean_accuracy = 0.0;
  std::vector<int> classes;
  std::vector<std::vector<std::size_t>> confusion;  // [true][predicted]
  std::string model_desc;
  std::string fingerprint;
  std::uint64_t seed = 0;
  int folds = 0;
  bool stratification_warning = false;  // some class has fewer rows than folds
  std::vector<std::pair<std::string, std::string>> extra;  // free-form report lines

  std::string to_text() const;  // deterministic byte-for-byte rendering
};

// class-stratified fold assignment; deterministic in (labels, folds, seed)
std::vector<std::vector<std::size_t>> stratified_folds(const std::vector<int>& labels,
                                                       int folds, std::uint64_t seed);

// Normalization is min-max fit on each training split only; the model is
// trained on normalized training rows and scored on normalized test rows.
CvReport cross_validate(const Dataset& data, const ModelSpec& spec, const CvConfig& cfg);

// fitted normalization parameters per fold, exposed for the leakage tests
std::vector<MinMaxNormalizer> cv_fold_normalizers(const Dataset& data, const CvConfig& cfg);

}  // namespace eeganx

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "eeganx/error.hpp"

namespace eeganx {

struct Dataset {
  std::vector<std::vector<double>> features;  // [row][feature]
  std::vector<int> labels;                    // class ids, 0-based
  std::vector<std::string> feature_names;
  std::vector<std::string> feature_groups;    // tag per feature column

  std::size_t rows() const { return features.size(); }
  std::size_t cols() const { return features.empty() ? 0 : features.front().size(); }
  void validate() const;
  std::vector<int> class_ids() const;  // sorted unique labels
};

// per-feature min-max to [0,1], fit on training rows only
class MinMaxNormalizer {
public:
  void fit(const Dataset& data, std::span<const std::size_t> train_rows);
  std::vector<double> apply(std::span<const double> row) const;
  bool fitted() const { return !mins_.empty(); }
  const std::vector<double>& mins() const { return mins_; }
  const std::vector<double>& maxs() const { return maxs_; }

private:
  std::vector<double> mins_, maxs_;
};

}  // namespace eeganx

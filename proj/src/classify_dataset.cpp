#include "eeganx/classify/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace eeganx {

void Dataset::validate() const {
  if (features.size() != labels.size())
    throw Error(errc::bad_argument, "feature row count does not match label count");
  const std::size_t c = cols();
  for (const auto& row : features) {
    if (row.size() != c)
      throw Error(errc::bad_argument, "ragged feature matrix");
    for (double v : row)
      if (!std::isfinite(v))
        throw Error(errc::bad_argument, "non-finite feature value");
  }
  if (!feature_names.empty() && feature_names.size() != c)
    throw Error(errc::bad_argument, "feature name count does not match columns");
}

std::vector<int> Dataset::class_ids() const {
  std::set<int> ids(labels.begin(), labels.end());
  return std::vector<int>(ids.begin(), ids.end());
}

void MinMaxNormalizer::fit(const Dataset& data, std::span<const std::size_t> train_rows) {
  if (train_rows.empty())
    throw Error(errc::bad_argument, "cannot fit a normalizer on zero rows");
  const std::size_t c = data.cols();
  mins_.assign(c, std::numeric_limits<double>::infinity());
  maxs_.assign(c, -std::numeric_limits<double>::infinity());
  for (std::size_t r : train_rows) {
    const auto& row = data.features.at(r);
    for (std::size_t j = 0; j < c; ++j) {
      mins_[j] = std::min(mins_[j], row[j]);
      maxs_[j] = std::max(maxs_[j], row[j]);
    }
  }
}

std::vector<double> MinMaxNormalizer::apply(std::span<const double> row) const {
  if (row.size() != mins_.size())
    throw Error(errc::bad_argument, "normalizer dimension mismatch");
  std::vector<double> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    const double span = maxs_[j] - mins_[j];
    // constant training columns map to 0 so nothing turns into NaN
    out[j] = span > 0.0 ? (row[j] - mins_[j]) / span : 0.0;
  }
  return out;
}

}  // namespace eeganx

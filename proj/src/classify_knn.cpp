#include "eeganx/classify/knn.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace eeganx {

int knn_classify(const Dataset& train, std::span<const double> query, std::size_t k) {
  train.validate();
  if (train.rows() == 0) throw Error(errc::bad_argument, "empty training set");
  if (k < 1 || k > train.rows())
    throw Error(errc::bad_argument, "k must be in [1, training size]");
  if (query.size() != train.cols())
    throw Error(errc::bad_argument, "query dimension mismatch");

  std::vector<std::pair<double, std::size_t>> dist;  // (distance^2, row)
  dist.reserve(train.rows());
  for (std::size_t r = 0; r < train.rows(); ++r) {
    double d2 = 0.0;
    const auto& row = train.features[r];
    for (std::size_t j = 0; j < query.size(); ++j) {
      const double d = row[j] - query[j];
      d2 += d * d;
    }
    dist.emplace_back(d2, r);
  }
  std::sort(dist.begin(), dist.end());  // pair ordering = distance, then row index

  std::map<int, std::pair<std::size_t, double>> votes;  // class -> (count, dist sum)
  for (std::size_t i = 0; i < k; ++i) {
    auto& v = votes[train.labels[dist[i].second]];
    ++v.first;
    v.second += std::sqrt(dist[i].first);
  }

  int best_class = votes.begin()->first;
  std::size_t best_count = 0;
  double best_dist = 0.0;
  for (const auto& [cls, v] : votes) {
    if (v.first > best_count ||
        (v.first == best_count && v.second < best_dist)) {
      best_class = cls;
      best_count = v.first;
      best_dist = v.second;
    }
  }
  return best_class;
}

}  // namespace eeganx

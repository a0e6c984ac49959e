#pragma once

#include <span>

#include "eeganx/classify/dataset.hpp"

namespace eeganx {

// Majority vote among the k Euclidean-nearest training rows. Distance ties
// break towards the lower row index; vote ties break towards the class with
// the smallest summed distance, then the smaller class id.
int knn_classify(const Dataset& train, std::span<const double> query, std::size_t k);

}  // namespace eeganx

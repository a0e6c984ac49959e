#pragma once

#include <span>
#include <vector>

#include "eeganx/classify/dataset.hpp"

namespace eeganx {

struct SvmParams {
  double C = 1.0;
  double gamma = 0.0;   // 0 = 1 / num_features
  double tol = 1e-6;    // maximal-violating-pair gap at convergence
  std::size_t max_iter = 200000;
};

// RBF-kernel C-SVC trained by sequential minimal optimization.
struct SvmModel {
  std::vector<std::vector<double>> support_vectors;
  std::vector<double> coeffs;  // alpha_i * y_i per support vector
  double bias = 0.0;
  double gamma = 0.0;
  double C = 0.0;
  double dual_objective = 0.0;      // sum(alpha) - 1/2 a'Qa at convergence
  double kkt_violation = 0.0;       // m(alpha) - M(alpha) at the last step
  std::size_t iterations = 0;

  double decision(std::span<const double> x) const;
};

double rbf_kernel(std::span<const double> a, std::span<const double> b, double gamma);

// labels must be -1 / +1
SvmModel svm_train_binary(const std::vector<std::vector<double>>& x,
                          const std::vector<int>& y, const SvmParams& params);

// one-vs-one with majority voting for more than two classes
struct SvmOvoModel {
  struct PairModel {
    int positive = 0, negative = 0;
    SvmModel model;
  };
  std::vector<int> classes;
  std::vector<PairModel> pairs;

  int predict(std::span<const double> x) const;
};

SvmOvoModel svm_train_ovo(const Dataset& train, const SvmParams& params);

}  // namespace eeganx

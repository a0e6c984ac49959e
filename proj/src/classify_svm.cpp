#include "eeganx/classify/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace eeganx {

double rbf_kernel(std::span<const double> a, std::span<const double> b, double gamma) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    d2 += d * d;
  }
  return std::exp(-gamma * d2);
}

double SvmModel::decision(std::span<const double> x) const {
  double f = bias;
  for (std::size_t i = 0; i < support_vectors.size(); ++i)
    f += coeffs[i] * rbf_kernel(support_vectors[i], x, gamma);
  return f;
}

SvmModel svm_train_binary(const std::vector<std::vector<double>>& x,
                          const std::vector<int>& y, const SvmParams& params) {
  const std::size_t n = x.size();
  if (n == 0 || y.size() != n)
    throw Error(errc::bad_argument, "SVM needs matching feature rows and labels");
  bool has_pos = false, has_neg = false;
  for (int v : y) {
    if (v == 1) has_pos = true;
    else if (v == -1) has_neg = true;
    else throw Error(errc::bad_argument, "binary SVM labels must be -1 or +1");
  }
  if (!has_pos || !has_neg)
    throw Error(errc::bad_argument, "single-class training data");
  for (const auto& row : x)
    for (double v : row)
      if (!std::isfinite(v)) throw Error(errc::bad_argument, "non-finite feature value");

  const double gamma =
      params.gamma > 0.0 ? params.gamma : 1.0 / static_cast<double>(x.front().size());
  const double C = params.C;

  // minimize 1/2 a'Qa - e'a with Q_ij = y_i y_j K_ij, subject to 0<=a<=C, y'a=0
  std::vector<double> alpha(n, 0.0);
  std::vector<double> grad(n, -1.0);
  std::vector<double> kdiag(n, 1.0);  // RBF diagonal

  auto kernel_row = [&](std::size_t i, std::vector<double>& out) {
    out.resize(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = rbf_kernel(x[i], x[k], gamma);
  };

  std::vector<double> ki, kj;
  std::size_t iter = 0;
  double gap = std::numeric_limits<double>::infinity();

  for (; iter < params.max_iter; ++iter) {
    // maximal violating pair: i from I_up by -y*grad max, j by second-order gain
    int i = -1;
    double g_max = -std::numeric_limits<double>::infinity();
    double g_min = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      const bool in_up = (y[k] == 1 && alpha[k] < C) || (y[k] == -1 && alpha[k] > 0.0);
      if (in_up && -y[k] * grad[k] >= g_max) {
        g_max = -y[k] * grad[k];
        i = static_cast<int>(k);
      }
    }
    if (i < 0) break;
    kernel_row(static_cast<std::size_t>(i), ki);

    int j = -1;
    double obj_min = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      const bool in_low = (y[k] == 1 && alpha[k] > 0.0) || (y[k] == -1 && alpha[k] < C);
      if (!in_low) continue;
      const double nyg = -y[k] * grad[k];
      g_min = std::min(g_min, nyg);
      const double b = g_max - nyg;
      if (b > 0.0) {
        double lambda = kdiag[static_cast<std::size_t>(i)] + kdiag[k] - 2.0 * ki[k];
        lambda = std::max(lambda, 1e-12);
        const double gain = -(b * b) / lambda;
        if (gain <= obj_min) {
          obj_min = gain;
          j = static_cast<int>(k);
        }
      }
    }
    gap = g_max - g_min;
    if (gap < params.tol || j < 0) break;

    const auto ui = static_cast<std::size_t>(i);
    const auto uj = static_cast<std::size_t>(j);
    kernel_row(uj, kj);

    double lambda = kdiag[ui] + kdiag[uj] - 2.0 * ki[uj];
    lambda = std::max(lambda, 1e-12);
    const double step = (-y[ui] * grad[ui] + y[uj] * grad[uj]) / lambda;

    const double old_ai = alpha[ui];
    const double old_aj = alpha[uj];
    alpha[ui] += y[ui] * step;
    alpha[uj] -= y[uj] * step;

    // project the pair back onto the box, preserving y'a
    const double sum = y[ui] * old_ai + y[uj] * old_aj;
    alpha[ui] = std::clamp(alpha[ui], 0.0, C);
    alpha[uj] = y[uj] * (sum - y[ui] * alpha[ui]);
    alpha[uj] = std::clamp(alpha[uj], 0.0, C);
    alpha[ui] = y[ui] * (sum - y[uj] * alpha[uj]);

    const double dai = alpha[ui] - old_ai;
    const double daj = alpha[uj] - old_aj;
    for (std::size_t k = 0; k < n; ++k)
      grad[k] += y[k] * (ki[k] * dai * y[ui] + kj[k] * daj * y[uj]);
  }

  SvmModel model;
  model.gamma = gamma;
  model.C = C;
  model.iterations = iter;
  model.kkt_violation = gap;

  // dual objective in the maximization form: sum(a) - 1/2 a'Qa.
  // grad = Qa - e, so a'Qa = a'(grad + e) = a'grad + sum(a).
  double a_sum = 0.0, a_grad = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    a_sum += alpha[k];
    a_grad += alpha[k] * grad[k];
  }
  model.dual_objective = a_sum - 0.5 * (a_grad + a_sum);

  // bias from the violating-pair bounds
  double m_up = -std::numeric_limits<double>::infinity();
  double m_low = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const bool in_up = (y[k] == 1 && alpha[k] < C) || (y[k] == -1 && alpha[k] > 0.0);
    const bool in_low = (y[k] == 1 && alpha[k] > 0.0) || (y[k] == -1 && alpha[k] < C);
    const double nyg = -y[k] * grad[k];
    if (in_up) m_up = std::max(m_up, nyg);
    if (in_low) m_low = std::min(m_low, nyg);
  }
  model.bias = (m_up + m_low) / 2.0;

  for (std::size_t k = 0; k < n; ++k) {
    if (alpha[k] > 0.0) {
      model.support_vectors.push_back(x[k]);
      model.coeffs.push_back(alpha[k] * y[k]);
    }
  }
  return model;
}

int SvmOvoModel::predict(std::span<const double> x) const {
  if (classes.size() == 1) return classes.front();
  std::vector<std::size_t> votes(classes.size(), 0);
  std::vector<double> margin(classes.size(), 0.0);
  auto class_pos = [&](int c) {
    return static_cast<std::size_t>(
        std::find(classes.begin(), classes.end(), c) - classes.begin());
  };
  for (const auto& pm : pairs) {
    const double f = pm.model.decision(x);
    const int winner = f >= 0.0 ? pm.positive : pm.negative;
    const std::size_t w = class_pos(winner);
    ++votes[w];
    margin[w] += std::abs(f);
  }
  std::size_t best = 0;
  for (std::size_t c = 1; c < classes.size(); ++c) {
    if (votes[c] > votes[best] ||
        (votes[c] == votes[best] && margin[c] > margin[best]))
      best = c;
  }
  return classes[best];
}

SvmOvoModel svm_train_ovo(const Dataset& train, const SvmParams& params) {
  train.validate();
  SvmOvoModel ovo;
  ovo.classes = train.class_ids();
  if (ovo.classes.size() < 2)
    throw Error(errc::bad_argument, "single-class training data");

  for (std::size_t a = 0; a < ovo.classes.size(); ++a) {
    for (std::size_t b = a + 1; b < ovo.classes.size(); ++b) {
      std::vector<std::vector<double>> x;
      std::vector<int> y;
      for (std::size_t r = 0; r < train.rows(); ++r) {
        if (train.labels[r] == ovo.classes[a]) {
          x.push_back(train.features[r]);
          y.push_back(1);
        } else if (train.labels[r] == ovo.classes[b]) {
          x.push_back(train.features[r]);
          y.push_back(-1);
        }
      }
      SvmOvoModel::PairModel pm;
      pm.positive = ovo.classes[a];
      pm.negative = ovo.classes[b];
      pm.model = svm_train_binary(x, y, params);
      ovo.pairs.push_back(std::move(pm));
    }
  }
  return ovo;
}

}  // namespace eeganx

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eeganx/classify/dataset.hpp"

namespace eeganx {

// row-major dense matrix, just enough for the autoencoder stack
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<double> v;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), v(r * c, 0.0) {}
  double& operator()(std::size_t r, std::size_t c) { return v[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
};

struct SsaeConfig {
  std::size_t hidden1 = 0;  // must be below the input dimension
  std::size_t hidden2 = 0;  // and below hidden1
  double sparsity_target = 0.05;  // rho
  double sparsity_weight = 3.0;   // beta
  double weight_decay = 1e-4;     // lambda
  double learning_rate = 0.1;
  int pretrain_epochs = 400;
  int finetune_epochs = 200;
  std::uint64_t seed = 1;
};

struct SsaeModel {
  Mat w1;                    // hidden1 x input
  std::vector<double> b1, b1d;
  Mat w2;                    // hidden2 x hidden1
  std::vector<double> b2, b2d;
  Mat ws;                    // classes x hidden2
  std::vector<double> bs;
  std::vector<int> classes;
  SsaeConfig config;

  std::vector<double> encode1(std::span<const double> x) const;
  std::vector<double> encode2(std::span<const double> h1) const;
  std::vector<double> probabilities(std::span<const double> x) const;  // sums to 1
  int predict(std::span<const double> x) const;
};

// greedy layer-wise pretraining (tied decode weights, KL sparsity, L2 decay),
// then a softmax head, then end-to-end fine-tuning; every phase's loss is
// non-increasing per epoch
SsaeModel ssae_train(const Dataset& train, const SsaeConfig& cfg);

// ---- internals exposed for gradient checking ----

struct AutoencoderLayer {
  Mat w;
  std::vector<double> b, bd;
};

struct AeGradients {
  Mat dw;
  std::vector<double> db, dbd;
};

double autoencoder_loss(const AutoencoderLayer& layer, const Mat& inputs,
                        const SsaeConfig& cfg, AeGradients* grads = nullptr);

struct SoftmaxHead {
  Mat w;
  std::vector<double> b;
};

double softmax_loss(const SoftmaxHead& head, const Mat& inputs,
                    const std::vector<std::size_t>& targets, double weight_decay,
                    Mat* dw = nullptr, std::vector<double>* db = nullptr);

double finetune_loss(SsaeModel& model, const Mat& inputs,
                     const std::vector<std::size_t>& targets,
                     std::vector<double>* flat_grad = nullptr);

// flattened parameter views used by the fine-tune phase and gradient checks
std::vector<double> ssae_flatten(const SsaeModel& model);
void ssae_unflatten(SsaeModel& model, std::span<const double> params);

}  // namespace eeganx

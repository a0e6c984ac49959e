#include "eeganx/classify/ssae.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eeganx/rng.hpp"

namespace eeganx {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

std::vector<double> affine_sigmoid(const Mat& w, const std::vector<double>& b,
                                   std::span<const double> x) {
  std::vector<double> out(w.rows);
  for (std::size_t r = 0; r < w.rows; ++r) {
    double acc = b[r];
    for (std::size_t c = 0; c < w.cols; ++c) acc += w(r, c) * x[c];
    out[r] = sigmoid(acc);
  }
  return out;
}

void init_uniform(Mat& w, Rng& rng) {
  const double r = std::sqrt(6.0 / static_cast<double>(w.rows + w.cols + 1));
  for (double& v : w.v) v = rng.uniform(-r, r);
}

double frob_sq(const Mat& w) {
  double s = 0.0;
  for (double v : w.v) s += v * v;
  return s;
}

// generic non-increasing gradient step: halve the rate until the loss stops
// getting worse, so every phase's loss is monotone per epoch
template <typename LossFn, typename ApplyFn, typename RevertFn>
double descend_epoch(double current_loss, double& lr, double lr0, LossFn loss,
                     ApplyFn apply, RevertFn revert) {
  for (int tries = 0; tries < 40; ++tries) {
    apply(lr);
    const double next = loss();
    if (std::isfinite(next) && next <= current_loss) {
      lr = std::min(lr * 1.1, lr0);
      return next;
    }
    revert(lr);
    lr *= 0.5;
  }
  return current_loss;  // stationary enough: keep the parameters as they are
}

}  // namespace

double autoencoder_loss(const AutoencoderLayer& layer, const Mat& inputs,
                        const SsaeConfig& cfg, AeGradients* grads) {
  const std::size_t m = inputs.rows;
  const std::size_t n = layer.w.cols;
  const std::size_t h = layer.w.rows;
  const double inv_m = 1.0 / static_cast<double>(m);

  // forward pass for every sample, accumulating mean activations
  Mat hidden(m, h), recon(m, n);
  std::vector<double> rho_hat(h, 0.0);
  double recon_loss = 0.0;
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t j = 0; j < h; ++j) {
      double acc = layer.b[j];
      for (std::size_t c = 0; c < n; ++c) acc += layer.w(j, c) * inputs(s, c);
      const double y = sigmoid(acc);
      hidden(s, j) = y;
      rho_hat[j] += y * inv_m;
    }
    for (std::size_t c = 0; c < n; ++c) {
      double acc = layer.bd[c];
      for (std::size_t j = 0; j < h; ++j) acc += layer.w(j, c) * hidden(s, j);
      const double z = sigmoid(acc);
      recon(s, c) = z;
      const double d = z - inputs(s, c);
      recon_loss += 0.5 * d * d;
    }
  }
  recon_loss *= inv_m;

  const double rho = cfg.sparsity_target;
  double kl = 0.0;
  for (std::size_t j = 0; j < h; ++j) {
    const double r = std::clamp(rho_hat[j], 1e-12, 1.0 - 1e-12);
    kl += rho * std::log(rho / r) + (1.0 - rho) * std::log((1.0 - rho) / (1.0 - r));
  }
  const double loss = recon_loss + cfg.sparsity_weight * kl +
                      0.5 * cfg.weight_decay * frob_sq(layer.w);
  if (!grads) return loss;

  grads->dw = Mat(h, n);
  grads->db.assign(h, 0.0);
  grads->dbd.assign(n, 0.0);

  std::vector<double> sparsity_grad(h);
  for (std::size_t j = 0; j < h; ++j) {
    const double r = std::clamp(rho_hat[j], 1e-12, 1.0 - 1e-12);
    sparsity_grad[j] = cfg.sparsity_weight * (-rho / r + (1.0 - rho) / (1.0 - r));
  }

  std::vector<double> d3(n), d2(h);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t c = 0; c < n; ++c) {
      const double z = recon(s, c);
      d3[c] = (z - inputs(s, c)) * z * (1.0 - z) * inv_m;
      grads->dbd[c] += d3[c];
    }
    for (std::size_t j = 0; j < h; ++j) {
      double acc = sparsity_grad[j] * inv_m;
      for (std::size_t c = 0; c < n; ++c) acc += layer.w(j, c) * d3[c];
      const double y = hidden(s, j);
      d2[j] = acc * y * (1.0 - y);
      grads->db[j] += d2[j];
    }
    // tied weights: encode and decode both contribute
    for (std::size_t j = 0; j < h; ++j)
      for (std::size_t c = 0; c < n; ++c)
        grads->dw(j, c) += d2[j] * inputs(s, c) + hidden(s, j) * d3[c];
  }
  for (std::size_t j = 0; j < h; ++j)
    for (std::size_t c = 0; c < n; ++c)
      grads->dw(j, c) += cfg.weight_decay * layer.w(j, c);
  return loss;
}

double softmax_loss(const SoftmaxHead& head, const Mat& inputs,
                    const std::vector<std::size_t>& targets, double weight_decay,
                    Mat* dw, std::vector<double>* db) {
  const std::size_t m = inputs.rows;
  const std::size_t k = head.w.rows;
  const std::size_t n = head.w.cols;
  const double inv_m = 1.0 / static_cast<double>(m);

  if (dw) {
    *dw = Mat(k, n);
    db->assign(k, 0.0);
  }
  double loss = 0.0;
  std::vector<double> logits(k), p(k);
  for (std::size_t s = 0; s < m; ++s) {
    double mx = -1e300;
    for (std::size_t c = 0; c < k; ++c) {
      double acc = head.b[c];
      for (std::size_t j = 0; j < n; ++j) acc += head.w(c, j) * inputs(s, j);
      logits[c] = acc;
      mx = std::max(mx, acc);
    }
    double z = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
      p[c] = std::exp(logits[c] - mx);
      z += p[c];
    }
    for (std::size_t c = 0; c < k; ++c) p[c] /= z;
    loss -= std::log(std::max(p[targets[s]], 1e-300)) * inv_m;

    if (dw) {
      for (std::size_t c = 0; c < k; ++c) {
        const double delta = (p[c] - (c == targets[s] ? 1.0 : 0.0)) * inv_m;
        (*db)[c] += delta;
        for (std::size_t j = 0; j < n; ++j) (*dw)(c, j) += delta * inputs(s, j);
      }
    }
  }
  loss += 0.5 * weight_decay * frob_sq(head.w);
  if (dw)
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t j = 0; j < n; ++j) (*dw)(c, j) += weight_decay * head.w(c, j);
  return loss;
}

std::vector<double> SsaeModel::encode1(std::span<const double> x) const {
  return affine_sigmoid(w1, b1, x);
}

std::vector<double> SsaeModel::encode2(std::span<const double> h1) const {
  return affine_sigmoid(w2, b2, h1);
}

std::vector<double> SsaeModel::probabilities(std::span<const double> x) const {
  const auto h1 = encode1(x);
  const auto h2 = encode2(h1);
  std::vector<double> logits(ws.rows);
  double mx = -1e300;
  for (std::size_t c = 0; c < ws.rows; ++c) {
    double acc = bs[c];
    for (std::size_t j = 0; j < ws.cols; ++j) acc += ws(c, j) * h2[j];
    logits[c] = acc;
    mx = std::max(mx, acc);
  }
  double z = 0.0;
  for (double& l : logits) {
    l = std::exp(l - mx);
    z += l;
  }
  for (double& l : logits) l /= z;
  return logits;
}

int SsaeModel::predict(std::span<const double> x) const {
  const auto p = probabilities(x);
  std::size_t best = 0;
  for (std::size_t c = 1; c < p.size(); ++c)
    if (p[c] > p[best]) best = c;
  return classes[best];
}

std::vector<double> ssae_flatten(const SsaeModel& model) {
  std::vector<double> out;
  out.reserve(model.w1.v.size() + model.b1.size() + model.w2.v.size() + model.b2.size() +
              model.ws.v.size() + model.bs.size());
  auto add = [&](const std::vector<double>& v) { out.insert(out.end(), v.begin(), v.end()); };
  add(model.w1.v);
  add(model.b1);
  add(model.w2.v);
  add(model.b2);
  add(model.ws.v);
  add(model.bs);
  return out;
}

void ssae_unflatten(SsaeModel& model, std::span<const double> params) {
  std::size_t pos = 0;
  auto take = [&](std::vector<double>& v) {
    std::copy(params.begin() + static_cast<std::ptrdiff_t>(pos),
              params.begin() + static_cast<std::ptrdiff_t>(pos + v.size()), v.begin());
    pos += v.size();
  };
  take(model.w1.v);
  take(model.b1);
  take(model.w2.v);
  take(model.b2);
  take(model.ws.v);
  take(model.bs);
  if (pos != params.size())
    throw Error(errc::bad_argument, "parameter vector size mismatch");
}

double finetune_loss(SsaeModel& model, const Mat& inputs,
                     const std::vector<std::size_t>& targets,
                     std::vector<double>* flat_grad) {
  const std::size_t m = inputs.rows;
  const std::size_t n = model.w1.cols;
  const std::size_t h1 = model.w1.rows;
  const std::size_t h2 = model.w2.rows;
  const std::size_t k = model.ws.rows;
  const double inv_m = 1.0 / static_cast<double>(m);
  const double lambda = model.config.weight_decay;

  Mat dw1(h1, n), dw2(h2, h1), dws(k, h2);
  std::vector<double> db1(h1, 0.0), db2(h2, 0.0), dbs(k, 0.0);

  double loss = 0.0;
  std::vector<double> x(n), y1, y2, p(k), d3(k), d2(h2), d1(h1);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t c = 0; c < n; ++c) x[c] = inputs(s, c);
    y1 = model.encode1(x);
    y2 = model.encode2(y1);
    double mx = -1e300;
    for (std::size_t c = 0; c < k; ++c) {
      double acc = model.bs[c];
      for (std::size_t j = 0; j < h2; ++j) acc += model.ws(c, j) * y2[j];
      p[c] = acc;
      mx = std::max(mx, acc);
    }
    double z = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
      p[c] = std::exp(p[c] - mx);
      z += p[c];
    }
    for (std::size_t c = 0; c < k; ++c) p[c] /= z;
    loss -= std::log(std::max(p[targets[s]], 1e-300)) * inv_m;

    if (!flat_grad) continue;
    for (std::size_t c = 0; c < k; ++c) {
      d3[c] = (p[c] - (c == targets[s] ? 1.0 : 0.0)) * inv_m;
      dbs[c] += d3[c];
      for (std::size_t j = 0; j < h2; ++j) dws(c, j) += d3[c] * y2[j];
    }
    for (std::size_t j = 0; j < h2; ++j) {
      double acc = 0.0;
      for (std::size_t c = 0; c < k; ++c) acc += model.ws(c, j) * d3[c];
      d2[j] = acc * y2[j] * (1.0 - y2[j]);
      db2[j] += d2[j];
      for (std::size_t i2 = 0; i2 < h1; ++i2) dw2(j, i2) += d2[j] * y1[i2];
    }
    for (std::size_t j = 0; j < h1; ++j) {
      double acc = 0.0;
      for (std::size_t c = 0; c < h2; ++c) acc += model.w2(c, j) * d2[c];
      d1[j] = acc * y1[j] * (1.0 - y1[j]);
      db1[j] += d1[j];
      for (std::size_t c = 0; c < n; ++c) dw1(j, c) += d1[j] * inputs(s, c);
    }
  }

  loss += 0.5 * lambda * (frob_sq(model.w1) + frob_sq(model.w2) + frob_sq(model.ws));
  if (flat_grad) {
    for (std::size_t i = 0; i < dw1.v.size(); ++i) dw1.v[i] += lambda * model.w1.v[i];
    for (std::size_t i = 0; i < dw2.v.size(); ++i) dw2.v[i] += lambda * model.w2.v[i];
    for (std::size_t i = 0; i < dws.v.size(); ++i) dws.v[i] += lambda * model.ws.v[i];
    flat_grad->clear();
    auto add = [&](const std::vector<double>& v) {
      flat_grad->insert(flat_grad->end(), v.begin(), v.end());
    };
    add(dw1.v);
    add(db1);
    add(dw2.v);
    add(db2);
    add(dws.v);
    add(dbs);
  }
  return loss;
}

SsaeModel ssae_train(const Dataset& train, const SsaeConfig& cfg) {
  train.validate();
  const std::size_t m = train.rows();
  const std::size_t n = train.cols();
  if (m == 0) throw Error(errc::bad_argument, "empty training set");
  if (cfg.hidden1 == 0 || cfg.hidden2 == 0 || cfg.hidden1 >= n ||
      cfg.hidden2 >= cfg.hidden1)
    throw Error(errc::bad_argument,
                "layer sizes must decrease: input > hidden1 > hidden2 > 0");

  SsaeModel model;
  model.config = cfg;
  model.classes = train.class_ids();
  const std::size_t k = model.classes.size();

  Mat inputs(m, n);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t c = 0; c < n; ++c) inputs(s, c) = train.features[s][c];
  std::vector<std::size_t> targets(m);
  for (std::size_t s = 0; s < m; ++s)
    targets[s] = static_cast<std::size_t>(
        std::find(model.classes.begin(), model.classes.end(), train.labels[s]) -
        model.classes.begin());

  Rng rng(derive_seed(cfg.seed, "ssae-init"));

  auto check_finite = [](double loss, const char* phase, int epoch) {
    if (!std::isfinite(loss))
      throw Error(errc::diverged, std::string(phase) + " loss diverged at epoch " +
                                      std::to_string(epoch));
  };

  // --- layer-wise pretraining ---
  auto pretrain = [&](AutoencoderLayer& layer, const Mat& data) {
    init_uniform(layer.w, rng);
    double lr = cfg.learning_rate;
    AeGradients g;
    double loss = autoencoder_loss(layer, data, cfg, &g);
    for (int epoch = 0; epoch < cfg.pretrain_epochs; ++epoch) {
      check_finite(loss, "pretraining", epoch);
      AutoencoderLayer backup = layer;
      loss = descend_epoch(
          loss, lr, cfg.learning_rate,
          [&] { return autoencoder_loss(layer, data, cfg); },
          [&](double rate) {
            for (std::size_t i = 0; i < layer.w.v.size(); ++i)
              layer.w.v[i] -= rate * g.dw.v[i];
            for (std::size_t i = 0; i < layer.b.size(); ++i)
              layer.b[i] -= rate * g.db[i];
            for (std::size_t i = 0; i < layer.bd.size(); ++i)
              layer.bd[i] -= rate * g.dbd[i];
          },
          [&](double) { layer = backup; });
      // refresh the gradient at the accepted point for the next epoch
      loss = autoencoder_loss(layer, data, cfg, &g);
    }
  };

  AutoencoderLayer l1{Mat(cfg.hidden1, n), std::vector<double>(cfg.hidden1, 0.0),
                      std::vector<double>(n, 0.0)};
  pretrain(l1, inputs);
  model.w1 = l1.w;
  model.b1 = l1.b;
  model.b1d = l1.bd;

  Mat codes1(m, cfg.hidden1);
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<double> row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = inputs(s, c);
    const auto h = model.encode1(row);
    for (std::size_t j = 0; j < cfg.hidden1; ++j) codes1(s, j) = h[j];
  }

  AutoencoderLayer l2{Mat(cfg.hidden2, cfg.hidden1),
                      std::vector<double>(cfg.hidden2, 0.0),
                      std::vector<double>(cfg.hidden1, 0.0)};
  pretrain(l2, codes1);
  model.w2 = l2.w;
  model.b2 = l2.b;
  model.b2d = l2.bd;

  Mat codes2(m, cfg.hidden2);
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<double> row(cfg.hidden1);
    for (std::size_t c = 0; c < cfg.hidden1; ++c) row[c] = codes1(s, c);
    const auto h = model.encode2(row);
    for (std::size_t j = 0; j < cfg.hidden2; ++j) codes2(s, j) = h[j];
  }

  // --- softmax head on the layer-2 codes ---
  SoftmaxHead head{Mat(k, cfg.hidden2), std::vector<double>(k, 0.0)};
  init_uniform(head.w, rng);
  {
    double lr = cfg.learning_rate;
    Mat dw;
    std::vector<double> db;
    double loss = softmax_loss(head, codes2, targets, cfg.weight_decay, &dw, &db);
    for (int epoch = 0; epoch < cfg.pretrain_epochs; ++epoch) {
      check_finite(loss, "softmax", epoch);
      SoftmaxHead backup = head;
      loss = descend_epoch(
          loss, lr, cfg.learning_rate,
          [&] { return softmax_loss(head, codes2, targets, cfg.weight_decay); },
          [&](double rate) {
            for (std::size_t i = 0; i < head.w.v.size(); ++i)
              head.w.v[i] -= rate * dw.v[i];
            for (std::size_t i = 0; i < head.b.size(); ++i) head.b[i] -= rate * db[i];
          },
          [&](double) { head = backup; });
      loss = softmax_loss(head, codes2, targets, cfg.weight_decay, &dw, &db);
    }
  }
  model.ws = head.w;
  model.bs = head.b;

  // --- end-to-end fine-tuning ---
  {
    double lr = cfg.learning_rate;
    std::vector<double> grad;
    double loss = finetune_loss(model, inputs, targets, &grad);
    for (int epoch = 0; epoch < cfg.finetune_epochs; ++epoch) {
      check_finite(loss, "fine-tuning", epoch);
      const std::vector<double> backup = ssae_flatten(model);
      loss = descend_epoch(
          loss, lr, cfg.learning_rate,
          [&] { return finetune_loss(model, inputs, targets); },
          [&](double rate) {
            std::vector<double> params = ssae_flatten(model);
            for (std::size_t i = 0; i < params.size(); ++i)
              params[i] -= rate * grad[i];
            ssae_unflatten(model, params);
          },
          [&](double) { ssae_unflatten(model, backup); });
      loss = finetune_loss(model, inputs, targets, &grad);
    }
  }
  return model;
}

}  // namespace eeganx

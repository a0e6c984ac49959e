#include "eeganx/features/qeeg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eeganx/fft.hpp"
#include "eeganx/preprocess.hpp"
#include "eeganx/stats.hpp"

namespace eeganx {

namespace {

constexpr double kPassLowHz = 4.0;   // front-end pass-band, also the SEF range
constexpr double kPassHighHz = 45.0;
constexpr double kEnvEdgeFraction = 0.05;

std::vector<double> hamming(std::size_t n) {
  std::vector<double> w(n);
  if (n == 1) {
    w[0] = 1.0;
    return w;
  }
  for (std::size_t i = 0; i < n; ++i)
    w[i] = 0.54 - 0.46 * std::cos(2.0 * 3.14159265358979323846 * static_cast<double>(i) /
                                  static_cast<double>(n - 1));
  return w;
}

struct SegmentPlan {
  std::size_t seg = 0;
  std::size_t hop = 0;
  std::size_t count = 0;
};

SegmentPlan plan_segments(std::size_t n, const WelchConfig& cfg) {
  SegmentPlan p;
  p.seg = cfg.segment_len ? cfg.segment_len : welch_auto_segment(n);
  if (p.seg > n)
    throw Error(errc::bad_argument, "Welch segment longer than the signal (" +
                                        std::to_string(p.seg) + " > " + std::to_string(n) + ")");
  if (p.seg < 8) throw Error(errc::bad_argument, "Welch segment too short");
  const double keep = 1.0 - cfg.overlap;
  if (!(keep > 0.0) || cfg.overlap < 0.0)
    throw Error(errc::bad_argument, "Welch overlap must be in [0, 1)");
  p.hop = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(
                                       static_cast<double>(p.seg) * keep)));
  p.count = (n - p.seg) / p.hop + 1;
  return p;
}

// one-sided modified periodogram of a windowed segment
std::vector<double> periodogram(std::span<const double> seg, std::span<const double> w,
                                double u_norm, double fs) {
  std::vector<double> xw(seg.size());
  for (std::size_t i = 0; i < seg.size(); ++i) xw[i] = seg[i] * w[i];
  const auto X = fft(std::span<const double>(xw));
  const std::size_t n = seg.size();
  const std::size_t bins = n / 2 + 1;
  std::vector<double> p(bins);
  const double scale = 1.0 / (fs * u_norm);
  for (std::size_t k = 0; k < bins; ++k) {
    double v = std::norm(X[k]) * scale;
    if (k != 0 && !(n % 2 == 0 && k == bins - 1)) v *= 2.0;
    p[k] = v;
  }
  return p;
}

std::vector<double> grid_freqs(std::size_t seg, double fs) {
  const std::size_t bins = seg / 2 + 1;
  std::vector<double> f(bins);
  for (std::size_t k = 0; k < bins; ++k)
    f[k] = static_cast<double>(k) * fs / static_cast<double>(seg);
  return f;
}

// indices with lo <= f < hi
std::pair<std::size_t, std::size_t> band_bins(const std::vector<double>& freqs, double lo,
                                              double hi) {
  std::size_t b = 0;
  while (b < freqs.size() && freqs[b] < lo) ++b;
  std::size_t e = b;
  while (e < freqs.size() && freqs[e] < hi) ++e;
  return {b, e};
}

double integrate(const Psd& psd, double lo, double hi) {
  const auto [b, e] = band_bins(psd.freqs, lo, hi);
  const double df = psd.freqs.size() > 1 ? psd.freqs[1] - psd.freqs[0] : 1.0;
  double s = 0.0;
  for (std::size_t k = b; k < e; ++k) s += psd.power[k];
  return s * df;
}

}  // namespace

std::size_t welch_auto_segment(std::size_t n) {
  if (n >= 512) return 256;
  std::size_t seg = 8;
  while (seg * 2 <= n / 2) seg *= 2;
  return std::min(seg, n);
}

Psd welch_psd(std::span<const double> x, double sample_rate, const WelchConfig& cfg) {
  if (x.empty()) throw Error(errc::bad_argument, "Welch PSD of an empty signal");
  const SegmentPlan plan = plan_segments(x.size(), cfg);
  const auto w = hamming(plan.seg);
  double u = 0.0;
  for (double v : w) u += v * v;

  Psd psd;
  psd.freqs = grid_freqs(plan.seg, sample_rate);
  psd.power.assign(psd.freqs.size(), 0.0);
  for (std::size_t s = 0; s < plan.count; ++s) {
    const auto seg = x.subspan(s * plan.hop, plan.seg);
    const auto p = periodogram(seg, w, u, sample_rate);
    for (std::size_t k = 0; k < p.size(); ++k) psd.power[k] += p[k];
  }
  for (double& v : psd.power) v /= static_cast<double>(plan.count);
  return psd;
}

SpectralEstimate welch_psd(const Trial& trial, const WelchConfig& cfg) {
  const auto data = trial.valid_data();
  SpectralEstimate est;
  for (std::size_t c = 0; c < data.size(); ++c) {
    Psd p = welch_psd(data[c], trial.sample_rate, cfg);
    if (c == 0) est.freqs = p.freqs;
    est.power.push_back(std::move(p.power));
  }
  return est;
}

std::vector<std::vector<double>> welch_segment_spectra(std::span<const double> x,
                                                       double sample_rate,
                                                       const WelchConfig& cfg) {
  const SegmentPlan plan = plan_segments(x.size(), cfg);
  const auto w = hamming(plan.seg);
  double u = 0.0;
  for (double v : w) u += v * v;
  std::vector<std::vector<double>> out;
  out.reserve(plan.count);
  for (std::size_t s = 0; s < plan.count; ++s)
    out.push_back(periodogram(x.subspan(s * plan.hop, plan.seg), w, u, sample_rate));
  return out;
}

std::vector<double> CrossSpectra::coherence() const {
  std::vector<double> c(freqs.size());
  for (std::size_t k = 0; k < freqs.size(); ++k) {
    const double den = sxx[k] * syy[k];
    c[k] = den > 0.0 ? std::clamp(std::norm(sxy[k]) / den, 0.0, 1.0) : 0.0;
  }
  return c;
}

CrossSpectra welch_cross(std::span<const double> x, std::span<const double> y,
                         double sample_rate, const WelchConfig& cfg) {
  if (x.size() != y.size())
    throw Error(errc::bad_argument, "cross spectrum needs equal-length signals");
  const SegmentPlan plan = plan_segments(x.size(), cfg);
  const auto w = hamming(plan.seg);
  double u = 0.0;
  for (double v : w) u += v * v;
  const double scale = 1.0 / (sample_rate * u);

  CrossSpectra cs;
  cs.freqs = grid_freqs(plan.seg, sample_rate);
  const std::size_t bins = cs.freqs.size();
  cs.sxx.assign(bins, 0.0);
  cs.syy.assign(bins, 0.0);
  cs.sxy.assign(bins, {0.0, 0.0});

  std::vector<double> xw(plan.seg), yw(plan.seg);
  for (std::size_t s = 0; s < plan.count; ++s) {
    for (std::size_t i = 0; i < plan.seg; ++i) {
      xw[i] = x[s * plan.hop + i] * w[i];
      yw[i] = y[s * plan.hop + i] * w[i];
    }
    const auto X = fft(std::span<const double>(xw));
    const auto Y = fft(std::span<const double>(yw));
    for (std::size_t k = 0; k < bins; ++k) {
      cs.sxx[k] += std::norm(X[k]) * scale;
      cs.syy[k] += std::norm(Y[k]) * scale;
      cs.sxy[k] += std::conj(X[k]) * Y[k] * scale;
    }
  }
  const double inv = 1.0 / static_cast<double>(plan.count);
  for (std::size_t k = 0; k < bins; ++k) {
    cs.sxx[k] *= inv;
    cs.syy[k] *= inv;
    cs.sxy[k] *= inv;
  }
  return cs;
}

BandSpectralFeatures spectral_features(const Psd& psd,
                                       const std::vector<std::vector<double>>& segment_spectra,
                                       Band band) {
  BandSpectralFeatures f;
  const double lo = band_low_hz(band);
  const double hi = band_high_hz(band);

  f.abs_power = integrate(psd, lo, hi);

  const double total = integrate(psd, kPassLowHz, kPassHighHz);
  if (!(total > 0.0)) throw Error(errc::degenerate, "zero total spectral power");
  f.rel_power = integrate(psd, std::max(lo, kPassLowHz), std::min(hi, kPassHighHz)) / total;

  // Wiener entropy over the band's own bins
  const auto [b, e] = band_bins(psd.freqs, lo, hi);
  if (e > b) {
    double log_sum = 0.0, lin_sum = 0.0;
    for (std::size_t k = b; k < e; ++k) {
      log_sum += std::log(std::max(psd.power[k], 1e-300));
      lin_sum += psd.power[k];
    }
    const double count = static_cast<double>(e - b);
    const double geo = std::exp(log_sum / count);
    const double arith = lin_sum / count;
    f.wiener_entropy = arith > 0.0 ? geo / arith : 0.0;
  }

  // mean squared difference of consecutive short-time spectra, normalized by
  // the squared mean in-band power
  if (segment_spectra.size() >= 2) {
    double num = 0.0, den = 0.0;
    std::size_t num_count = 0, den_count = 0;
    // segment spectra share the psd grid; reuse its band bins
    const auto [sb, se] = band_bins(psd.freqs, lo, hi);
    for (std::size_t s = 0; s < segment_spectra.size(); ++s) {
      for (std::size_t k = sb; k < se && k < segment_spectra[s].size(); ++k) {
        if (s + 1 < segment_spectra.size()) {
          const double d = segment_spectra[s + 1][k] - segment_spectra[s][k];
          num += d * d;
          ++num_count;
        }
        den += segment_spectra[s][k];
        ++den_count;
      }
    }
    const double mean_power = den_count ? den / static_cast<double>(den_count) : 0.0;
    f.spectral_diff = (num_count && mean_power > 0.0)
                          ? (num / static_cast<double>(num_count)) / (mean_power * mean_power)
                          : 0.0;
  }
  return f;
}

double spectral_edge_frequency(const Psd& psd, double fraction) {
  const auto [b, e] = band_bins(psd.freqs, kPassLowHz, kPassHighHz);
  double total = 0.0;
  for (std::size_t k = b; k < e; ++k) total += psd.power[k];
  if (!(total > 0.0)) throw Error(errc::degenerate, "zero total spectral power");
  double acc = 0.0;
  for (std::size_t k = b; k < e; ++k) {
    acc += psd.power[k];
    if (acc >= fraction * total) return psd.freqs[k];
  }
  return psd.freqs[e > 0 ? e - 1 : 0];
}

AmplitudeFeatures amplitude_features(std::span<const double> band_signal) {
  if (band_signal.size() < 8)
    throw Error(errc::too_short, "amplitude features need at least 8 samples");
  AmplitudeFeatures f;
  f.total_power = mean_square(band_signal);
  f.sd = stddev(band_signal);
  if (f.sd > 0.0) {
    f.skewness = skewness(band_signal);
    f.kurtosis = kurtosis_excess(band_signal);
  } else {
    f.degenerate_skew = true;  // constant input: skewness fixed at 0
  }

  const auto env = hilbert_envelope(band_signal);
  const auto margin = static_cast<std::size_t>(
      std::floor(kEnvEdgeFraction * static_cast<double>(env.size())));
  std::span<const double> inner(env.data() + margin, env.size() - 2 * margin);
  f.env_mean = mean(inner);
  f.env_sd = stddev(inner);
  return f;
}

ConnectivityFeatures connectivity_features(std::span<const double> left,
                                           std::span<const double> right,
                                           double sample_rate, Band band,
                                           const WelchConfig& cfg) {
  if (left.size() != right.size() || left.size() < 16)
    throw Error(errc::bad_argument, "connectivity needs two equal-length signals");
  ConnectivityFeatures f;

  // per-bin symmetry of the two spectra
  const Psd pl = welch_psd(left, sample_rate, cfg);
  const Psd pr = welch_psd(right, sample_rate, cfg);
  const auto [b, e] = band_bins(pl.freqs, band_low_hz(band), band_high_hz(band));
  if (e > b) {
    double acc = 0.0;
    for (std::size_t k = b; k < e; ++k) {
      const double den = pl.power[k] + pr.power[k];
      acc += den > 0.0 ? std::abs((pl.power[k] - pr.power[k]) / den) : 0.0;
    }
    f.bsi = acc / static_cast<double>(e - b);
  }

  const auto lf = band_filter(left, sample_rate, band);
  const auto rf = band_filter(right, sample_rate, band);

  const auto le = hilbert_envelope(lf);
  const auto re = hilbert_envelope(rf);
  f.env_corr = pearson_correlation(le, re);

  // normalized cross-correlation over |lag| <= fs/2 samples; ties prefer the
  // smallest |lag| (and the non-negative one)
  {
    const std::size_t n = lf.size();
    const double ml = mean(lf), mr = mean(rf);
    std::vector<double> l0(n), r0(n);
    double el = 0.0, er = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      l0[i] = lf[i] - ml;
      r0[i] = rf[i] - mr;
      el += l0[i] * l0[i];
      er += r0[i] * r0[i];
    }
    const double norm = std::sqrt(el * er);
    if (!(norm > 0.0)) throw Error(errc::degenerate, "constant signal in lag estimation");
    const auto max_lag = static_cast<std::ptrdiff_t>(sample_rate / 2.0);
    double best = -2.0;
    std::ptrdiff_t best_lag = 0;
    for (std::ptrdiff_t a = 0; a <= max_lag; ++a) {
      for (const std::ptrdiff_t lag : {a, -a}) {
        if (lag == 0 && a != 0) continue;
        double acc = 0.0;
        if (lag >= 0) {
          for (std::size_t t = static_cast<std::size_t>(lag); t < n; ++t)
            acc += l0[t - static_cast<std::size_t>(lag)] * r0[t];
        } else {
          for (std::size_t t = static_cast<std::size_t>(-lag); t < n; ++t)
            acc += l0[t] * r0[t - static_cast<std::size_t>(-lag)];
        }
        const double r = acc / norm;
        if (r > best) {
          best = r;
          best_lag = lag;
        }
      }
    }
    f.lag = static_cast<double>(best_lag);
  }

  const CrossSpectra cs = welch_cross(left, right, sample_rate, cfg);
  const auto coh = cs.coherence();
  const auto [cb, ce] = band_bins(cs.freqs, band_low_hz(band), band_high_hz(band));
  if (ce > cb) {
    double acc = 0.0, best = -1.0;
    std::size_t best_k = cb;
    for (std::size_t k = cb; k < ce; ++k) {
      acc += coh[k];
      if (coh[k] > best) {
        best = coh[k];
        best_k = k;
      }
    }
    f.coh_mean = acc / static_cast<double>(ce - cb);
    f.coh_max = best;
    f.coh_argmax = cs.freqs[best_k];
  }
  return f;
}

ReegFeatures reeg_features(std::span<const double> band_signal, double sample_rate,
                           double window_s, double overlap) {
  const std::size_t n = band_signal.size();
  if (n == 0) throw Error(errc::bad_argument, "range-EEG of an empty signal");
  auto window = static_cast<std::size_t>(std::llround(window_s * sample_rate));
  if (window == 0 || window > n) window = n;  // short trials: one full window
  auto hop = static_cast<std::size_t>(
      std::llround(static_cast<double>(window) * (1.0 - overlap)));
  if (hop == 0) hop = 1;

  std::vector<double> ranges;
  for (std::size_t start = 0; start + window <= n; start += hop) {
    double lo = band_signal[start], hi = band_signal[start];
    for (std::size_t i = start; i < start + window; ++i) {
      lo = std::min(lo, band_signal[i]);
      hi = std::max(hi, band_signal[i]);
    }
    ranges.push_back(hi - lo);
  }

  ReegFeatures f;
  f.mean = mean(ranges);
  if (!(f.mean > 0.0))
    throw Error(errc::degenerate, "constant signal: range-EEG is degenerate");
  f.median = median(ranges);
  f.sd = stddev(ranges);
  f.cv = f.sd / f.mean;
  f.skew_median = f.sd > 0.0 ? (f.mean - f.median) / f.sd : 0.0;
  f.p5 = percentile(ranges, 5.0);
  f.p95 = percentile(ranges, 95.0);
  f.bandwidth = f.p95 - f.p5;
  return f;
}

std::vector<double> band_filter(std::span<const double> x, double sample_rate, Band band) {
  const std::size_t n = x.size();
  int taps = 129;
  const int max_taps = static_cast<int>(n / 2) | 1;  // odd, about half the signal
  if (taps > max_taps) taps = max_taps;
  if (taps < 9) taps = 9;
  if (static_cast<std::size_t>(taps) > n)
    throw Error(errc::too_short, "signal too short for band filtering");

  FilterSpec spec;
  spec.low_cut_hz = band_low_hz(band);
  spec.high_cut_hz = std::min(band_high_hz(band), 0.499 * sample_rate);
  spec.num_taps = taps;
  const auto h = design_bandpass(spec, sample_rate);
  return fir_filter_zero_phase(x, h);
}

namespace {

struct TrialQeeg {
  // indexed [channel][band] or [pair][band]
  std::vector<std::array<BandSpectralFeatures, 4>> spectral;
  std::vector<std::array<AmplitudeFeatures, 4>> amplitude;
  std::vector<std::array<ReegFeatures, 4>> reeg;
  std::vector<std::array<ConnectivityFeatures, 4>> connectivity;
  std::vector<double> sef;
};

TrialQeeg compute_qeeg(const Trial& trial, const QeegConfig& cfg) {
  const auto idx = montage_indices(trial);
  const auto data = trial.valid_data();
  const double fs = trial.sample_rate;
  const std::size_t nch = idx.size();

  TrialQeeg q;
  q.spectral.resize(nch);
  q.amplitude.resize(nch);
  q.reeg.resize(nch);
  q.sef.resize(nch);

  std::vector<Psd> psds(nch);
  std::vector<std::array<std::vector<double>, 4>> band_signals(nch);

  for (std::size_t c = 0; c < nch; ++c) {
    const auto& x = data[idx[c]];
    psds[c] = welch_psd(x, fs, cfg.welch);
    const auto segs = welch_segment_spectra(x, fs, cfg.welch);
    q.sef[c] = spectral_edge_frequency(psds[c], cfg.sef_fraction);
    for (std::size_t b = 0; b < kBands.size(); ++b) {
      q.spectral[c][b] = spectral_features(psds[c], segs, kBands[b]);
      band_signals[c][b] = band_filter(x, fs, kBands[b]);
      q.amplitude[c][b] = amplitude_features(band_signals[c][b]);
      q.reeg[c][b] =
          reeg_features(band_signals[c][b], fs, cfg.reeg_window_s, cfg.reeg_overlap);
    }
  }

  q.connectivity.resize(kAsymmetryPairs.size());
  for (std::size_t p = 0; p < kAsymmetryPairs.size(); ++p) {
    const std::size_t li = channel_index(trial, kAsymmetryPairs[p].left);
    const std::size_t ri = channel_index(trial, kAsymmetryPairs[p].right);
    for (std::size_t b = 0; b < kBands.size(); ++b)
      q.connectivity[p][b] =
          connectivity_features(data[li], data[ri], fs, kBands[b], cfg.welch);
  }
  return q;
}

template <typename Getter>
double mean_over_channels_bands(std::size_t nch, Getter get) {
  double acc = 0.0;
  for (std::size_t c = 0; c < nch; ++c)
    for (std::size_t b = 0; b < kBands.size(); ++b) acc += get(c, b);
  return acc / static_cast<double>(nch * kBands.size());
}

template <typename Getter>
double mean_over_pairs_bands(Getter get) {
  double acc = 0.0;
  const std::size_t np = kAsymmetryPairs.size();
  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t b = 0; b < kBands.size(); ++b) acc += get(p, b);
  return acc / static_cast<double>(np * kBands.size());
}

}  // namespace

const std::vector<std::string>& qeeg_reduced_names() {
  static const std::vector<std::string> names = {
      "qeeg.abs_power",       "qeeg.rel_power",   "qeeg.wiener_entropy",
      "qeeg.spectral_diff",   "qeeg.sef95",       "qeeg.total_power",
      "qeeg.amp_sd",          "qeeg.skewness",    "qeeg.kurtosis",
      "qeeg.env_mean",        "qeeg.env_sd",      "qeeg.bsi",
      "qeeg.env_corr",        "qeeg.max_corr_lag", "qeeg.coh_mean",
      "qeeg.coh_max",         "qeeg.coh_argmax",  "qeeg.reeg_mean",
      "qeeg.reeg_median",     "qeeg.reeg_sd",     "qeeg.reeg_cv",
      "qeeg.reeg_skew_median", "qeeg.reeg_p5",    "qeeg.reeg_p95",
      "qeeg.reeg_bw"};
  return names;
}

FeatureVector qeeg_vector(const Trial& trial, const QeegConfig& cfg) {
  const auto idx = montage_indices(trial);
  const std::size_t nch = idx.size();
  const TrialQeeg q = compute_qeeg(trial, cfg);

  FeatureVector fv;
  fv.group = FeatureGroup::qeeg;
  auto cb = [&](auto get) { return mean_over_channels_bands(nch, get); };
  auto pb = [&](auto get) { return mean_over_pairs_bands(get); };

  fv.push("qeeg.abs_power", cb([&](auto c, auto b) { return q.spectral[c][b].abs_power; }));
  fv.push("qeeg.rel_power", cb([&](auto c, auto b) { return q.spectral[c][b].rel_power; }));
  fv.push("qeeg.wiener_entropy",
          cb([&](auto c, auto b) { return q.spectral[c][b].wiener_entropy; }));
  fv.push("qeeg.spectral_diff",
          cb([&](auto c, auto b) { return q.spectral[c][b].spectral_diff; }));
  fv.push("qeeg.sef95", mean(q.sef));
  fv.push("qeeg.total_power",
          cb([&](auto c, auto b) { return q.amplitude[c][b].total_power; }));
  fv.push("qeeg.amp_sd", cb([&](auto c, auto b) { return q.amplitude[c][b].sd; }));
  fv.push("qeeg.skewness", cb([&](auto c, auto b) { return q.amplitude[c][b].skewness; }));
  fv.push("qeeg.kurtosis", cb([&](auto c, auto b) { return q.amplitude[c][b].kurtosis; }));
  fv.push("qeeg.env_mean", cb([&](auto c, auto b) { return q.amplitude[c][b].env_mean; }));
  fv.push("qeeg.env_sd", cb([&](auto c, auto b) { return q.amplitude[c][b].env_sd; }));
  fv.push("qeeg.bsi", pb([&](auto p, auto b) { return q.connectivity[p][b].bsi; }));
  fv.push("qeeg.env_corr", pb([&](auto p, auto b) { return q.connectivity[p][b].env_corr; }));
  fv.push("qeeg.max_corr_lag", pb([&](auto p, auto b) { return q.connectivity[p][b].lag; }));
  fv.push("qeeg.coh_mean", pb([&](auto p, auto b) { return q.connectivity[p][b].coh_mean; }));
  fv.push("qeeg.coh_max", pb([&](auto p, auto b) { return q.connectivity[p][b].coh_max; }));
  fv.push("qeeg.coh_argmax",
          pb([&](auto p, auto b) { return q.connectivity[p][b].coh_argmax; }));
  fv.push("qeeg.reeg_mean", cb([&](auto c, auto b) { return q.reeg[c][b].mean; }));
  fv.push("qeeg.reeg_median", cb([&](auto c, auto b) { return q.reeg[c][b].median; }));
  fv.push("qeeg.reeg_sd", cb([&](auto c, auto b) { return q.reeg[c][b].sd; }));
  fv.push("qeeg.reeg_cv", cb([&](auto c, auto b) { return q.reeg[c][b].cv; }));
  fv.push("qeeg.reeg_skew_median",
          cb([&](auto c, auto b) { return q.reeg[c][b].skew_median; }));
  fv.push("qeeg.reeg_p5", cb([&](auto c, auto b) { return q.reeg[c][b].p5; }));
  fv.push("qeeg.reeg_p95", cb([&](auto c, auto b) { return q.reeg[c][b].p95; }));
  fv.push("qeeg.reeg_bw", cb([&](auto c, auto b) { return q.reeg[c][b].bandwidth; }));
  return fv;
}

FeatureVector qeeg_vector_full(const Trial& trial, const QeegConfig& cfg) {
  const TrialQeeg q = compute_qeeg(trial, cfg);
  const std::size_t nch = kEegChannels.size();

  FeatureVector fv;
  fv.group = FeatureGroup::qeeg;
  for (std::size_t c = 0; c < nch; ++c) {
    const std::string ch = kEegChannels[c];
    for (std::size_t b = 0; b < kBands.size(); ++b) {
      const std::string suffix = std::string(to_string(kBands[b])) + "." + ch;
      fv.push("qeeg.abs_power." + suffix, q.spectral[c][b].abs_power);
      fv.push("qeeg.rel_power." + suffix, q.spectral[c][b].rel_power);
      fv.push("qeeg.wiener_entropy." + suffix, q.spectral[c][b].wiener_entropy);
      fv.push("qeeg.spectral_diff." + suffix, q.spectral[c][b].spectral_diff);
      fv.push("qeeg.total_power." + suffix, q.amplitude[c][b].total_power);
      fv.push("qeeg.amp_sd." + suffix, q.amplitude[c][b].sd);
      fv.push("qeeg.skewness." + suffix, q.amplitude[c][b].skewness);
      fv.push("qeeg.kurtosis." + suffix, q.amplitude[c][b].kurtosis);
      fv.push("qeeg.env_mean." + suffix, q.amplitude[c][b].env_mean);
      fv.push("qeeg.env_sd." + suffix, q.amplitude[c][b].env_sd);
      fv.push("qeeg.reeg_mean." + suffix, q.reeg[c][b].mean);
      fv.push("qeeg.reeg_median." + suffix, q.reeg[c][b].median);
      fv.push("qeeg.reeg_sd." + suffix, q.reeg[c][b].sd);
      fv.push("qeeg.reeg_cv." + suffix, q.reeg[c][b].cv);
      fv.push("qeeg.reeg_skew_median." + suffix, q.reeg[c][b].skew_median);
      fv.push("qeeg.reeg_p5." + suffix, q.reeg[c][b].p5);
      fv.push("qeeg.reeg_p95." + suffix, q.reeg[c][b].p95);
      fv.push("qeeg.reeg_bw." + suffix, q.reeg[c][b].bandwidth);
    }
    fv.push("qeeg.sef95." + ch, q.sef[c]);
  }
  for (std::size_t p = 0; p < kAsymmetryPairs.size(); ++p) {
    const std::string pr =
        std::string(kAsymmetryPairs[p].left) + "_" + kAsymmetryPairs[p].right;
    for (std::size_t b = 0; b < kBands.size(); ++b) {
      const std::string suffix = std::string(to_string(kBands[b])) + "." + pr;
      fv.push("qeeg.bsi." + suffix, q.connectivity[p][b].bsi);
      fv.push("qeeg.env_corr." + suffix, q.connectivity[p][b].env_corr);
      fv.push("qeeg.max_corr_lag." + suffix, q.connectivity[p][b].lag);
      fv.push("qeeg.coh_mean." + suffix, q.connectivity[p][b].coh_mean);
      fv.push("qeeg.coh_max." + suffix, q.connectivity[p][b].coh_max);
      fv.push("qeeg.coh_argmax." + suffix, q.connectivity[p][b].coh_argmax);
    }
  }
  return fv;
}

FeatureVector sef_vector(const Trial& trial, const QeegConfig& cfg) {
  const auto idx = montage_indices(trial);
  const auto data = trial.valid_data();

  FeatureVector fv;
  fv.group = FeatureGroup::frequency;
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const Psd psd = welch_psd(data[idx[c]], trial.sample_rate, cfg.welch);
    fv.push(std::string("welch.sef95.") + kEegChannels[c],
            spectral_edge_frequency(psd, cfg.sef_fraction));
  }
  return fv;
}

const std::vector<QeegManifestRow>& qeeg_manifest() {
  static const std::vector<QeegManifestRow> rows = {
      {"qeeg.abs_power", "absolute spectral power", true, "mean over channels+bands"},
      {"qeeg.rel_power", "relative spectral power", true, "mean over channels+bands"},
      {"qeeg.wiener_entropy", "spectral entropy (Wiener)", true, "mean over channels+bands"},
      {"qeeg.spectral_diff", "difference between consecutive short-time spectra", true,
       "mean over channels+bands"},
      {"qeeg.sef95", "cut-off frequency (95% of spectral power)", false,
       "mean over channels"},
      {"qeeg.total_power", "amplitude: total power", true, "mean over channels+bands"},
      {"qeeg.amp_sd", "amplitude: standard deviation", true, "mean over channels+bands"},
      {"qeeg.skewness", "amplitude: skewness", true, "mean over channels+bands"},
      {"qeeg.kurtosis", "amplitude: kurtosis (inferred from the truncated row)", true,
       "mean over channels+bands"},
      {"qeeg.env_mean", "amplitude: envelope mean", true, "mean over channels+bands"},
      {"qeeg.env_sd", "amplitude: envelope SD", true, "mean over channels+bands"},
      {"qeeg.bsi", "connectivity: brain symmetry index", true, "mean over pairs+bands"},
      {"qeeg.env_corr", "connectivity: envelope correlation", true, "mean over pairs+bands"},
      {"qeeg.max_corr_lag", "connectivity: lag of max correlation", true,
       "mean over pairs+bands"},
      {"qeeg.coh_mean", "connectivity: coherence mean", true, "mean over pairs+bands"},
      {"qeeg.coh_max", "connectivity: coherence maximum", true, "mean over pairs+bands"},
      {"qeeg.coh_argmax", "connectivity: frequency of coherence maximum", true,
       "mean over pairs+bands"},
      {"qeeg.reeg_mean", "range EEG: mean", true, "mean over channels+bands"},
      {"qeeg.reeg_median", "range EEG: median", true, "mean over channels+bands"},
      {"qeeg.reeg_sd", "range EEG: standard deviation", true, "mean over channels+bands"},
      {"qeeg.reeg_cv", "range EEG: coefficient of variation", true,
       "mean over channels+bands"},
      {"qeeg.reeg_skew_median", "range EEG: skew about median", true,
       "mean over channels+bands"},
      {"qeeg.reeg_p5", "range EEG: lower margin (5th percentile)", true,
       "mean over channels+bands"},
      {"qeeg.reeg_p95", "range EEG: upper margin (95th percentile)", true,
       "mean over channels+bands"},
      {"qeeg.reeg_bw", "range EEG: upper minus lower margin", true,
       "mean over channels+bands"},
  };
  return rows;
}

}  // namespace eeganx

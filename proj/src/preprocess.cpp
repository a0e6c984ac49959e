#include "eeganx/preprocess.hpp"

#include <cmath>

#include "eeganx/error.hpp"

namespace eeganx {

namespace {

constexpr double kPi = 3.14159265358979323846;

// unity-DC-gain low-pass: windowed sinc normalized so the taps sum to 1
std::vector<double> lowpass_taps(double cutoff_hz, double sample_rate, int num_taps) {
  const int m = (num_taps - 1) / 2;
  const double fc = cutoff_hz / sample_rate;  // cycles per sample
  std::vector<double> h(static_cast<std::size_t>(num_taps));
  double sum = 0.0;
  for (int n = 0; n < num_taps; ++n) {
    const int k = n - m;
    const double sinc = k == 0 ? 2.0 * fc : std::sin(2.0 * kPi * fc * k) / (kPi * k);
    const double hamming =
        0.54 - 0.46 * std::cos(2.0 * kPi * n / static_cast<double>(num_taps - 1));
    h[static_cast<std::size_t>(n)] = sinc * hamming;
    sum += h[static_cast<std::size_t>(n)];
  }
  for (double& v : h) v /= sum;
  return h;
}

}  // namespace

void FilterSpec::validate(double sample_rate) const {
  if (num_taps < 3 || num_taps % 2 == 0)
    throw Error(errc::bad_argument, "num_taps must be odd and >= 3");
  if (!(low_cut_hz > 0.0) || !(low_cut_hz < high_cut_hz))
    throw Error(errc::bad_argument, "need 0 < low_cut < high_cut");
  if (!(high_cut_hz < sample_rate / 2.0))
    throw Error(errc::bad_argument, "high_cut must be below the Nyquist frequency");
}

std::vector<double> design_bandpass(const FilterSpec& spec, double sample_rate) {
  spec.validate(sample_rate);
  const auto hi = lowpass_taps(spec.high_cut_hz, sample_rate, spec.num_taps);
  const auto lo = lowpass_taps(spec.low_cut_hz, sample_rate, spec.num_taps);
  std::vector<double> h(hi.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = hi[i] - lo[i];
  return h;
}

std::vector<double> fir_filter_zero_phase(std::span<const double> x,
                                          std::span<const double> taps) {
  const std::size_t n = x.size();
  const std::size_t t = taps.size();
  if (n < t)
    throw Error(errc::too_short, "signal shorter than the filter (" + std::to_string(n) +
                                     " < " + std::to_string(t) + " samples)");
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>((t - 1) / 2);
  std::vector<double> y(n, 0.0);
  // y[i] = sum_k taps[k] * x[i + m - k]; out-of-range input treated as zero
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < t; ++k) {
      const std::ptrdiff_t j =
          static_cast<std::ptrdiff_t>(i) + m - static_cast<std::ptrdiff_t>(k);
      if (j >= 0 && j < static_cast<std::ptrdiff_t>(n)) acc += taps[k] * x[j];
    }
    y[i] = acc;
  }
  return y;
}

Recording fir_bandpass(const Recording& rec, const FilterSpec& spec) {
  rec.validate();
  spec.validate(rec.sample_rate);
  const auto taps = design_bandpass(spec, rec.sample_rate);

  Recording out = rec;
  for (std::size_t c = 0; c < rec.data.size(); ++c)
    out.data[c] = fir_filter_zero_phase(rec.data[c], taps);
  out.edge_transient = static_cast<std::size_t>((spec.num_taps - 1) / 2);
  return out;
}

std::vector<Trial> segment_trials(const Recording& rec,
                                  const std::vector<SamRating>& ratings) {
  rec.validate();
  constexpr int kSituations = 6;
  constexpr double kBlockSeconds = 60.0;
  constexpr double kTrialSeconds = 30.0;

  if (!ratings.empty() && ratings.size() != kSituations)
    throw Error(errc::bad_argument, "need one rating per situation (6)");

  const auto fs = rec.sample_rate;
  const auto block = static_cast<std::size_t>(std::llround(kBlockSeconds * fs));
  const auto len = static_cast<std::size_t>(std::llround(kTrialSeconds * fs));
  const std::size_t total = rec.num_samples();
  if (total < static_cast<std::size_t>(kSituations) * block)
    throw Error(errc::too_short,
                "recording too short: need " + std::to_string(kSituations * 60) +
                    " s, have " + std::to_string(rec.duration_s()) + " s");

  std::vector<Trial> trials;
  trials.reserve(kSituations);
  for (int i = 0; i < kSituations; ++i) {
    const std::size_t start = static_cast<std::size_t>(i) * block;
    Trial t;
    t.subject_id = rec.subject_id;
    t.situation = i + 1;
    t.sub_index = 0;
    t.duration_s = kTrialSeconds;
    t.sample_rate = fs;
    t.channels = rec.channels;
    t.data.reserve(rec.data.size());
    for (const auto& ch : rec.data)
      t.data.emplace_back(ch.begin() + static_cast<std::ptrdiff_t>(start),
                          ch.begin() + static_cast<std::ptrdiff_t>(start + len));
    if (!ratings.empty()) t.rating = ratings[static_cast<std::size_t>(i)];

    // a trial only carries transient samples when it abuts the recording edge
    const std::size_t tr = rec.edge_transient;
    if (tr > 0) {
      if (start < tr) t.leading_transient = std::min(tr - start, len);
      const std::size_t end = start + len;
      if (end > total - std::min(tr, total))
        t.trailing_transient = std::min(end - (total - tr), len);
    }
    trials.push_back(std::move(t));
  }
  return trials;
}

std::vector<Trial> subsegment(const Trial& trial, double sub_len_s) {
  trial.validate();
  if (!(sub_len_s > 0.0))
    throw Error(errc::bad_argument, "sub-trial length must be positive");
  const double ratio = trial.duration_s / sub_len_s;
  const auto count = static_cast<std::size_t>(std::llround(ratio));
  if (std::abs(ratio - static_cast<double>(count)) > 1e-9 || count == 0)
    throw Error(errc::bad_argument,
                "sub-trial length must divide the trial duration exactly");
  if (count == 1) return {trial};

  const auto len = static_cast<std::size_t>(std::llround(sub_len_s * trial.sample_rate));
  const std::size_t total = trial.num_samples();
  std::vector<Trial> subs;
  subs.reserve(count);
  for (std::size_t w = 0; w < count; ++w) {
    const std::size_t start = w * len;
    Trial s;
    s.subject_id = trial.subject_id;
    s.situation = trial.situation;
    s.sub_index = static_cast<int>(w);
    s.duration_s = sub_len_s;
    s.sample_rate = trial.sample_rate;
    s.channels = trial.channels;
    s.rating = trial.rating;
    s.label = trial.label;
    s.data.reserve(trial.data.size());
    for (const auto& ch : trial.data)
      s.data.emplace_back(ch.begin() + static_cast<std::ptrdiff_t>(start),
                          ch.begin() + static_cast<std::ptrdiff_t>(start + len));
    if (trial.leading_transient > start)
      s.leading_transient = std::min(trial.leading_transient - start, len);
    const std::size_t end = start + len;
    if (trial.trailing_transient > 0 && end > total - std::min(trial.trailing_transient, total))
      s.trailing_transient = std::min(end - (total - trial.trailing_transient), len);
    subs.push_back(std::move(s));
  }
  return subs;
}

}  // namespace eeganx

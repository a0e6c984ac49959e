#pragma once

#include <complex>
#include <span>
#include <vector>

#include "eeganx/features/common.hpp"
#include "eeganx/recording.hpp"

namespace eeganx {

struct WelchConfig {
  std::size_t segment_len = 0;  // 0 = auto: 256 for long trials, shrinks below
  double overlap = 0.5;         // fraction of segment shared with its neighbor
};

std::size_t welch_auto_segment(std::size_t n);

struct Psd {
  std::vector<double> freqs;  // Hz, 0..Nyquist
  std::vector<double> power;  // one-sided density, units^2/Hz
};

struct SpectralEstimate {
  std::vector<double> freqs;
  std::vector<std::vector<double>> power;  // per channel
};

// Hamming-windowed averaged modified periodograms. The density integrates
// to the mean signal power over 0..Nyquist (within window leakage).
Psd welch_psd(std::span<const double> x, double sample_rate, const WelchConfig& cfg = {});
SpectralEstimate welch_psd(const Trial& trial, const WelchConfig& cfg = {});

// the individual segment periodograms, for short-time spectral differences
std::vector<std::vector<double>> welch_segment_spectra(std::span<const double> x,
                                                       double sample_rate,
                                                       const WelchConfig& cfg = {});

struct CrossSpectra {
  std::vector<double> freqs;
  std::vector<double> sxx, syy;
  std::vector<std::complex<double>> sxy;

  // magnitude-squared coherence per bin, in [0, 1]
  std::vector<double> coherence() const;
};

CrossSpectra welch_cross(std::span<const double> x, std::span<const double> y,
                         double sample_rate, const WelchConfig& cfg = {});

// ---- Table-style qEEG features ----

struct BandSpectralFeatures {
  double abs_power = 0.0;      // PSD integral over the band
  double rel_power = 0.0;      // normalized to total 4-45 Hz power
  double wiener_entropy = 0.0; // geometric / arithmetic mean of in-band bins
  double spectral_diff = 0.0;  // consecutive short-time spectra difference
};

BandSpectralFeatures spectral_features(const Psd& psd,
                                       const std::vector<std::vector<double>>& segment_spectra,
                                       Band band);

// 95% spectral edge within the 4-45 Hz pass-band (the front-end filter
// removes everything below 4 Hz, so the search range is clipped)
double spectral_edge_frequency(const Psd& psd, double fraction = 0.95);

struct AmplitudeFeatures {
  double total_power = 0.0;  // mean square of the band-limited signal
  double sd = 0.0;           // unbiased
  double skewness = 0.0;     // adjusted Fisher-Pearson; 0 when degenerate
  double kurtosis = 0.0;     // excess, bias-adjusted
  double env_mean = 0.0;     // Hilbert envelope, 5% edge margin
  double env_sd = 0.0;
  bool degenerate_skew = false;
};

AmplitudeFeatures amplitude_features(std::span<const double> band_signal);

struct ConnectivityFeatures {
  double bsi = 0.0;         // |(Pl-Pr)/(Pl+Pr)| averaged over bins and pairs
  double env_corr = 0.0;    // Pearson correlation of the envelopes
  double lag = 0.0;         // samples; positive = right delayed w.r.t. left
  double coh_mean = 0.0;
  double coh_max = 0.0;
  double coh_argmax = 0.0;  // Hz
};

ConnectivityFeatures connectivity_features(std::span<const double> left,
                                           std::span<const double> right,
                                           double sample_rate, Band band,
                                           const WelchConfig& cfg = {});

struct ReegFeatures {
  double mean = 0.0;
  double median = 0.0;
  double sd = 0.0;
  double cv = 0.0;           // sd / mean
  double skew_median = 0.0;  // (mean - median) / sd
  double p5 = 0.0;
  double p95 = 0.0;
  double bandwidth = 0.0;    // p95 - p5
};

// range-EEG: peak-to-peak amplitude over 2 s windows with 50% overlap;
// trials shorter than one window fall back to a single full-trial window
ReegFeatures reeg_features(std::span<const double> band_signal, double sample_rate,
                           double window_s = 2.0, double overlap = 0.5);

// band-limited copy of one channel (windowed-sinc FIR, taps auto-shrink for
// short trials; the gamma edge is clipped just below Nyquist)
std::vector<double> band_filter(std::span<const double> x, double sample_rate, Band band);

struct QeegConfig {
  WelchConfig welch{};
  double reeg_window_s = 2.0;
  double reeg_overlap = 0.5;
  double sef_fraction = 0.95;
};

// The reduced 25-value vector: one value per Table-style feature name,
// averaged across channels, electrode pairs, and bands.
FeatureVector qeeg_vector(const Trial& trial, const QeegConfig& cfg = {});

// full resolution (per channel / pair, per band where applicable)
FeatureVector qeeg_vector_full(const Trial& trial, const QeegConfig& cfg = {});

// per-channel spectral edge frequencies (feeds the frequency group)
FeatureVector sef_vector(const Trial& trial, const QeegConfig& cfg = {});

// the 25 reduced feature names, in emission order
const std::vector<std::string>& qeeg_reduced_names();

struct QeegManifestRow {
  std::string name;
  std::string table_row;       // which quantitative-feature row it comes from
  bool per_band = false;
  std::string channel_policy;  // "mean over channels", "mean over pairs", ...
};

const std::vector<QeegManifestRow>& qeeg_manifest();

}  // namespace eeganx

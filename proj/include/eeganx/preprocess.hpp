#pragma once

#include <span>
#include <vector>

#include "eeganx/recording.hpp"

namespace eeganx {

struct FilterSpec {
  double low_cut_hz = 4.0;
  double high_cut_hz = 45.0;
  int num_taps = 129;  // odd, so the group delay is an integer sample count

  void validate(double sample_rate) const;
};

// Windowed-sinc band-pass taps (Hamming window), built as the difference of
// two unity-DC low-passes so the DC gain is exactly zero.
std::vector<double> design_bandpass(const FilterSpec& spec, double sample_rate);

// Zero-phase application: forward filter, then shift by the integer group
// delay. Output length equals input length; the first/last (num_taps-1)/2
// samples are transient.
std::vector<double> fir_filter_zero_phase(std::span<const double> x,
                                          std::span<const double> taps);

Recording fir_bandpass(const Recording& rec, const FilterSpec& spec);

// Six 30 s trials, one per 60 s stimulation block, measured from the start
// of the recording. Ratings (one per situation) are optional.
std::vector<Trial> segment_trials(const Recording& rec,
                                  const std::vector<SamRating>& ratings = {});

// Non-overlapping sub-windows; each inherits the parent's ratings and label.
std::vector<Trial> subsegment(const Trial& trial, double sub_len_s);

}  // namespace eeganx

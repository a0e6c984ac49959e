#pragma once

#include <complex>
#include <span>
#include <vector>

namespace eeganx {

// Thin FFTW wrappers. Plan creation is serialized internally, so these are
// safe to call from multiple threads.

std::vector<std::complex<double>> fft(std::span<const double> x);
std::vector<std::complex<double>> fft(std::span<const std::complex<double>> x);
std::vector<std::complex<double>> ifft(std::span<const std::complex<double>> X);

// analytic signal via the frequency-domain Hilbert transform
std::vector<std::complex<double>> analytic_signal(std::span<const double> x);

// |analytic signal|, the instantaneous amplitude
std::vector<double> hilbert_envelope(std::span<const double> x);

}  // namespace eeganx

#include "eeganx/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "eeganx/error.hpp"

namespace eeganx {

namespace {
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

std::vector<std::complex<double>> fft(std::span<const std::complex<double>> x) {
  const std::size_t n = x.size();
  if (n == 0) throw Error(errc::bad_argument, "FFT of empty sequence");
  std::vector<std::complex<double>> in(x.begin(), x.end());
  std::vector<std::complex<double>> out(n);
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n),
                                      reinterpret_cast<fftw_complex*>(in.data()),
                                      reinterpret_cast<fftw_complex*>(out.data()),
                                      FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }
  return out;
}

std::vector<std::complex<double>> fft(std::span<const double> x) {
  std::vector<std::complex<double>> cx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) cx[i] = {x[i], 0.0};
  return fft(std::span<const std::complex<double>>(cx));
}

std::vector<std::complex<double>> ifft(std::span<const std::complex<double>> X) {
  const std::size_t n = X.size();
  if (n == 0) throw Error(errc::bad_argument, "IFFT of empty sequence");
  std::vector<std::complex<double>> in(X.begin(), X.end());
  std::vector<std::complex<double>> out(n);
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n),
                                      reinterpret_cast<fftw_complex*>(in.data()),
                                      reinterpret_cast<fftw_complex*>(out.data()),
                                      FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& v : out) v *= scale;
  return out;
}

std::vector<std::complex<double>> analytic_signal(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 2) throw Error(errc::too_short, "analytic signal needs at least 2 samples");
  auto X = fft(x);
  // zero the negative frequencies, double the positive ones
  const std::size_t half = n / 2;
  for (std::size_t k = 1; k < (n + 1) / 2; ++k) X[k] *= 2.0;
  for (std::size_t k = half + 1; k < n; ++k) X[k] = 0.0;
  // DC stays; for even n the Nyquist bin stays single as well
  return ifft(X);
}

std::vector<double> hilbert_envelope(std::span<const double> x) {
  const auto a = analytic_signal(x);
  std::vector<double> env(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) env[i] = std::abs(a[i]);
  return env;
}

}  // namespace eeganx

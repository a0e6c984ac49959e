#include "eeganx/dwt.hpp"

#include <array>
#include <cmath>
#include <string>

#include "eeganx/error.hpp"

namespace eeganx {

namespace {

// db5 scaling (reconstruction low-pass) filter
constexpr std::array<double, 10> kDb5 = {
    0.160102397974125,     0.6038292697974729,   0.7243085284385744,
    0.13842814590110342,   -0.24229488706619015, -0.03224486958502952,
    0.07757149384006515,   -0.006241490213011705, -0.012580751999015526,
    0.003335725285001549};

constexpr int kLen = 10;

struct FilterBank {
  std::array<double, kLen> dec_lo, dec_hi, rec_lo, rec_hi;
  FilterBank() {
    for (int k = 0; k < kLen; ++k) {
      dec_lo[k] = kDb5[kLen - 1 - k];
      dec_hi[k] = (k % 2 == 0) ? -kDb5[k] : kDb5[k];
      rec_lo[k] = kDb5[k];
      rec_hi[k] = (k % 2 == 0) ? kDb5[kLen - 1 - k] : -kDb5[kLen - 1 - k];
    }
  }
};

const FilterBank& bank() {
  static const FilterBank fb;
  return fb;
}

// half-point symmetric extension by (kLen-1) samples on each side
std::vector<double> sym_extend(std::span<const double> x) {
  const std::size_t p = kLen - 1;
  std::vector<double> ext;
  ext.reserve(x.size() + 2 * p);
  for (std::size_t i = 0; i < p; ++i) ext.push_back(x[p - 1 - i]);
  ext.insert(ext.end(), x.begin(), x.end());
  for (std::size_t i = 0; i < p; ++i) ext.push_back(x[x.size() - 1 - i]);
  return ext;
}

// analysis step: valid convolution of the extension, odd-phase downsampling
void analyze_sym(std::span<const double> x, std::vector<double>& a,
                 std::vector<double>& d) {
  const std::size_t n = x.size();
  const auto ext = sym_extend(x);
  const std::size_t out = (n + kLen - 1) / 2;
  a.assign(out, 0.0);
  d.assign(out, 0.0);
  const auto& fb = bank();
  for (std::size_t k = 0; k < out; ++k) {
    const std::size_t m = 2 * k + 1;  // position in the valid convolution
    double sa = 0.0, sd = 0.0;
    for (int j = 0; j < kLen; ++j) {
      const double v = ext[m + kLen - 1 - static_cast<std::size_t>(j)];
      sa += fb.dec_lo[j] * v;
      sd += fb.dec_hi[j] * v;
    }
    a[k] = sa;
    d[k] = sd;
  }
}

// synthesis step: upsample, full convolution, crop kLen-2 from each side,
// trim to the original length
std::vector<double> synthesize_sym(std::span<const double> a, std::span<const double> d,
                                   std::size_t original_len) {
  const std::size_t n = a.size();
  const std::size_t ulen = 2 * n - 1;
  const std::size_t rlen = ulen + kLen - 1;
  std::vector<double> r(rlen, 0.0);
  const auto& fb = bank();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t t0 = 2 * k;
    for (int j = 0; j < kLen; ++j) {
      r[t0 + static_cast<std::size_t>(j)] += fb.rec_lo[j] * a[k] + fb.rec_hi[j] * d[k];
    }
  }
  const std::size_t crop = kLen - 2;
  const std::size_t out_len = 2 * n - kLen + 2;
  std::vector<double> y(r.begin() + static_cast<std::ptrdiff_t>(crop),
                        r.begin() + static_cast<std::ptrdiff_t>(crop + out_len));
  if (y.size() > original_len) y.resize(original_len);
  if (y.size() != original_len)
    throw Error(errc::bad_argument, "inverse DWT produced an unexpected length");
  return y;
}

void analyze_per(std::span<const double> x_in, std::vector<double>& a,
                 std::vector<double>& d) {
  std::vector<double> x(x_in.begin(), x_in.end());
  if (x.size() % 2) x.push_back(x.back());  // repeat-pad odd lengths
  const std::size_t n = x.size();
  const std::size_t out = n / 2;
  a.assign(out, 0.0);
  d.assign(out, 0.0);
  const auto& fb = bank();
  for (std::size_t k = 0; k < out; ++k) {
    double sa = 0.0, sd = 0.0;
    for (int j = 0; j < kLen; ++j) {
      // same odd-phase alignment as the symmetric mode, indices wrapped
      const std::ptrdiff_t idx = static_cast<std::ptrdiff_t>(2 * k + 1) - j;
      const std::size_t wrapped =
          static_cast<std::size_t>(((idx % static_cast<std::ptrdiff_t>(n)) +
                                    static_cast<std::ptrdiff_t>(n)) %
                                   static_cast<std::ptrdiff_t>(n));
      sa += fb.dec_lo[j] * x[wrapped];
      sd += fb.dec_hi[j] * x[wrapped];
    }
    a[k] = sa;
    d[k] = sd;
  }
}

std::vector<double> synthesize_per(std::span<const double> a, std::span<const double> d,
                                   std::size_t original_len) {
  const std::size_t n = a.size();
  const std::size_t ulen = 2 * n;
  std::vector<double> r(ulen, 0.0);
  const auto& fb = bank();
  for (std::size_t k = 0; k < n; ++k) {
    for (int j = 0; j < kLen; ++j) {
      const std::size_t t = (2 * k + static_cast<std::size_t>(j)) % ulen;
      r[t] += fb.rec_lo[j] * a[k] + fb.rec_hi[j] * d[k];
    }
  }
  const std::size_t crop = kLen - 2;
  std::vector<double> y(ulen);
  for (std::size_t i = 0; i < ulen; ++i) y[i] = r[(i + crop) % ulen];
  if (y.size() > original_len) y.resize(original_len);
  return y;
}

}  // namespace

std::span<const double> db5_scaling_filter() { return {kDb5.data(), kDb5.size()}; }

Dwt1D dwt_db5(std::span<const double> x, int levels, WaveletMode mode) {
  if (levels < 1) throw Error(errc::bad_argument, "need at least one DWT level");
  if (x.size() < (1u << levels))
    throw Error(errc::too_short, "signal too short for " + std::to_string(levels) +
                                     "-level DWT: " + std::to_string(x.size()) + " samples");

  Dwt1D dec;
  dec.mode = mode;
  std::vector<double> current(x.begin(), x.end());
  for (int l = 0; l < levels; ++l) {
    if (current.size() < kLen)
      throw Error(errc::too_short,
                  "signal shorter than the wavelet filter at level " + std::to_string(l + 1));
    dec.level_input_len.push_back(current.size());
    std::vector<double> a, d;
    if (mode == WaveletMode::symmetric)
      analyze_sym(current, a, d);
    else
      analyze_per(current, a, d);
    dec.details.push_back(std::move(d));
    current = std::move(a);
  }
  dec.approx = std::move(current);
  return dec;
}

std::vector<double> idwt_db5(const Dwt1D& dec) {
  if (dec.details.empty()) throw Error(errc::bad_argument, "empty decomposition");
  std::vector<double> a = dec.approx;
  for (int l = dec.levels() - 1; l >= 0; --l) {
    const auto& d = dec.details[static_cast<std::size_t>(l)];
    const std::size_t target = dec.level_input_len[static_cast<std::size_t>(l)];
    if (a.size() != d.size())
      throw Error(errc::bad_argument, "approximation/detail length mismatch at level " +
                                          std::to_string(l + 1));
    a = dec.mode == WaveletMode::symmetric ? synthesize_sym(a, d, target)
                                           : synthesize_per(a, d, target);
  }
  return a;
}

}  // namespace eeganx

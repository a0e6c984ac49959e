#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace eeganx {

// Daubechies-5 pyramid decomposition. The symmetric mode (half-point
// reflection) is the default; the periodic mode keeps the filter bank
// orthogonal, which the energy-bookkeeping checks rely on.
enum class WaveletMode { symmetric, periodic };

struct Dwt1D {
  std::vector<std::vector<double>> details;  // details[0] = D1 .. details[L-1] = D_levels
  std::vector<double> approx;                // A_levels
  std::vector<std::size_t> level_input_len;  // signal length entering each level
  WaveletMode mode = WaveletMode::symmetric;

  int levels() const { return static_cast<int>(details.size()); }
};

Dwt1D dwt_db5(std::span<const double> x, int levels = 5,
              WaveletMode mode = WaveletMode::symmetric);

std::vector<double> idwt_db5(const Dwt1D& dec);

// scaling filter, exposed for the orthonormality checks in the tests
std::span<const double> db5_scaling_filter();

}  // namespace eeganx

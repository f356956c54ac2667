#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "nfdm/errors.hpp"

namespace nfdm {

/// Uniform real grid, start + i*step for i in [0, count).
struct UniformGrid {
  double start = 0.0;
  double step = 0.0;
  std::size_t count = 0;

  double operator[](std::size_t i) const { return start + step * static_cast<double>(i); }
  double back() const { return (*this)[count - 1]; }
  double span() const { return step * static_cast<double>(count); }

  std::vector<double> values() const {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = (*this)[i];
    return v;
  }

  /// Symmetric about 0: odd count centered on 0, or even FFT-style [-X, X).
  bool symmetric(double tol = 1e-9) const {
    if (count == 0 || step <= 0.0) return false;
    const double mid = start + step * static_cast<double>(count - 1) / 2.0;
    const double half = (count % 2 == 0) ? step / 2.0 : 0.0;
    return std::abs(mid + half) <= tol * step * static_cast<double>(count);
  }

  /// Index of the grid point closest to x; throws if x is outside the span.
  std::size_t nearest_index(double x) const {
    if (count == 0) throw GridMismatchError("empty grid");
    const double u = (x - start) / step;
    if (u < -0.5 || u > static_cast<double>(count - 1) + 0.5)
      throw GridMismatchError("point outside grid span");
    const auto i = static_cast<long>(std::lround(u));
    return static_cast<std::size_t>(std::min<long>(std::max<long>(i, 0), static_cast<long>(count - 1)));
  }
};

/// Even-count grid symmetric about 0 covering [-half_span, half_span).
inline UniformGrid symmetric_grid(double half_span, std::size_t count) {
  const double step = 2.0 * half_span / static_cast<double>(count);
  return {-half_span, step, count};
}

}  // namespace nfdm

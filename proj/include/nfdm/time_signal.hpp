#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "nfdm/errors.hpp"

namespace nfdm {

using cplx = std::complex<double>;

/// Complex baseband field samples on a uniform time grid.
/// Instantaneous power at sample n is power_scale * |samples[n]|^2 (W).
struct TimeSignal {
  std::vector<cplx> samples;
  double dt = 0.0;          ///< seconds per sample
  double t0 = 0.0;          ///< time of sample 0 (s)
  double power_scale = 1.0; ///< W per unit^2

  std::size_t size() const { return samples.size(); }
  double window() const { return dt * static_cast<double>(samples.size()); }

  double energy() const {  // J
    double e = 0.0;
    for (const auto& s : samples) e += std::norm(s);
    return e * power_scale * dt;
  }

  double average_power() const {  // W over the window
    if (samples.empty()) return 0.0;
    return energy() / window();
  }

  /// Same field with samples in sqrt(W) and power_scale folded to 1.
  TimeSignal physical() const {
    TimeSignal out = *this;
    const double s = std::sqrt(power_scale);
    for (auto& x : out.samples) x *= s;
    out.power_scale = 1.0;
    return out;
  }

  void check_finite() const {
    for (const auto& s : samples)
      if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw Error("non-finite sample in time signal");
  }
};

inline double watts_to_dbm(double w) { return 10.0 * std::log10(w * 1e3); }
inline double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }

}  // namespace nfdm

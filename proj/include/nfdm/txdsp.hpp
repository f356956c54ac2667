#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "nfdm/params.hpp"
#include "nfdm/qam.hpp"
#include "nfdm/spectrum.hpp"

namespace nfdm {

inline double sinc_arg(double x) {  // sin(x)/x
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

/// Default synthesis/diagnostic grid: spans 4x the occupied nonlinear band
/// with 8 points per subcarrier spacing, subcarrier centers on-grid.
inline UniformGrid default_lambda_grid(const SignalPlan& plan, int points_per_spacing = 8,
                                       double span_factor = 4.0) {
  const double spacing = plan.compression_alpha * kPi * plan.Ts() / plan.burst_T0;
  const double step = spacing / points_per_spacing;
  const double half = span_factor * plan.lambda_band();
  auto n = static_cast<std::size_t>(std::ceil(half / step));
  return {-step * static_cast<double>(n), step, 2 * n};
}

/// b-modulated spectrum of block m:
///   b(l) = A sum_k c_{m,k} sin(l T0/Ts + k a pi)/(l T0/Ts + k a pi)
///            * exp(-2 j m l T1/Ts)
/// with k running over [-N/2, N/2).  The occupied band scales as B * alpha.
inline NfdSpectrum synth_b_spectrum(const SymbolBlock& block, int m, const SignalPlan& plan,
                                    const UniformGrid& lambda_grid) {
  const int n = plan.n_subcarriers_N;
  if (block.n_subcarriers != n) throw Error("synth_b_spectrum: symbol block shape mismatch");
  const cplx* c = block.block(m);
  const double t0_ts = plan.burst_T0 / plan.Ts();
  const double t1_ts = plan.block_T1 / plan.Ts();
  const double a_pi = plan.compression_alpha * kPi;

  NfdSpectrum spec;
  spec.lambda_grid = lambda_grid;
  spec.b.resize(lambda_grid.count);
  for (std::size_t i = 0; i < lambda_grid.count; ++i) {
    const double lam = lambda_grid[i];
    const double x0 = lam * t0_ts;
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const double k = static_cast<double>(j - n / 2);
      acc += c[j] * sinc_arg(x0 + k * a_pi);
    }
    const double ramp = -2.0 * static_cast<double>(m) * lam * t1_ts;
    spec.b[i] = plan.amplitude_A * acc * std::polar(1.0, ramp);
  }
  if (spec.max_abs_b() >= 1.0)
    throw BModAmplitudeError("synthesized |b| reached " + std::to_string(spec.max_abs_b()) +
                             "; amplitude A too large for b-modulation");
  return spec;
}

/// Returns max |b| over the grid; rejects spectra within `margin` of the
/// b-modulation limit |b| = 1.
inline double check_b_feasibility(const NfdSpectrum& spec, double margin = 0.01) {
  const double m = spec.max_abs_b();
  if (m >= 1.0 - margin)
    throw BModAmplitudeError("max|b| = " + std::to_string(m) + " exceeds feasibility margin " +
                             std::to_string(1.0 - margin));
  return m;
}

/// Transmitter-side pre-dispersion compensation: reverses half of the
/// nonlinear-domain channel response exp(+4 j l^2 L) accumulated over
/// `total_distance_norm`.  |b| is unchanged pointwise.
inline NfdSpectrum apply_pdc(NfdSpectrum spec, double total_distance_norm) {
  if (total_distance_norm < 0.0) throw Error("apply_pdc: negative distance");
  for (std::size_t i = 0; i < spec.lambda_grid.count; ++i) {
    const double lam = spec.lambda_grid[i];
    spec.b[i] *= std::polar(1.0, -2.0 * lam * lam * total_distance_norm);
  }
  return spec;
}

/// Width of the band where |b| stays within `drop_db` of its peak.
inline double occupied_bandwidth(const NfdSpectrum& spec, double drop_db = 20.0) {
  const double thresh = spec.max_abs_b() * std::pow(10.0, -drop_db / 20.0);
  std::size_t lo = spec.b.size(), hi = 0;
  for (std::size_t i = 0; i < spec.b.size(); ++i) {
    if (std::abs(spec.b[i]) >= thresh) {
      lo = std::min(lo, i);
      hi = std::max(hi, i);
    }
  }
  if (lo > hi) return 0.0;
  return spec.lambda_grid[hi] - spec.lambda_grid[lo];
}

}  // namespace nfdm

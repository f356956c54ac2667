#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "nfdm/errors.hpp"

namespace nfdm {

inline constexpr double kSpeedOfLight = 299792458.0;      // m/s
inline constexpr double kPlanck = 6.62607015e-34;         // J s
inline constexpr double kPi = std::numbers::pi;

/// Burst layout and modulation parameters of one NFDM/FTN-NFDM signal.
struct SignalPlan {
  double bandwidth_B = 32e9;      ///< occupied bandwidth at alpha = 1 (Hz)
  int n_subcarriers_N = 16;
  double compression_alpha = 1.0; ///< in (0, 1]; 1 means plain NFDM
  int qam_order = 16;             ///< 4, 16 or 64
  double burst_T0 = 0.5e-9;       ///< useful burst duration (s)
  double block_T1 = 2.5e-9;       ///< burst + guard (s)
  double norm_time_Ts = 0.0;      ///< normalization time; 0 = T0/(2*pi)
  double amplitude_A = 0.2;       ///< b-spectrum amplitude scale
  bool pdc_enabled = true;

  double guard_TGI() const { return block_T1 - burst_T0; }
  double Ts() const { return norm_time_Ts > 0.0 ? norm_time_Ts : burst_T0 / (2.0 * kPi); }

  /// Subcarrier center in normalized lambda, k in [-N/2, N/2).
  double lambda_center(int k) const {
    return -static_cast<double>(k) * compression_alpha * kPi * Ts() / burst_T0;
  }
  /// Half-extent of the occupied nonlinear band (outermost center + one lobe).
  double lambda_band() const {
    const double spacing = compression_alpha * kPi * Ts() / burst_T0;
    return (static_cast<double>(n_subcarriers_N) / 2.0 + 1.0) * spacing;
  }
};

/// Link description: spans, fiber coefficients, amplifier, filter.
struct FiberPlan {
  double span_length_km = 80.0;
  int n_spans = 12;
  double loss_db_per_km = 0.2;
  double dispersion_D = 16.8;      ///< ps/(nm km)
  double gamma_nl = 1.3;           ///< 1/(W km)
  double amp_noise_figure_db = 5.0;
  double obpf_bandwidth = 40e9;    ///< two-sided (Hz)
  double wavelength_ref = 1550e-9; ///< m

  double total_length_m() const { return span_length_km * 1e3 * n_spans; }
  double span_length_m() const { return span_length_km * 1e3; }
  double loss_nepers_per_m() const { return loss_db_per_km * std::log(10.0) / 10.0 / 1e3; }
  double gamma_per_w_m() const { return gamma_nl * 1e-3; }
  double beta2() const;  // s^2/m, derived from D
  double span_gain_linear() const { return std::exp(loss_nepers_per_m() * span_length_m()); }
};

/// beta2 = -D lambda^2 / (2 pi c).  D in ps/(nm km), wavelength in m.
inline double dispersion_to_beta2(double dispersion_D, double wavelength) {
  if (wavelength <= 0.0) throw Error("wavelength must be positive");
  const double d_si = dispersion_D * 1e-6;  // s/m^2
  return -d_si * wavelength * wavelength / (2.0 * kPi * kSpeedOfLight);
}

inline double FiberPlan::beta2() const { return dispersion_to_beta2(dispersion_D, wavelength_ref); }

/// Dispersive guard interval 2 pi B |beta2| L, halved under pre-dispersion
/// compensation.
inline double guard_interval(double bandwidth_B, double beta2, double length_m, bool pdc) {
  if (bandwidth_B < 0.0 || length_m < 0.0) throw Error("guard_interval: negative input");
  double gi = 2.0 * kPi * bandwidth_B * std::abs(beta2) * length_m;
  if (pdc) gi *= 0.5;
  return gi;
}

/// Normalized spectral-efficiency estimate, symbol/s/Hz:
///   SE = 1 / (alpha + c pi B^2 |beta2| L / N),  c = 1 with PDC, 2 without.
/// Reduces to the plain-NFDM bound at alpha = 1 and approaches 1/alpha as
/// N grows.
inline double normalized_se(int n_subcarriers, double alpha, double bandwidth_B,
                            double beta2, double length_m, bool pdc) {
  if (n_subcarriers < 1) throw Error("normalized_se: N must be >= 1");
  if (alpha <= 0.0 || alpha > 1.0) throw Error("normalized_se: alpha out of (0,1]");
  const double c = pdc ? 1.0 : 2.0;
  const double penalty =
      c * kPi * bandwidth_B * bandwidth_B * std::abs(beta2) * length_m / n_subcarriers;
  return 1.0 / (alpha + penalty);
}

/// SE actually realized by a burst layout: N symbols per block time per Hz.
inline double layout_se(int n_subcarriers, double block_T1, double bandwidth_B) {
  return static_cast<double>(n_subcarriers) / (block_T1 * bandwidth_B);
}

inline double net_rate(int n_subcarriers, int qam_order, double block_T1) {
  if (qam_order < 2 || (qam_order & (qam_order - 1)) != 0)
    throw Error("net_rate: qam_order must be a power of two");
  return static_cast<double>(n_subcarriers) * std::log2(static_cast<double>(qam_order)) / block_T1;
}

/// Scales mapping the physical lossy link onto the dimensionless focusing
/// NLSE  q_l = j q_tt + 2 j |q|^2 q  used by the nft module:
///   tau = t / Ts,  l = z / Z0,  q = A / sqrt(P0),
///   Z0 = 2 Ts^2 / |beta2|,  P0 = 2 / (gamma_eff Z0),
/// with gamma_eff the per-span path average of the Kerr coefficient.
struct NormalizationMap {
  double time_scale_Ts = 0.0;     // s
  double distance_scale_Z0 = 0.0; // m
  double power_scale_P0 = 0.0;    // W
  double gamma_effective = 0.0;   // 1/(W km)

  double to_norm_distance(double z_m) const { return z_m / distance_scale_Z0; }
};

/// Path-averaged nonlinearity factor (1 - e^(-aL)) / (aL), a in nepers/m.
inline double path_average_factor(double loss_nepers_per_m, double span_length_m) {
  const double al = loss_nepers_per_m * span_length_m;
  if (al <= 0.0) return 1.0;
  return (1.0 - std::exp(-al)) / al;
}

inline NormalizationMap build_normalization(const SignalPlan& signal, const FiberPlan& fiber) {
  const double ts = signal.Ts();
  if (ts <= 0.0) throw Error("build_normalization: Ts must be positive");
  const double b2 = std::abs(fiber.beta2());
  if (b2 <= 0.0) throw Error("build_normalization: beta2 must be nonzero");
  NormalizationMap map;
  map.time_scale_Ts = ts;
  map.distance_scale_Z0 = 2.0 * ts * ts / b2;
  const double eta = path_average_factor(fiber.loss_nepers_per_m(), fiber.span_length_m());
  map.gamma_effective = fiber.gamma_nl * eta;
  const double geff_si = map.gamma_effective * 1e-3;  // 1/(W m)
  map.power_scale_P0 = 2.0 / (geff_si * map.distance_scale_Z0);
  return map;
}

/// Layout consistency checks; `slack` tolerates the paper-style rounding of
/// the guard interval (the quoted 2 ns guard vs the computed 2.07 ns).
inline void validate_plans(const SignalPlan& s, const FiberPlan& f, double slack = 0.10) {
  if (s.compression_alpha <= 0.0 || s.compression_alpha > 1.0)
    throw ConfigError("alpha must be in (0, 1]");
  if (s.qam_order != 4 && s.qam_order != 16 && s.qam_order != 64)
    throw ConfigError("qam_order must be 4, 16 or 64");
  if (s.bandwidth_B <= 0.0) throw ConfigError("bandwidth must be positive");
  if (s.burst_T0 <= 0.0 || s.block_T1 <= s.burst_T0)
    throw ConfigError("need block_T1 > burst_T0 > 0");
  if (s.amplitude_A <= 0.0) throw ConfigError("amplitude must be positive");
  const double n_eff = s.burst_T0 * s.bandwidth_B / s.compression_alpha;
  if (std::abs(n_eff - s.n_subcarriers_N) > 0.02 * n_eff)
    throw ConfigError("N * alpha != T0 * B: subcarrier count, alpha, burst and "
                      "bandwidth are inconsistent (expected N near " +
                      std::to_string(n_eff) + ")");
  if (f.n_spans < 0 || f.span_length_km < 0.0) throw ConfigError("invalid span layout");
  const double required =
      guard_interval(s.bandwidth_B, f.beta2(), f.total_length_m(), s.pdc_enabled);
  if (s.guard_TGI() < (1.0 - slack) * required)
    throw ConfigError("guard interval " + std::to_string(s.guard_TGI() * 1e9) +
                      " ns is below the dispersive requirement " +
                      std::to_string(required * 1e9) + " ns");
}

}  // namespace nfdm

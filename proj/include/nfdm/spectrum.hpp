#pragma once

#include <complex>
#include <vector>

#include "nfdm/grid.hpp"
#include "nfdm/time_signal.hpp"

namespace nfdm {

/// Sampled continuous nonlinear spectrum b(lambda) on a uniform grid,
/// optionally with the companion coefficient a(lambda).
struct NfdSpectrum {
  UniformGrid lambda_grid;
  std::vector<cplx> b;
  std::vector<cplx> a;  ///< empty unless computed

  bool has_a() const { return !a.empty(); }

  double max_abs_b() const {
    double m = 0.0;
    for (const auto& v : b) m = std::max(m, std::abs(v));
    return m;
  }
};

/// Forward-NFT output: both scattering coefficients on the query grid.
/// On the real axis |a|^2 + |b|^2 = 1 up to solver tolerance.
struct ScatteringData {
  UniformGrid lambda_grid;
  std::vector<cplx> a;
  std::vector<cplx> b;

  double max_unimodularity_defect() const {
    double m = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i)
      m = std::max(m, std::abs(std::norm(a[i]) + std::norm(b[i]) - 1.0));
    return m;
  }
};

}  // namespace nfdm

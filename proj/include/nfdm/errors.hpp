#pragma once

#include <stdexcept>
#include <string>

namespace nfdm {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// max|b| reached or exceeded the b-modulation feasibility limit.
struct BModAmplitudeError : Error {
  using Error::Error;
};

/// Burst energy leaked into the edges of the processing window.
struct EdgeEnergyError : Error {
  using Error::Error;
};

/// Inverse-scattering solve did not meet its residual tolerance.
struct ConvergenceError : Error {
  using Error::Error;
};

/// Nonlinear phase per split step exceeded the configured cap.
struct StepSizeError : Error {
  using Error::Error;
};

/// Interference matrix too ill-conditioned for reliable detection.
struct IllConditionedError : Error {
  using Error::Error;
};

/// Requested spectral sample not representable on the given grid.
struct GridMismatchError : Error {
  using Error::Error;
};

/// Configuration file is malformed or inconsistent.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace nfdm

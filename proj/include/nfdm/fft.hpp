#pragma once

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <map>
#include <mutex>
#include <vector>

#include "nfdm/params.hpp"
#include "nfdm/time_signal.hpp"

namespace nfdm {

/// Shared FFTW plans, one pair per transform size.  Plan creation is
/// serialized; execution uses the new-array interface and is safe from
/// concurrent workers on distinct buffers.
class Fft {
 public:
  static void forward(std::vector<cplx>& data) { run(data, FFTW_FORWARD); }
  static void inverse(std::vector<cplx>& data) {
    run(data, FFTW_BACKWARD);
    const double s = 1.0 / static_cast<double>(data.size());
    for (auto& x : data) x *= s;
  }

 private:
  struct Plans {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
  };

  static void run(std::vector<cplx>& data, int sign) {
    if (data.empty()) return;
    const Plans& p = plans_for(data.size());
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(sign == FFTW_FORWARD ? p.fwd : p.bwd, buf, buf);
  }

  static const Plans& plans_for(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, Plans> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
      std::vector<cplx> scratch(n);
      auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
      Plans p;
      p.fwd = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
      p.bwd = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_BACKWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
      it = cache.emplace(n, p).first;
    }
    return it->second;
  }
};

/// Angular frequency of FFT bin k for an n-point grid with spacing dt,
/// wrap-around ordering (bin 0 = DC, negative frequencies in the top half).
inline double fft_omega(std::size_t k, std::size_t n, double dt) {
  const auto ik = static_cast<long>(k);
  const auto in = static_cast<long>(n);
  const long kk = 2 * ik < in ? ik : ik - in;
  return 2.0 * kPi * static_cast<double>(kk) / (static_cast<double>(n) * dt);
}

}  // namespace nfdm

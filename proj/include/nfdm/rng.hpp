#pragma once

#include <cstdint>
#include <random>

namespace nfdm {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic substream derivation: the stream for a given
/// (seed, tag...) tuple is independent of evaluation order, which keeps
/// Monte-Carlo results identical for any worker schedule.
inline std::uint64_t derive_seed(std::uint64_t seed) { return splitmix64(seed); }

template <typename... Tags>
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, Tags... rest) {
  return derive_seed(splitmix64(seed ^ splitmix64(tag)), rest...);
}

struct RngStream {
  std::mt19937_64 engine;

  explicit RngStream(std::uint64_t seed) : engine(seed) {}

  template <typename... Tags>
  static RngStream of(std::uint64_t seed, Tags... tags) {
    return RngStream(derive_seed(seed, static_cast<std::uint64_t>(tags)...));
  }

  double gaussian() {
    // Explicit Box-Muller keeps the draw sequence library-independent.
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 1e-300);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

  double uniform() {  // in [0, 1)
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
  }

 private:
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace nfdm

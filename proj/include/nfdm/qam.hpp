#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "nfdm/errors.hpp"
#include "nfdm/time_signal.hpp"

namespace nfdm {

/// Square-QAM constellation with unit average energy and per-dimension Gray
/// labels.  Point index equals the integer formed by the symbol's bits
/// (I bits first, MSB first), so index <-> bits is trivial.
///
/// Per-dimension Gray tables (bit pattern -> level):
///   1 bit : 0 -> +1, 1 -> -1
///   2 bits: 00 -> +3, 01 -> +1, 11 -> -1, 10 -> -3
///   3 bits: 000 -> +7, 001 -> +5, 011 -> +3, 010 -> +1,
///           110 -> -1, 111 -> -3, 101 -> -5, 100 -> -7
struct Constellation {
  int order = 0;
  int bits_per_symbol = 0;
  int bits_per_dim = 0;
  double scale = 1.0;                 ///< divides raw odd-integer levels
  std::vector<cplx> points;           ///< indexed by bit pattern
  std::vector<double> dim_levels;     ///< level for each per-dim bit pattern

  cplx point(int index) const { return points[static_cast<std::size_t>(index)]; }

  int index_of_bits(const std::uint8_t* bits) const {
    int idx = 0;
    for (int i = 0; i < bits_per_symbol; ++i) idx = (idx << 1) | (bits[i] & 1);
    return idx;
  }

  void bits_of_index(int index, std::uint8_t* bits) const {
    for (int i = 0; i < bits_per_symbol; ++i)
      bits[i] = static_cast<std::uint8_t>((index >> (bits_per_symbol - 1 - i)) & 1);
  }

  /// Nearest per-dimension bit pattern; ties resolve to the smaller pattern,
  /// which makes full-symbol slicing lexicographic in the point index.
  int slice_dim(double v) const {
    int best = 0;
    double bestd = std::abs(v - dim_levels[0]);
    for (int p = 1; p < (1 << bits_per_dim); ++p) {
      const double d = std::abs(v - dim_levels[static_cast<std::size_t>(p)]);
      if (d < bestd - 1e-15) {
        bestd = d;
        best = p;
      }
    }
    return best;
  }

  int slice_index(cplx v) const {
    return (slice_dim(v.real()) << bits_per_dim) | slice_dim(v.imag());
  }

  cplx slice(cplx v) const { return point(slice_index(v)); }
};

inline Constellation qam_constellation(int order) {
  Constellation c;
  c.order = order;
  switch (order) {
    case 4:
      c.bits_per_dim = 1;
      c.scale = std::sqrt(2.0);
      c.dim_levels = {+1.0, -1.0};
      break;
    case 16:
      c.bits_per_dim = 2;
      c.scale = std::sqrt(10.0);
      c.dim_levels = {+3.0, +1.0, -3.0, -1.0};  // 00,01,10,11
      break;
    case 64:
      c.bits_per_dim = 3;
      c.scale = std::sqrt(42.0);
      c.dim_levels = {+7.0, +5.0, +1.0, +3.0, -7.0, -5.0, -1.0, -3.0};
      break;
    default:
      throw Error("qam_constellation: order must be 4, 16 or 64");
  }
  for (auto& l : c.dim_levels) l /= c.scale;
  c.bits_per_symbol = 2 * c.bits_per_dim;
  c.points.resize(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    const int ibits = i >> c.bits_per_dim;
    const int qbits = i & ((1 << c.bits_per_dim) - 1);
    c.points[static_cast<std::size_t>(i)] =
        cplx(c.dim_levels[static_cast<std::size_t>(ibits)],
             c.dim_levels[static_cast<std::size_t>(qbits)]);
  }
  return c;
}

/// QAM symbols for a burst sequence: n_subcarriers x n_blocks, column per
/// block, plus the source bits that produced them.
struct SymbolBlock {
  std::vector<cplx> symbols;  ///< column-major, n_subcarriers * n_blocks
  int n_subcarriers = 0;
  int n_blocks = 0;
  std::vector<std::uint8_t> bits;
  Constellation constellation;

  const cplx* block(int m) const {
    return symbols.data() + static_cast<std::size_t>(m) * static_cast<std::size_t>(n_subcarriers);
  }
};

/// Gray-maps a bit stream onto unit-energy square-QAM symbols.
inline SymbolBlock map_qam(const std::vector<std::uint8_t>& bits, int qam_order) {
  SymbolBlock out;
  out.constellation = qam_constellation(qam_order);
  const int bps = out.constellation.bits_per_symbol;
  if (bits.size() % static_cast<std::size_t>(bps) != 0)
    throw Error("map_qam: bit count not divisible by log2(qam_order)");
  const std::size_t n = bits.size() / static_cast<std::size_t>(bps);
  out.symbols.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    const int idx = out.constellation.index_of_bits(bits.data() + s * static_cast<std::size_t>(bps));
    out.symbols[s] = out.constellation.point(idx);
  }
  out.bits = bits;
  out.n_subcarriers = static_cast<int>(n);
  out.n_blocks = 1;
  return out;
}

/// Reinterprets the flat symbol vector as n_subcarriers x n_blocks.
inline SymbolBlock reshape(SymbolBlock block, int n_subcarriers, int n_blocks) {
  if (block.symbols.size() !=
      static_cast<std::size_t>(n_subcarriers) * static_cast<std::size_t>(n_blocks))
    throw Error("reshape: symbol count does not match requested shape");
  block.n_subcarriers = n_subcarriers;
  block.n_blocks = n_blocks;
  return block;
}

/// Exact bits of decided (constellation-member) symbols.
inline std::vector<std::uint8_t> symbols_to_bits(const std::vector<cplx>& symbols,
                                                 const Constellation& c) {
  std::vector<std::uint8_t> bits(symbols.size() * static_cast<std::size_t>(c.bits_per_symbol));
  for (std::size_t s = 0; s < symbols.size(); ++s)
    c.bits_of_index(c.slice_index(symbols[s]),
                    bits.data() + s * static_cast<std::size_t>(c.bits_per_symbol));
  return bits;
}

}  // namespace nfdm

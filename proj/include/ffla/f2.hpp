#pragma once

#include <cstdint>
#include <vector>

#include "ffla/mat.hpp"

namespace ffla::f2 {

// Bit-packed F_2 matrix, 64 columns per word. Used as a drop-in compute
// kernel behind Mat; results must match the generic path bit for bit.
struct Packed {
  uint32_t rows = 0, cols = 0, wpr = 0;
  std::vector<uint64_t> w;

  uint64_t get(uint32_t i, uint32_t j) const { return (w[static_cast<size_t>(i) * wpr + j / 64] >> (j % 64)) & 1; }
  void set(uint32_t i, uint32_t j, uint64_t v) {
    uint64_t& word = w[static_cast<size_t>(i) * wpr + j / 64];
    word = (word & ~(1ull << (j % 64))) | (v << (j % 64));
  }
  void xor_row(uint32_t dst, uint32_t src) {
    for (uint32_t t = 0; t < wpr; ++t) w[static_cast<size_t>(dst) * wpr + t] ^= w[static_cast<size_t>(src) * wpr + t];
  }
  void swap_rows(uint32_t a, uint32_t b) {
    for (uint32_t t = 0; t < wpr; ++t)
      std::swap(w[static_cast<size_t>(a) * wpr + t], w[static_cast<size_t>(b) * wpr + t]);
  }
};

Packed pack(const Mat& m);
Mat unpack(const Packed& p, const Field& f);

struct PackedRref {
  Packed m;
  std::vector<uint32_t> pivots;
};

PackedRref rref(const Packed& m);
Packed mul(const Packed& a, const Packed& b);

}  // namespace ffla::f2

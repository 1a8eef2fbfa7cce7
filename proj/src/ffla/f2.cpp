#include "ffla/f2.hpp"

namespace ffla::f2 {

Packed pack(const Mat& m) {
  Packed p;
  p.rows = m.rows();
  p.cols = m.cols();
  p.wpr = (m.cols() + 63) / 64;
  p.w.assign(static_cast<size_t>(p.rows) * p.wpr, 0);
  for (uint32_t i = 0; i < p.rows; ++i)
    for (uint32_t j = 0; j < p.cols; ++j)
      if (m(i, j)) p.set(i, j, 1);
  return p;
}

Mat unpack(const Packed& p, const Field& f) {
  Mat m(f, p.rows, p.cols);
  for (uint32_t i = 0; i < p.rows; ++i)
    for (uint32_t j = 0; j < p.cols; ++j)
      if (p.get(i, j)) m.at(i, j) = 1;
  return m;
}

PackedRref rref(const Packed& in) {
  PackedRref r;
  r.m = in;
  Packed& m = r.m;
  uint32_t pr = 0;
  for (uint32_t col = 0; col < m.cols && pr < m.rows; ++col) {
    uint32_t piv = pr;
    while (piv < m.rows && !m.get(piv, col)) ++piv;
    if (piv == m.rows) continue;
    if (piv != pr) m.swap_rows(piv, pr);
    for (uint32_t i = 0; i < m.rows; ++i)
      if (i != pr && m.get(i, col)) m.xor_row(i, pr);
    r.pivots.push_back(col);
    ++pr;
  }
  return r;
}

Packed mul(const Packed& a, const Packed& b) {
  Packed c;
  c.rows = a.rows;
  c.cols = b.cols;
  c.wpr = b.wpr;
  c.w.assign(static_cast<size_t>(c.rows) * c.wpr, 0);
  for (uint32_t i = 0; i < a.rows; ++i) {
    for (uint32_t k = 0; k < a.cols; ++k) {
      if (!a.get(i, k)) continue;
      const uint64_t* src = &b.w[static_cast<size_t>(k) * b.wpr];
      uint64_t* dst = &c.w[static_cast<size_t>(i) * c.wpr];
      for (uint32_t t = 0; t < c.wpr; ++t) dst[t] ^= src[t];
    }
  }
  return c;
}

}  // namespace ffla::f2

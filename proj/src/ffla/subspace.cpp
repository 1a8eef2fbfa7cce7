#include "ffla/subspace.hpp"

#include "support/util.hpp"

namespace ffla {

Subspace Subspace::zero(const Field& f, uint32_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat(f, 0, ambient);
  return s;
}

Subspace Subspace::full(const Field& f, uint32_t ambient) {
  return from_rows(Mat::identity(f, ambient));
}

Subspace Subspace::from_rows(const Mat& rows) {
  Subspace s;
  s.ambient_ = rows.cols();
  Rref r = rref(rows);
  s.basis_ = Mat(rows.field(), r.rank(), rows.cols());
  for (uint32_t i = 0; i < r.rank(); ++i) s.basis_.set_row(i, r.m.row(i));
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::from_rows(const Field& f, const std::vector<Row>& rows, uint32_t ambient) {
  return from_rows(Mat::from_rows(f, rows, ambient));
}

Row Subspace::reduce(const Row& v) const {
  wb::check_internal(v.size() == ambient_, "subspace reduce: wrong ambient");
  const Field& f = field();
  Row r = v;
  for (uint32_t i = 0; i < basis_.rows(); ++i) {
    uint16_t c = r[pivots_[i]];
    if (c == 0) continue;
    for (uint32_t j = 0; j < ambient_; ++j) r[j] = f.sub(r[j], f.mul(c, basis_(i, j)));
  }
  return r;
}

bool Subspace::contains(const Row& v) const { return row_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) return false;
  for (uint32_t i = 0; i < o.basis_.rows(); ++i)
    if (!contains(o.basis_.row(i))) return false;
  return true;
}

Row Subspace::coordinates(const Row& v) const {
  const Field& f = field();
  Row c(basis_.rows(), 0);
  Row r = v;
  for (uint32_t i = 0; i < basis_.rows(); ++i) {
    uint16_t ci = r[pivots_[i]];
    c[i] = ci;
    if (ci == 0) continue;
    for (uint32_t j = 0; j < ambient_; ++j) r[j] = f.sub(r[j], f.mul(ci, basis_(i, j)));
  }
  wb::check_internal(row_is_zero(r), "coordinates: vector not in subspace");
  return c;
}

Subspace Subspace::sum(const Subspace& o) const {
  wb::check_internal(ambient_ == o.ambient_, "subspace sum: ambient mismatch");
  if (dim() == 0) return o;
  if (o.dim() == 0) return *this;
  return from_rows(vstack(basis_, o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  wb::check_internal(ambient_ == o.ambient_, "subspace intersect: ambient mismatch");
  if (dim() == 0 || o.dim() == 0) return zero(field(), ambient_);
  // left kernel of [U; V]: rows (a | b) with a U + b V = 0; then a U spans
  // the intersection
  Mat stacked = vstack(basis_, o.basis_);
  Mat lk = left_nullspace(stacked);
  std::vector<Row> gens;
  for (uint32_t i = 0; i < lk.rows(); ++i) {
    Row a(dim());
    for (uint32_t j = 0; j < dim(); ++j) a[j] = lk(i, j);
    gens.push_back(apply_row(a, basis_));
  }
  return from_rows(field(), gens, ambient_);
}

std::vector<uint32_t> Subspace::complement_cols() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (uint32_t pc : pivots_) is_pivot[pc] = true;
  std::vector<uint32_t> out;
  for (uint32_t j = 0; j < ambient_; ++j)
    if (!is_pivot[j]) out.push_back(j);
  return out;
}

std::vector<uint16_t> Subspace::encode() const {
  std::vector<uint16_t> key;
  key.push_back(static_cast<uint16_t>(dim()));
  for (uint32_t i = 0; i < basis_.rows(); ++i)
    for (uint32_t j = 0; j < ambient_; ++j) key.push_back(basis_(i, j));
  return key;
}

}  // namespace ffla

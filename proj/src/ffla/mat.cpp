#include "ffla/mat.hpp"

#include <sstream>

#include "ffla/config.hpp"
#include "ffla/f2.hpp"
#include "support/util.hpp"

namespace ffla {

namespace {
F2Kernel g_kernel = F2Kernel::bitpacked;

bool use_packed(const Field& f) { return f.q() == 2 && g_kernel == F2Kernel::bitpacked; }
}  // namespace

F2Kernel f2_kernel() { return g_kernel; }
void set_f2_kernel(F2Kernel k) { g_kernel = k; }

Mat Mat::identity(const Field& f, uint32_t n) {
  Mat m(f, n, n);
  for (uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const Field& f, const std::vector<Row>& rows, uint32_t cols) {
  Mat m(f, static_cast<uint32_t>(rows.size()), cols);
  for (uint32_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) wb::fail_internal("from_rows: ragged row");
    for (uint32_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Row Mat::row(uint32_t i) const {
  Row r(cols_);
  for (uint32_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

void Mat::set_row(uint32_t i, const Row& r) {
  if (r.size() != cols_) wb::fail_internal("set_row: wrong width");
  for (uint32_t j = 0; j < cols_; ++j) at(i, j) = r[j];
}

bool Mat::operator==(const Mat& o) const {
  return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Mat Mat::operator+(const Mat& o) const {
  wb::check_internal(f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_, "matrix add: shape mismatch");
  Mat r(*f_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->add(a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  wb::check_internal(f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_, "matrix sub: shape mismatch");
  Mat r(*f_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->sub(a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  wb::check_internal(f_ == o.f_ && cols_ == o.rows_, "matrix mul: shape mismatch");
  if (use_packed(*f_)) {
    return f2::unpack(f2::mul(f2::pack(*this), f2::pack(o)), *f_);
  }
  Mat r(*f_, rows_, o.cols_);
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t k = 0; k < cols_; ++k) {
      uint16_t v = (*this)(i, k);
      if (v == 0) continue;
      for (uint32_t j = 0; j < o.cols_; ++j) {
        uint16_t t = f_->mul(v, o(k, j));
        r.at(i, j) = f_->add(r(i, j), t);
      }
    }
  return r;
}

Mat Mat::scaled(uint16_t c) const {
  Mat r(*f_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->mul(a_[i], c);
  return r;
}

Mat Mat::transpose() const {
  Mat r(*f_, cols_, rows_);
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j) r.at(j, i) = (*this)(i, j);
  return r;
}

bool Mat::is_zero() const {
  for (uint16_t v : a_)
    if (v) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Mat hstack(const Mat& a, const Mat& b) {
  wb::check_internal(a.field_ptr() == b.field_ptr() && a.rows() == b.rows(), "hstack: shape mismatch");
  Mat r(a.field(), a.rows(), a.cols() + b.cols());
  for (uint32_t i = 0; i < a.rows(); ++i) {
    for (uint32_t j = 0; j < a.cols(); ++j) r.at(i, j) = a(i, j);
    for (uint32_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b(i, j);
  }
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  wb::check_internal(a.field_ptr() == b.field_ptr() && a.cols() == b.cols(), "vstack: shape mismatch");
  Mat r(a.field(), a.rows() + b.rows(), a.cols());
  for (uint32_t i = 0; i < a.rows(); ++i)
    for (uint32_t j = 0; j < a.cols(); ++j) r.at(i, j) = a(i, j);
  for (uint32_t i = 0; i < b.rows(); ++i)
    for (uint32_t j = 0; j < a.cols(); ++j) r.at(a.rows() + i, j) = b(i, j);
  return r;
}

Row apply_row(const Row& v, const Mat& m) {
  wb::check_internal(v.size() == m.rows(), "apply_row: shape mismatch");
  const Field& f = m.field();
  Row r(m.cols(), 0);
  for (uint32_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (uint32_t j = 0; j < m.cols(); ++j) r[j] = f.add(r[j], f.mul(v[i], m(i, j)));
  }
  return r;
}

Row row_add(const Field& f, const Row& a, const Row& b) {
  Row r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Row row_scale(const Field& f, const Row& a, uint16_t c) {
  Row r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  return r;
}

bool row_is_zero(const Row& r) {
  for (uint16_t v : r)
    if (v) return false;
  return true;
}

Rref rref(const Mat& in) {
  const Field& f = in.field();
  if (use_packed(f)) {
    f2::PackedRref pr = f2::rref(f2::pack(in));
    Rref r;
    r.m = f2::unpack(pr.m, f);
    r.pivots = std::move(pr.pivots);
    return r;
  }
  Rref r;
  r.m = in;
  Mat& m = r.m;
  uint32_t pr = 0;
  for (uint32_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
    uint32_t piv = pr;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != pr)
      for (uint32_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(pr, j));
    uint16_t s = f.inv(m(pr, col));
    if (s != 1)
      for (uint32_t j = 0; j < m.cols(); ++j) m.at(pr, j) = f.mul(m(pr, j), s);
    for (uint32_t i = 0; i < m.rows(); ++i) {
      if (i == pr) continue;
      uint16_t c = m(i, col);
      if (c == 0) continue;
      for (uint32_t j = 0; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m(i, j), f.mul(c, m(pr, j)));
    }
    r.pivots.push_back(col);
    ++pr;
  }
  return r;
}

uint32_t rank(const Mat& m) { return rref(m).rank(); }

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  wb::check_internal(a.field_ptr() == b.field_ptr() && a.rows() == b.rows(), "solve: shape mismatch");
  Rref r = rref(hstack(a, b));
  const Field& f = a.field();
  // a pivot inside the b block means an inconsistent system
  for (uint32_t pc : r.pivots)
    if (pc >= a.cols()) return std::nullopt;
  Mat x(f, a.cols(), b.cols());
  for (uint32_t row = 0; row < r.pivots.size(); ++row) {
    uint32_t pc = r.pivots[row];
    for (uint32_t j = 0; j < b.cols(); ++j) x.at(pc, j) = r.m(row, a.cols() + j);
  }
  return x;
}

std::optional<Mat> solve_left(const Mat& a, const Mat& b) {
  auto xt = solve(a.transpose(), b.transpose());
  if (!xt) return std::nullopt;
  return xt->transpose();
}

Mat nullspace(const Mat& a) {
  const Field& f = a.field();
  Rref r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (uint32_t pc : r.pivots) is_pivot[pc] = true;
  std::vector<Row> base;
  for (uint32_t fc = 0; fc < a.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    Row v(a.cols(), 0);
    v[fc] = 1;
    for (uint32_t row = 0; row < r.pivots.size(); ++row)
      v[r.pivots[row]] = f.neg(r.m(row, fc));
    base.push_back(std::move(v));
  }
  Mat k = Mat::from_rows(f, base, a.cols());
  // canonicalize so both kernels and any construction order agree
  Rref kr = rref(k);
  Mat out(f, kr.rank(), a.cols());
  for (uint32_t i = 0; i < kr.rank(); ++i) out.set_row(i, kr.m.row(i));
  return out;
}

Mat left_nullspace(const Mat& a) { return nullspace(a.transpose()); }

std::optional<Mat> inverse(const Mat& a) {
  wb::check_internal(a.rows() == a.cols(), "inverse: not square");
  auto x = solve(a, Mat::identity(a.field(), a.rows()));
  if (!x) return std::nullopt;
  if (!((a * *x).is_identity())) return std::nullopt;
  return x;
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  for (uint32_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " ");
    os << "[";
    for (uint32_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << "]";
    if (i + 1 < m.rows()) os << "\n";
  }
  os << "]";
  return os.str();
}

}  // namespace ffla

#include "algebra/algebra.hpp"

#include <algorithm>

#include "ffla/subspace.hpp"
#include "support/util.hpp"

namespace algebra {

Algebra::Algebra(const Field& f, uint32_t dim, std::vector<uint16_t> table, Row one, Validate v)
    : f_(&f), dim_(dim), table_(std::move(table)), one_(std::move(one)) {
  if (dim == 0) wb::fail_validation("algebra dimension must be positive");
  if (table_.size() != static_cast<size_t>(dim) * dim * dim)
    wb::fail_validation("structure-constant table has the wrong size");
  if (one_.size() != dim) wb::fail_validation("identity coordinates have the wrong length");
  for (uint16_t x : table_)
    if (x >= f.q()) wb::fail_validation("structure constant out of field range");
  for (uint16_t x : one_)
    if (x >= f.q()) wb::fail_validation("identity coordinate out of field range");

  for (uint32_t j = 0; j < dim_; ++j) {
    Row b = basis_elem(j);
    if (mul(one_, b) != b || mul(b, one_) != b)
      wb::fail_validation("claimed identity is not a two-sided identity");
  }

  if (v == Validate::full) {
    std::vector<Mat> r(dim_);
    for (uint32_t j = 0; j < dim_; ++j) r[j] = right_mult(basis_elem(j));
    for (uint32_t i = 0; i < dim_; ++i)
      for (uint32_t j = 0; j < dim_; ++j) {
        Mat lhs(f, dim_, dim_);
        for (uint32_t t = 0; t < dim_; ++t) {
          uint16_t ct = c(i, j, t);
          if (ct == 0) continue;
          for (uint32_t m = 0; m < dim_; ++m)
            for (uint32_t k = 0; k < dim_; ++k)
              lhs.at(m, k) = f.add(lhs.at(m, k), f.mul(ct, r[t](m, k)));
        }
        if (lhs != r[i] * r[j]) wb::fail_validation("structure constants are not associative");
      }
  }
}

Row Algebra::basis_elem(uint32_t i) const {
  Row r(dim_, 0);
  r[i] = 1;
  return r;
}

Row Algebra::add(const Row& x, const Row& y) const {
  Row r(dim_);
  for (uint32_t i = 0; i < dim_; ++i) r[i] = f_->add(x[i], y[i]);
  return r;
}

Row Algebra::sub(const Row& x, const Row& y) const {
  Row r(dim_);
  for (uint32_t i = 0; i < dim_; ++i) r[i] = f_->sub(x[i], y[i]);
  return r;
}

Row Algebra::scale(uint16_t s, const Row& x) const {
  Row r(dim_);
  for (uint32_t i = 0; i < dim_; ++i) r[i] = f_->mul(s, x[i]);
  return r;
}

Row Algebra::mul(const Row& x, const Row& y) const {
  Row r(dim_, 0);
  for (uint32_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (uint32_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      uint16_t xy = f_->mul(x[i], y[j]);
      for (uint32_t k = 0; k < dim_; ++k)
        r[k] = f_->add(r[k], f_->mul(xy, c(i, j, k)));
    }
  }
  return r;
}

Row Algebra::pow(const Row& x, uint64_t e) const {
  Row acc = one_;
  Row base = x;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

Mat Algebra::left_mult(const Row& x) const {
  Mat m(*f_, dim_, dim_);
  for (uint32_t j = 0; j < dim_; ++j) {
    Row r = mul(x, basis_elem(j));
    m.set_row(j, r);
  }
  return m;
}

Mat Algebra::right_mult(const Row& x) const {
  Mat m(*f_, dim_, dim_);
  for (uint32_t i = 0; i < dim_; ++i) {
    Row r(dim_, 0);
    for (uint32_t j = 0; j < dim_; ++j) {
      if (x[j] == 0) continue;
      for (uint32_t k = 0; k < dim_; ++k)
        r[k] = f_->add(r[k], f_->mul(x[j], c(i, j, k)));
    }
    m.set_row(i, r);
  }
  return m;
}

bool Algebra::is_idempotent(const Row& x) const { return mul(x, x) == x; }

bool Algebra::is_central(const Row& x) const {
  for (uint32_t i = 0; i < dim_; ++i) {
    Row b = basis_elem(i);
    if (mul(x, b) != mul(b, x)) return false;
  }
  return true;
}

bool Algebra::commutative() const {
  for (uint32_t i = 0; i < dim_; ++i)
    for (uint32_t j = i + 1; j < dim_; ++j) {
      Row bi = basis_elem(i), bj = basis_elem(j);
      if (mul(bi, bj) != mul(bj, bi)) return false;
    }
  return true;
}

uint64_t Algebra::hash() const {
  wb::Fnv1a h;
  h.u32(f_->p());
  h.u32(f_->k());
  h.u32(dim_);
  for (uint16_t x : table_) h.u16(x);
  for (uint16_t x : one_) h.u16(x);
  return h.value();
}

Row eval_poly(const Algebra& a, const ffla::Poly& p, const Row& x) {
  Row r = a.zero();
  for (int32_t i = p.deg(); i >= 0; --i) {
    r = a.mul(r, x);
    r = a.add(r, a.scale(p.coeff(static_cast<uint32_t>(i)), a.one()));
  }
  return r;
}

ffla::Poly element_minpoly(const Algebra& a, const Row& x) {
  const Field& f = a.field();
  std::vector<Row> powers;
  ffla::Subspace span = ffla::Subspace::zero(f, a.dim());
  Row pw = a.one();
  for (uint32_t t = 0; t <= a.dim(); ++t) {
    if (span.contains(pw)) {
      Mat stacked = Mat::from_rows(f, powers, a.dim());
      Mat rhs = Mat::from_rows(f, {pw}, a.dim());
      auto sol = ffla::solve_left(stacked, rhs);
      wb::check_internal(sol.has_value(), "dependent power must lie in the span of earlier powers");
      std::vector<uint16_t> coeffs(t + 1, 0);
      for (uint32_t s = 0; s < t; ++s) coeffs[s] = f.neg((*sol)(0, s));
      coeffs[t] = 1;
      return ffla::Poly(f, coeffs);
    }
    powers.push_back(pw);
    span = span.sum(ffla::Subspace::from_rows(f, {pw}, a.dim()));
    pw = a.mul(pw, x);
  }
  wb::fail_internal("no dependency among dim+1 powers of an element");
}

Algebra opposite(const Algebra& a) {
  uint32_t d = a.dim();
  std::vector<uint16_t> t(static_cast<size_t>(d) * d * d);
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t j = 0; j < d; ++j)
      for (uint32_t k = 0; k < d; ++k)
        t[(static_cast<size_t>(i) * d + j) * d + k] = a.c(j, i, k);
  return Algebra(a.field(), d, std::move(t), a.one(), Validate::basic);
}

Algebra field_algebra(const Field& f) {
  return Algebra(f, 1, {1}, {1}, Validate::full);
}

namespace {

// rows t = coordinates of x^t mod the modulus, for t = 0 .. 2*(n-1)
std::vector<Row> power_reductions(const Field& f, const std::vector<uint16_t>& modulus) {
  uint32_t n = static_cast<uint32_t>(modulus.size()) - 1;
  std::vector<Row> red;
  Row cur(n, 0);
  cur[0] = 1;
  red.push_back(cur);
  for (uint32_t t = 1; t <= 2 * (n - 1); ++t) {
    Row next(n, 0);
    uint16_t top = cur[n - 1];
    for (uint32_t i = 0; i + 1 < n; ++i) next[i + 1] = cur[i];
    if (top != 0)
      for (uint32_t i = 0; i < n; ++i)
        next[i] = f.sub(next[i], f.mul(top, modulus[i]));
    red.push_back(next);
    cur = next;
  }
  return red;
}

}  // namespace

Algebra polynomial_quotient_algebra(const Field& f, const std::vector<uint16_t>& monic_modulus) {
  if (monic_modulus.size() < 2 || monic_modulus.back() != 1)
    wb::fail_validation("modulus must be monic of positive degree");
  uint32_t n = static_cast<uint32_t>(monic_modulus.size()) - 1;
  auto red = power_reductions(f, monic_modulus);
  std::vector<uint16_t> t(static_cast<size_t>(n) * n * n, 0);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      for (uint32_t k = 0; k < n; ++k)
        t[(static_cast<size_t>(i) * n + j) * n + k] = red[i + j][k];
  Row one(n, 0);
  one[0] = 1;
  return Algebra(f, n, std::move(t), std::move(one), Validate::full);
}

namespace {

std::vector<uint16_t> least_irreducible(const Field& f, uint32_t deg) {
  uint64_t count = 1;
  for (uint32_t i = 0; i < deg; ++i) {
    count *= f.q();
    if (count > (1ull << 24)) wb::fail_cap("irreducible-modulus search space too large");
  }
  for (uint64_t code = 0; code < count; ++code) {
    std::vector<uint16_t> cs(deg + 1, 0);
    uint64_t rem = code;
    for (uint32_t i = 0; i < deg; ++i) {
      cs[i] = static_cast<uint16_t>(rem % f.q());
      rem /= f.q();
    }
    cs[deg] = 1;
    if (ffla::poly_irreducible(ffla::Poly(f, cs))) return cs;
  }
  wb::fail_internal("no monic irreducible of the requested degree");
}

}  // namespace

Algebra extension_field_algebra(const Field& base, uint32_t ext) {
  if (ext == 0) wb::fail_validation("extension degree must be positive");
  if (ext == 1) return field_algebra(base);
  return polynomial_quotient_algebra(base, least_irreducible(base, ext));
}

Algebra matrix_algebra(const Field& f, uint32_t n) {
  return matrix_algebra_over_extension(f, 1, n);
}

Algebra matrix_algebra_over_extension(const Field& base, uint32_t ext, uint32_t n) {
  if (n == 0 || ext == 0) wb::fail_validation("matrix size and extension degree must be positive");
  uint32_t d = n * n * ext;
  std::vector<Row> red;
  if (ext == 1) {
    red.push_back({1});
  } else {
    red = power_reductions(base, least_irreducible(base, ext));
  }
  auto idx = [&](uint32_t i, uint32_t j, uint32_t s) { return (i * n + j) * ext + s; };
  std::vector<uint16_t> t(static_cast<size_t>(d) * d * d, 0);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      for (uint32_t s = 0; s < ext; ++s)
        for (uint32_t l = 0; l < n; ++l)
          for (uint32_t r = 0; r < ext; ++r) {
            uint32_t a = idx(i, j, s), b = idx(j, l, r);
            for (uint32_t m = 0; m < ext; ++m) {
              uint16_t cv = red[s + r][m];
              if (cv != 0) t[(static_cast<size_t>(a) * d + b) * d + idx(i, l, m)] = cv;
            }
          }
  Row one(d, 0);
  for (uint32_t i = 0; i < n; ++i) one[idx(i, i, 0)] = 1;
  return Algebra(base, d, std::move(t), std::move(one),
                 d <= 32 ? Validate::full : Validate::basic);
}

Algebra upper_triangular_algebra(const Field& f, uint32_t n) {
  if (n == 0) wb::fail_validation("matrix size must be positive");
  std::vector<std::pair<uint32_t, uint32_t>> basis;
  std::vector<std::vector<int32_t>> pos(n, std::vector<int32_t>(n, -1));
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i; j < n; ++j) {
      pos[i][j] = static_cast<int32_t>(basis.size());
      basis.emplace_back(i, j);
    }
  uint32_t d = static_cast<uint32_t>(basis.size());
  std::vector<uint16_t> t(static_cast<size_t>(d) * d * d, 0);
  for (uint32_t a = 0; a < d; ++a)
    for (uint32_t b = 0; b < d; ++b) {
      auto [i, j] = basis[a];
      auto [k, l] = basis[b];
      if (j == k) t[(static_cast<size_t>(a) * d + b) * d + pos[i][l]] = 1;
    }
  Row one(d, 0);
  for (uint32_t i = 0; i < n; ++i) one[pos[i][i]] = 1;
  return Algebra(f, d, std::move(t), std::move(one), Validate::full);
}

Algebra product_algebra(const Algebra& a, const Algebra& b) {
  if (&a.field() != &b.field())
    wb::fail_validation("product factors must share a ground field");
  uint32_t da = a.dim(), db = b.dim(), d = da + db;
  std::vector<uint16_t> t(static_cast<size_t>(d) * d * d, 0);
  for (uint32_t i = 0; i < da; ++i)
    for (uint32_t j = 0; j < da; ++j)
      for (uint32_t k = 0; k < da; ++k)
        t[(static_cast<size_t>(i) * d + j) * d + k] = a.c(i, j, k);
  for (uint32_t i = 0; i < db; ++i)
    for (uint32_t j = 0; j < db; ++j)
      for (uint32_t k = 0; k < db; ++k)
        t[(static_cast<size_t>(da + i) * d + (da + j)) * d + (da + k)] = b.c(i, j, k);
  Row one(d, 0);
  for (uint32_t i = 0; i < da; ++i) one[i] = a.one()[i];
  for (uint32_t i = 0; i < db; ++i) one[da + i] = b.one()[i];
  return Algebra(a.field(), d, std::move(t), std::move(one), Validate::basic);
}

}  // namespace algebra

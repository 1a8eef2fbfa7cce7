#include "ffla/poly.hpp"

#include <algorithm>

#include "support/util.hpp"

namespace ffla {

Poly::Poly(const Field& f, std::vector<uint16_t> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Field& f, uint16_t c) {
  return Poly(f, std::vector<uint16_t>{c});
}

Poly Poly::x(const Field& f) { return Poly(f, {0, 1}); }

Poly Poly::operator+(const Poly& o) const {
  std::vector<uint16_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = f_->add(coeff(static_cast<uint32_t>(i)), o.coeff(static_cast<uint32_t>(i)));
  return Poly(*f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<uint16_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = f_->sub(coeff(static_cast<uint32_t>(i)), o.coeff(static_cast<uint32_t>(i)));
  return Poly(*f_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(*f_);
  std::vector<uint16_t> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
  }
  return Poly(*f_, std::move(r));
}

Poly Poly::scaled(uint16_t c) const {
  std::vector<uint16_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(c_[i], c);
  return Poly(*f_, std::move(r));
}

Poly Poly::monic() const {
  wb::check_internal(!is_zero(), "monic of zero polynomial");
  return scaled(f_->inv(lead()));
}

uint16_t Poly::eval(uint16_t x) const {
  uint16_t r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
  return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  wb::check_internal(!b.is_zero(), "polynomial division by zero");
  const Field& f = b.field();
  std::vector<uint16_t> rem(a.coeffs());
  std::vector<uint16_t> quo;
  int db = b.deg();
  uint16_t il = f.inv(b.lead());
  if (static_cast<int>(rem.size()) - 1 >= db) quo.assign(rem.size() - db, 0);
  for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
    uint16_t c = rem[d];
    if (c == 0) continue;
    uint16_t s = f.mul(c, il);
    quo[d - db] = s;
    for (int j = 0; j <= db; ++j)
      rem[d - db + j] = f.sub(rem[d - db + j], f.mul(s, b.coeff(j)));
  }
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Egcd poly_egcd(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(f, 1), u1 = Poly(f);
  Poly v0 = Poly(f), v1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly u = u0 - q * u1;
    Poly v = v0 - q * v1;
    r0 = r1; r1 = r;
    u0 = u1; u1 = u;
    v0 = v1; v1 = v;
  }
  if (r0.is_zero()) return {r0, u0, v0};
  uint16_t s = f.inv(r0.lead());
  return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

Poly poly_powmod(const Poly& base, uint64_t e, const Poly& mod) {
  const Field& f = base.field();
  Poly r = Poly::constant(f, 1);
  Poly b = poly_mod(base, mod);
  while (e) {
    if (e & 1) r = poly_mod(r * b, mod);
    b = poly_mod(b * b, mod);
    e >>= 1;
  }
  return r;
}

namespace {

// monic polynomials of given degree, ascending by the encoding of the low
// coefficients in base q
Poly monic_by_code(const Field& f, uint32_t deg, uint64_t code) {
  std::vector<uint16_t> c(deg + 1, 0);
  for (uint32_t i = 0; i < deg; ++i) {
    c[i] = static_cast<uint16_t>(code % f.q());
    code /= f.q();
  }
  c[deg] = 1;
  return Poly(f, std::move(c));
}

uint64_t monic_count(const Field& f, uint32_t deg) {
  auto n = wb::checked_pow(f.q(), deg, 1ull << 24);
  if (!n) wb::fail_cap("polynomial enumeration too large for q^deg");
  return *n;
}

}  // namespace

bool poly_irreducible(const Poly& f) {
  wb::check_internal(f.deg() >= 1, "irreducibility of a constant");
  Poly m = f.monic();
  uint32_t deg = static_cast<uint32_t>(m.deg());
  if (deg == 1) return true;
  for (uint32_t d = 1; 2 * d <= deg; ++d) {
    uint64_t n = monic_count(f.field(), d);
    for (uint64_t code = 0; code < n; ++code) {
      Poly g = monic_by_code(f.field(), d, code);
      if (poly_mod(m, g).is_zero()) return false;
    }
  }
  return true;
}

std::vector<std::pair<Poly, uint32_t>> poly_factor(const Poly& f) {
  wb::check_internal(!f.is_zero(), "factoring zero polynomial");
  Poly rem = f.monic();
  std::vector<std::pair<Poly, uint32_t>> out;
  // degrees ascending: any degree-d divisor surviving to stage d is
  // irreducible because all smaller factors were already divided out
  for (uint32_t d = 1; rem.deg() >= static_cast<int>(2 * d); ++d) {
    uint64_t n = monic_count(f.field(), d);
    for (uint64_t code = 0; code < n && rem.deg() >= static_cast<int>(2 * d); ++code) {
      Poly g = monic_by_code(f.field(), d, code);
      uint32_t mult = 0;
      while (true) {
        auto [q, r] = poly_divmod(rem, g);
        if (!r.is_zero()) break;
        rem = q;
        ++mult;
      }
      if (mult) out.emplace_back(g, mult);
    }
  }
  if (rem.deg() >= 1) out.emplace_back(rem, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    return a.first.coeffs() < b.first.coeffs();
  });
  return out;
}

std::vector<uint16_t> charpoly(const Mat& m) {
  wb::check_internal(m.rows() == m.cols(), "charpoly: not square");
  const Field& f = m.field();
  uint32_t n = m.rows();
  std::vector<uint16_t> c{1};
  for (uint32_t r = 1; r <= n; ++r) {
    // Toeplitz column for the r-th leading principal submatrix
    std::vector<uint16_t> t(r + 1, 0);
    t[0] = 1;
    t[1] = f.neg(m(r - 1, r - 1));
    if (r >= 2) {
      std::vector<uint16_t> v(r - 1);
      for (uint32_t i = 0; i < r - 1; ++i) v[i] = m(i, r - 1);
      for (uint32_t j = 2; j <= r; ++j) {
        uint16_t dot = 0;
        for (uint32_t i = 0; i < r - 1; ++i) dot = f.add(dot, f.mul(m(r - 1, i), v[i]));
        t[j] = f.neg(dot);
        if (j < r) {
          std::vector<uint16_t> nv(r - 1, 0);
          for (uint32_t i = 0; i < r - 1; ++i) {
            if (v[i] == 0) continue;
            for (uint32_t i2 = 0; i2 < r - 1; ++i2)
              nv[i2] = f.add(nv[i2], f.mul(m(i2, i), v[i]));
          }
          v = std::move(nv);
        }
      }
    }
    std::vector<uint16_t> nc(r + 1, 0);
    for (uint32_t i = 0; i <= r; ++i) {
      uint16_t acc = 0;
      for (uint32_t j = 0; j <= i && j <= r; ++j) {
        if (i - j >= c.size()) continue;
        acc = f.add(acc, f.mul(t[j], c[i - j]));
      }
      nc[i] = acc;
    }
    c = std::move(nc);
  }
  return c;
}

}  // namespace ffla

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ffla/mat.hpp"

namespace ffla {

// Dense univariate polynomial over an interned Field. Coefficients low to
// high with no trailing zeros; the zero polynomial has an empty vector.
class Poly {
 public:
  Poly() : f_(nullptr) {}
  explicit Poly(const Field& f) : f_(&f) {}
  Poly(const Field& f, std::vector<uint16_t> coeffs);

  static Poly constant(const Field& f, uint16_t c);
  static Poly x(const Field& f);

  const Field& field() const { return *f_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  uint16_t coeff(uint32_t i) const { return i < c_.size() ? c_[i] : 0; }
  uint16_t lead() const { return c_.back(); }
  const std::vector<uint16_t>& coeffs() const { return c_; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(uint16_t c) const;
  Poly monic() const;

  uint16_t eval(uint16_t x) const;

 private:
  const Field* f_;
  std::vector<uint16_t> c_;
  void trim();
};

// quotient, remainder; b nonzero
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic or zero
// g = gcd, g = u*a + v*b
struct Egcd {
  Poly g, u, v;
};
Egcd poly_egcd(const Poly& a, const Poly& b);
Poly poly_powmod(const Poly& base, uint64_t e, const Poly& mod);

bool poly_irreducible(const Poly& f);
// monic irreducible factors with multiplicities, sorted by (degree, coeffs);
// input must be nonzero, leading coefficient is dropped
std::vector<std::pair<Poly, uint32_t>> poly_factor(const Poly& f);

// det(x*I - m): coefficients descending, size n+1, index 0 is the leading 1.
// Berkowitz, so division free and valid over any field.
std::vector<uint16_t> charpoly(const Mat& m);

}  // namespace ffla

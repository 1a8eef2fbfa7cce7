#pragma once

#include <cstdint>
#include <vector>

#include "ffla/field.hpp"
#include "ffla/mat.hpp"
#include "ffla/poly.hpp"

namespace algebra {

using ffla::Field;
using ffla::Mat;
using ffla::Row;

enum class Validate { full, basic };

// Finite-dimensional associative unital algebra over a small finite field,
// presented by structure constants on a fixed basis. Elements are coordinate
// rows of length dim().
class Algebra {
 public:
  // table[((i*dim)+j)*dim+k] = coefficient of b_k in b_i * b_j.
  // Validate::full additionally checks associativity via the regular
  // representation; basic checks only shape and the two-sided identity.
  Algebra(const Field& f, uint32_t dim, std::vector<uint16_t> table, Row one,
          Validate v = Validate::full);

  const Field& field() const { return *f_; }
  uint32_t dim() const { return dim_; }
  const Row& one() const { return one_; }
  uint16_t c(uint32_t i, uint32_t j, uint32_t k) const {
    return table_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }
  const std::vector<uint16_t>& table() const { return table_; }

  Row zero() const { return Row(dim_, 0); }
  Row basis_elem(uint32_t i) const;
  Row add(const Row& x, const Row& y) const;
  Row sub(const Row& x, const Row& y) const;
  Row scale(uint16_t s, const Row& x) const;
  Row mul(const Row& x, const Row& y) const;
  Row pow(const Row& x, uint64_t e) const;

  // matrix of v -> x*v in the row-vector convention (row j = x * b_j)
  Mat left_mult(const Row& x) const;
  // matrix of v -> v*x; x -> right_mult(x) is multiplicative, and faithful
  // because the algebra is unital
  Mat right_mult(const Row& x) const;

  bool is_idempotent(const Row& x) const;
  bool is_central(const Row& x) const;
  bool commutative() const;

  uint64_t hash() const;

 private:
  const Field* f_;
  uint32_t dim_;
  std::vector<uint16_t> table_;
  Row one_;
};

// evaluate p at x (Horner; constant term becomes a multiple of the identity)
Row eval_poly(const Algebra& a, const ffla::Poly& p, const Row& x);

// least monic polynomial annihilating x
ffla::Poly element_minpoly(const Algebra& a, const Row& x);

Algebra opposite(const Algebra& a);

Algebra field_algebra(const Field& f);
// F[x]/(m) for a monic modulus given low-to-high
Algebra polynomial_quotient_algebra(const Field& f, const std::vector<uint16_t>& monic_modulus);
// degree-ext field extension of base, modulus = least monic irreducible
Algebra extension_field_algebra(const Field& base, uint32_t ext);
Algebra matrix_algebra(const Field& f, uint32_t n);
// n x n matrices over the degree-ext extension, as an algebra over base
Algebra matrix_algebra_over_extension(const Field& base, uint32_t ext, uint32_t n);
Algebra upper_triangular_algebra(const Field& f, uint32_t n);
Algebra product_algebra(const Algebra& a, const Algebra& b);

}  // namespace algebra

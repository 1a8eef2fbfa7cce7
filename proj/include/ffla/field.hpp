#pragma once

#include <cstdint>
#include <vector>

namespace ffla {

// Arithmetic for F_q, q = p^k <= 2^16. Elements are the canonical integers
// 0..q-1. For k > 1 the base-p digits of an encoding are the coefficients of
// the polynomial basis (digit i = coefficient of x^i) modulo a fixed
// irreducible polynomial, the lexicographically least monic one of degree k.
//
// Instances are interned: Field::get returns a reference that stays valid for
// the lifetime of the process, so matrices can hold plain pointers.
class Field {
 public:
  static const Field& get(uint32_t p, uint32_t k = 1);

  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint32_t q() const { return q_; }

  uint16_t add(uint16_t a, uint16_t b) const {
    if (p_ == 2) return a ^ b;
    if (!add_t_.empty()) return add_t_[a * q_ + b];
    return add_slow(a, b);
  }
  uint16_t neg(uint16_t a) const {
    if (p_ == 2) return a;
    if (!neg_t_.empty()) return neg_t_[a];
    return neg_slow(a);
  }
  uint16_t sub(uint16_t a, uint16_t b) const { return add(a, neg(b)); }
  uint16_t mul(uint16_t a, uint16_t b) const {
    if (!mul_t_.empty()) return mul_t_[a * q_ + b];
    return mul_slow(a, b);
  }
  // a must be nonzero.
  uint16_t inv(uint16_t a) const;
  uint16_t div(uint16_t a, uint16_t b) const { return mul(a, inv(b)); }
  uint16_t pow(uint16_t a, uint64_t e) const;

  // Canonical encoding from a plain integer. For prime fields any value is
  // reduced mod p (negatives included); for k > 1 the value must already be
  // a canonical encoding in 0..q-1.
  uint16_t from_int(int64_t v) const;

  bool operator==(const Field& o) const { return p_ == o.p_ && k_ == o.k_; }

  // Irreducible modulus for k > 1, coefficients low to high, size k+1.
  const std::vector<uint16_t>& modulus() const { return modulus_; }

 private:
  Field(uint32_t p, uint32_t k);

  uint16_t add_slow(uint16_t a, uint16_t b) const;
  uint16_t neg_slow(uint16_t a) const;
  uint16_t mul_slow(uint16_t a, uint16_t b) const;
  uint16_t mul_poly(uint16_t a, uint16_t b) const;

  uint32_t p_, k_, q_;
  std::vector<uint16_t> modulus_;
  // Dense tables when q <= 256, else exp/log for k > 1 and direct modular
  // arithmetic for k == 1.
  std::vector<uint16_t> add_t_, mul_t_, neg_t_, inv_t_;
  std::vector<uint16_t> exp_t_, log_t_;
};

}  // namespace ffla

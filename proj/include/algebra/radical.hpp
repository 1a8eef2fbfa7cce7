#pragma once

#include "algebra/algebra.hpp"
#include "ffla/subspace.hpp"

namespace algebra {

using ffla::Subspace;

// Jacobson radical. Production path: the characteristic-coefficient chain on
// the regular representation (trace kernel first, then the p^i-th coefficient
// maps restricted to the previous stage, Frobenius-untwisted to make them
// linear). Postconditions always run: the result is a two-sided ideal, it is
// nilpotent, and the chain re-run on the quotient gives zero.
Subspace radical(const Algebra& a);

// reference implementation: x is radical iff the two-sided ideal it generates
// is nilpotent; enumerates every element, so guarded by cap
Subspace radical_elementwise(const Algebra& a, uint64_t cap = 1ull << 12);

bool is_ideal(const Algebra& a, const Subspace& s);
// products of t elements all vanish for some t (power chain of subspaces)
bool is_nilpotent_subspace(const Algebra& a, const Subspace& s);
bool is_semisimple(const Algebra& a);

struct Quotient {
  Algebra alg;   // structure on the non-pivot coordinate complement
  Mat proj;      // dim(A) x dim(Q): x_Q = x_A * proj
  Mat lift;      // dim(Q) x dim(A): linear section, proj after lift = id
  Subspace ideal;
};

// requires ideal to be two-sided and proper
Quotient quotient_algebra(const Algebra& a, const Subspace& ideal, Validate v = Validate::basic);

Quotient semisimple_quotient(const Algebra& a);

}  // namespace algebra

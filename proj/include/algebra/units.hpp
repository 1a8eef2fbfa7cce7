#pragma once

#include <optional>
#include <string>

#include "algebra/radical.hpp"
#include "algebra/wedderburn.hpp"

namespace algebra {

// a unit iff right multiplication is invertible (one-sided inverses are
// two-sided in finite dimension)
bool is_unit(const Algebra& a, const Row& x);
std::optional<Row> inverse_elem(const Algebra& a, const Row& x);

// all units in odometer order; requires q^dim <= cap
std::vector<Row> all_units(const Algebra& a, uint64_t cap = 1ull << 16);

struct TwoUnitSum {
  Row u, v;
};
std::optional<TwoUnitSum> sum_of_two_units(const Algebra& a, const Row& x,
                                           uint64_t cap = 1ull << 16);

struct TwoGoodReport {
  bool two_good = false;
  Row witness;  // element admitting no two-unit decomposition
};
TwoGoodReport every_element_two_unit_sum(const Algebra& a, uint64_t cap = 1ull << 16);

// x with x^2 - x nilpotent; returns the idempotent fixed point of repeated
// p-th powering, congruent to x modulo the radical
Row lift_idempotent(const Algebra& a, const Row& x);

// lift an orthogonal family from A/J, preserving orthogonality and the sum
std::vector<Row> lift_orthogonal_idempotents(const Algebra& a, const Quotient& q,
                                             const std::vector<Row>& idems_q);

struct BooleanTwoGoodSplit {
  bool exists = false;
  Row e1;  // central idempotent carrying the all-idempotent factor
  Subspace boolean_part, two_good_part;
  std::string reason;  // set when exists is false
  Row witness;         // offending element, when one is meaningful
};
// decompose A = e1*A x (1-e1)*A with the first factor all-idempotent and the
// second one two-good; e1 is forced to be the lift of the sum of the size-1
// residue blocks over F_2, so failure of any check certifies no such
// decomposition exists
BooleanTwoGoodSplit boolean_two_good_split(const Algebra& a, uint64_t cap = 1ull << 16);

// ring surjections onto the two-element field, counted through the residue
// blocks; the functional variant sweeps all 2^dim linear maps (base field F_2)
uint32_t count_f2_quotients(const Algebra& a);
uint32_t count_f2_quotients_functional(const Algebra& a, uint64_t cap = 1ull << 20);

struct UnitStableReport {
  bool valid = false;  // unital, multiplicatively closed, stable under left
                       // multiplication by every unit
  std::string reason;
  Row witness_a, witness_b, witness_product;
  bool split_matches = false;  // T = (T cut to the boolean factor) x (full two-good factor)
  Subspace t1, t2;
  Row boolean_witness;
};
UnitStableReport unit_stable_subring_split(const Algebra& a, const Subspace& t,
                                           uint64_t cap = 1ull << 16);

}  // namespace algebra

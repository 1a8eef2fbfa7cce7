#include "algebra/units.hpp"

#include <unordered_set>

#include "support/util.hpp"

namespace algebra {

namespace {

uint64_t row_key(const Row& r) {
  wb::Fnv1a h;
  for (uint16_t v : r) h.u16(v);
  return h.value();
}

struct UnitSet {
  std::unordered_set<uint64_t> keys;
  std::vector<Row> units;

  bool contains(const Row& r) const { return keys.count(row_key(r)) != 0; }
};

UnitSet collect_units(const Algebra& a, uint64_t cap) {
  auto total = wb::checked_pow(a.field().q(), a.dim(), cap);
  if (!total) wb::fail_cap("unit enumeration too large");
  UnitSet s;
  Row x(a.dim(), 0);
  do {
    if (is_unit(a, x)) {
      s.units.push_back(x);
      s.keys.insert(row_key(x));
    }
  } while (wb::next_tuple(x, static_cast<uint16_t>(a.field().q())));
  return s;
}

std::optional<TwoUnitSum> two_sum_from(const Algebra& a, const UnitSet& s, const Row& x) {
  for (const Row& u : s.units) {
    Row v = a.sub(x, u);
    if (s.contains(v)) return TwoUnitSum{u, v};
  }
  return std::nullopt;
}

}  // namespace

bool is_unit(const Algebra& a, const Row& x) {
  return ffla::rank(a.right_mult(x)) == a.dim();
}

std::optional<Row> inverse_elem(const Algebra& a, const Row& x) {
  Mat rhs = Mat::from_rows(a.field(), {a.one()}, a.dim());
  auto sol = ffla::solve_left(a.right_mult(x), rhs);
  if (!sol) return std::nullopt;
  Row y = sol->row(0);
  if (a.mul(x, y) != a.one() || a.mul(y, x) != a.one()) return std::nullopt;
  return y;
}

std::vector<Row> all_units(const Algebra& a, uint64_t cap) {
  return collect_units(a, cap).units;
}

std::optional<TwoUnitSum> sum_of_two_units(const Algebra& a, const Row& x, uint64_t cap) {
  return two_sum_from(a, collect_units(a, cap), x);
}

TwoGoodReport every_element_two_unit_sum(const Algebra& a, uint64_t cap) {
  UnitSet s = collect_units(a, cap);
  Row x(a.dim(), 0);
  do {
    if (!two_sum_from(a, s, x)) return TwoGoodReport{false, x};
  } while (wb::next_tuple(x, static_cast<uint16_t>(a.field().q())));
  return TwoGoodReport{true, {}};
}

Row lift_idempotent(const Algebra& a, const Row& x) {
  // p-th powering fixes the residue class and, because x commutes with
  // itself, drives y^2 - y = (x^2 - x)^(p^m) to zero
  uint32_t p = a.field().p();
  Row y = x;
  for (uint32_t iter = 0; iter < 64; ++iter) {
    if (a.is_idempotent(y)) return y;
    y = a.pow(y, p);
  }
  wb::fail_internal("p-th powering did not stabilize; input was not idempotent modulo a nilpotent");
}

std::vector<Row> lift_orthogonal_idempotents(const Algebra& a, const Quotient& q,
                                             const std::vector<Row>& idems_q) {
  std::vector<Row> lifted;
  Row used = a.zero();  // sum of the lifts so far
  for (const Row& eq : idems_q) {
    Row cand = ffla::apply_row(eq, q.lift);
    // squeeze into the complement corner so orthogonality to earlier lifts is
    // exact, not just modulo the ideal
    Row mask = a.sub(a.one(), used);
    cand = a.mul(a.mul(mask, cand), mask);
    Row e = lift_idempotent(a, cand);
    for (const Row& prev : lifted)
      wb::check_internal(a.mul(e, prev) == a.zero() && a.mul(prev, e) == a.zero(),
                         "lifted family lost orthogonality");
    wb::check_internal(ffla::apply_row(e, q.proj) == eq,
                       "lift left its residue class");
    used = a.add(used, e);
    lifted.push_back(e);
  }
  return lifted;
}

BooleanTwoGoodSplit boolean_two_good_split(const Algebra& a, uint64_t cap) {
  const Field& f = a.field();
  BooleanTwoGoodSplit out;
  Quotient q = semisimple_quotient(a);
  Wedderburn w = wedderburn_blocks(q.alg);

  Row e1_bar = q.alg.zero();
  for (const Block& b : w.blocks)
    if (b.n == 1 && b.center_q == 2) e1_bar = q.alg.add(e1_bar, b.idem);

  Row e1 = a.zero();
  if (e1_bar != q.alg.zero()) e1 = lift_idempotent(a, ffla::apply_row(e1_bar, q.lift));

  if (!a.is_central(e1)) {
    // a central idempotent in the same residue class would equal this one, so
    // none exists and neither does the decomposition
    out.reason = "the residue-block idempotent has no central lift";
    out.witness = e1;
    return out;
  }
  out.e1 = e1;
  Row e2 = a.sub(a.one(), e1);

  std::vector<Row> brows, trows;
  for (uint32_t i = 0; i < a.dim(); ++i) {
    brows.push_back(a.mul(e1, a.basis_elem(i)));
    trows.push_back(a.mul(e2, a.basis_elem(i)));
  }
  out.boolean_part = Subspace::from_rows(f, brows, a.dim());
  out.two_good_part = Subspace::from_rows(f, trows, a.dim());

  if (out.boolean_part.dim() > 0) {
    Subalg bs = subalgebra_on(a, out.boolean_part, e1);
    auto total = wb::checked_pow(f.q(), bs.alg.dim(), cap);
    if (!total) wb::fail_cap("idempotent-factor sweep too large");
    Row x(bs.alg.dim(), 0);
    do {
      if (!bs.alg.is_idempotent(x)) {
        out.reason = "the candidate factor contains a non-idempotent element";
        out.witness = bs.to_ambient(x);
        return out;
      }
    } while (wb::next_tuple(x, static_cast<uint16_t>(f.q())));
  }

  if (out.two_good_part.dim() > 0) {
    Subalg ts = subalgebra_on(a, out.two_good_part, e2);
    TwoGoodReport rep = every_element_two_unit_sum(ts.alg, cap);
    if (!rep.two_good) {
      out.reason = "the complementary factor has an element that is not a sum of two units";
      out.witness = ts.to_ambient(rep.witness);
      return out;
    }
  }

  out.exists = true;
  return out;
}

uint32_t count_f2_quotients(const Algebra& a) {
  Quotient q = semisimple_quotient(a);
  Wedderburn w = wedderburn_blocks(q.alg);
  uint32_t n = 0;
  for (const Block& b : w.blocks)
    if (b.n == 1 && b.center_q == 2) ++n;
  return n;
}

uint32_t count_f2_quotients_functional(const Algebra& a, uint64_t cap) {
  const Field& f = a.field();
  if (f.q() != 2) wb::fail_validation("functional count is defined over the two-element field");
  uint32_t d = a.dim();
  auto total = wb::checked_pow(2, d, cap);
  if (!total) wb::fail_cap("functional sweep too large");

  uint32_t count = 0;
  Row phi(d, 0);
  do {
    uint16_t at_one = 0;
    for (uint32_t i = 0; i < d; ++i) at_one = f.add(at_one, f.mul(phi[i], a.one()[i]));
    if (at_one != 1) continue;
    bool mult = true;
    for (uint32_t i = 0; i < d && mult; ++i)
      for (uint32_t j = 0; j < d && mult; ++j) {
        uint16_t lhs = 0;
        for (uint32_t k = 0; k < d; ++k) lhs = f.add(lhs, f.mul(phi[k], a.c(i, j, k)));
        if (lhs != f.mul(phi[i], phi[j])) mult = false;
      }
    if (mult) ++count;
  } while (wb::next_tuple(phi, 2));
  return count;
}

UnitStableReport unit_stable_subring_split(const Algebra& a, const Subspace& t, uint64_t cap) {
  const Field& f = a.field();
  UnitStableReport out;
  if (t.ambient() != a.dim()) wb::fail_validation("subspace lives in the wrong ambient space");

  if (!t.contains(a.one())) {
    out.reason = "the subspace does not contain the identity";
    return out;
  }
  for (uint32_t i = 0; i < t.dim(); ++i)
    for (uint32_t j = 0; j < t.dim(); ++j) {
      Row x = t.basis().row(i), y = t.basis().row(j);
      Row p = a.mul(x, y);
      if (!t.contains(p)) {
        out.reason = "the subspace is not closed under multiplication";
        out.witness_a = x;
        out.witness_b = y;
        out.witness_product = p;
        return out;
      }
    }
  for (const Row& u : all_units(a, cap))
    for (uint32_t j = 0; j < t.dim(); ++j) {
      Row x = t.basis().row(j);
      Row p = a.mul(u, x);
      if (!t.contains(p)) {
        out.reason = "left multiplication by a unit leaves the subspace";
        out.witness_a = u;
        out.witness_b = x;
        out.witness_product = p;
        return out;
      }
    }
  out.valid = true;

  BooleanTwoGoodSplit amb = boolean_two_good_split(a, cap);
  if (!amb.exists) {
    out.reason = "ambient algebra admits no idempotent/two-good factorization: " + amb.reason;
    return out;
  }
  Row f2 = a.sub(a.one(), amb.e1);
  if (!t.contains(f2)) {
    out.reason = "the identity of the two-good factor is missing from the subspace";
    out.witness_a = f2;
    return out;
  }

  std::vector<Row> r1, r2;
  for (uint32_t j = 0; j < t.dim(); ++j) {
    r1.push_back(a.mul(amb.e1, t.basis().row(j)));
    r2.push_back(a.mul(f2, t.basis().row(j)));
  }
  out.t1 = Subspace::from_rows(f, r1, a.dim());
  out.t2 = Subspace::from_rows(f, r2, a.dim());

  if (out.t2 != amb.two_good_part) {
    out.reason = "the subspace meets the two-good factor in a proper part";
    return out;
  }
  if (out.t1.dim() > 0) {
    Subalg b = subalgebra_on(a, out.t1, amb.e1);
    auto total = wb::checked_pow(f.q(), b.alg.dim(), cap);
    if (!total) wb::fail_cap("boolean-part sweep too large");
    Row x(b.alg.dim(), 0);
    do {
      if (!b.alg.is_idempotent(x)) {
        out.reason = "the boolean part contains a non-idempotent element";
        out.boolean_witness = b.to_ambient(x);
        return out;
      }
    } while (wb::next_tuple(x, static_cast<uint16_t>(f.q())));
  }
  wb::check_internal(out.t1.sum(out.t2) == t, "split parts must recover the subspace");
  out.split_matches = true;
  return out;
}

}  // namespace algebra

#include "algebra/radical.hpp"

#include "support/util.hpp"

namespace algebra {

using ffla::Mat;
using ffla::Row;

namespace {

uint16_t product_trace(const Field& f, const Mat& a, const Mat& b) {
  uint16_t t = 0;
  for (uint32_t i = 0; i < a.rows(); ++i)
    for (uint32_t j = 0; j < a.cols(); ++j)
      t = f.add(t, f.mul(a(i, j), b(j, i)));
  return t;
}

// Radical as the terminal member of the coefficient-kernel chain: stage i
// keeps the elements a with c_{p^i}(reg(a) reg(b)) = 0 for every b in the
// previous stage, where c_j is the j-th characteristic coefficient of the
// regular representation. Each stage map is p^i-semilinear on the previous
// stage, so composing with the inverse Frobenius power makes the kernel a
// plain linear one.
Subspace radical_chain(const Algebra& a) {
  const Field& f = a.field();
  uint32_t d = a.dim();
  uint32_t p = f.p(), k = f.k();
  Subspace stage = Subspace::full(f, d);

  uint64_t pi = 1;
  for (uint32_t i = 0; pi <= d; ++i, pi *= p) {
    uint32_t m = stage.dim();
    if (m == 0) break;
    std::vector<Mat> regs(m);
    for (uint32_t s = 0; s < m; ++s) regs[s] = a.right_mult(stage.basis().row(s));

    uint32_t untwist = (k - (i % k)) % k;
    uint64_t untwist_exp = 1;
    for (uint32_t t = 0; t < untwist; ++t) untwist_exp *= p;

    Mat cond(f, m, m);
    for (uint32_t s = 0; s < m; ++s)
      for (uint32_t t = 0; t < m; ++t) {
        uint16_t v;
        if (i == 0) {
          v = product_trace(f, regs[s], regs[t]);
        } else {
          auto cp = ffla::charpoly(regs[s] * regs[t]);
          v = cp[static_cast<size_t>(pi)];
        }
        cond.at(s, t) = f.pow(v, untwist_exp);
      }

    Mat gamma = ffla::left_nullspace(cond);
    std::vector<Row> rows;
    for (uint32_t r = 0; r < gamma.rows(); ++r)
      rows.push_back(ffla::apply_row(gamma.row(r), stage.basis()));
    stage = Subspace::from_rows(f, rows, d);
  }
  return stage;
}

}  // namespace

bool is_ideal(const Algebra& a, const Subspace& s) {
  if (s.ambient() != a.dim()) return false;
  for (uint32_t r = 0; r < s.dim(); ++r) {
    Row x = s.basis().row(r);
    for (uint32_t i = 0; i < a.dim(); ++i) {
      Row b = a.basis_elem(i);
      if (!s.contains(a.mul(x, b)) || !s.contains(a.mul(b, x))) return false;
    }
  }
  return true;
}

bool is_nilpotent_subspace(const Algebra& a, const Subspace& s) {
  // power chain; for ideals (the only callers) it descends strictly until it
  // stabilizes, so dim+2 rounds decide
  Subspace w = s;
  for (uint32_t iter = 0; iter <= a.dim() + 1; ++iter) {
    if (w.dim() == 0) return true;
    std::vector<Row> rows;
    for (uint32_t x = 0; x < w.dim(); ++x)
      for (uint32_t y = 0; y < s.dim(); ++y)
        rows.push_back(a.mul(w.basis().row(x), s.basis().row(y)));
    Subspace next = Subspace::from_rows(a.field(), rows, a.dim());
    if (next == w) return false;
    w = next;
  }
  return false;
}

Subspace radical(const Algebra& a) {
  Subspace j = radical_chain(a);
  wb::check_internal(j.dim() < a.dim(), "radical must be a proper subspace");
  wb::check_internal(is_ideal(a, j), "radical chain result is not a two-sided ideal");
  wb::check_internal(is_nilpotent_subspace(a, j), "radical chain result is not nilpotent");
  Quotient q = quotient_algebra(a, j);
  wb::check_internal(radical_chain(q.alg).dim() == 0,
                     "quotient by the radical still has a nonzero chain result");
  return j;
}

Subspace radical_elementwise(const Algebra& a, uint64_t cap) {
  const Field& f = a.field();
  uint32_t d = a.dim();
  auto total = wb::checked_pow(f.q(), d, cap);
  if (!total) wb::fail_cap("element enumeration too large for the radical reference");

  std::vector<Row> members;
  uint64_t member_count = 0;
  Row x(d, 0);
  do {
    // the ideal generated by a radical element is nilpotent, and conversely
    std::vector<Row> gens;
    for (uint32_t i = 0; i < d; ++i)
      for (uint32_t j = 0; j < d; ++j)
        gens.push_back(a.mul(a.mul(a.basis_elem(i), x), a.basis_elem(j)));
    Subspace ideal = Subspace::from_rows(f, gens, d);
    if (is_nilpotent_subspace(a, ideal)) {
      members.push_back(x);
      ++member_count;
    }
  } while (wb::next_tuple(x, static_cast<uint16_t>(f.q())));

  Subspace j = Subspace::from_rows(f, members, d);
  auto expect = wb::checked_pow(f.q(), j.dim(), 1ull << 62);
  wb::check_internal(expect && *expect == member_count,
                     "radical member set is not closed under addition");
  return j;
}

bool is_semisimple(const Algebra& a) { return radical(a).dim() == 0; }

Quotient quotient_algebra(const Algebra& a, const Subspace& ideal, Validate v) {
  const Field& f = a.field();
  uint32_t d = a.dim();
  if (ideal.ambient() != d) wb::fail_validation("ideal lives in the wrong ambient space");
  if (ideal.dim() >= d) wb::fail_validation("quotient by the whole algebra");
  if (!is_ideal(a, ideal)) wb::fail_validation("subspace is not a two-sided ideal");

  auto comp = ideal.complement_cols();
  uint32_t m = d - ideal.dim();
  wb::check_internal(comp.size() == m, "complement coordinate count mismatch");

  Mat proj(f, d, m);
  for (uint32_t i = 0; i < d; ++i) {
    Row res = ideal.reduce(a.basis_elem(i));
    for (uint32_t t = 0; t < m; ++t) proj.at(i, t) = res[comp[t]];
  }
  Mat lift(f, m, d);
  for (uint32_t t = 0; t < m; ++t) lift.at(t, comp[t]) = 1;

  std::vector<uint16_t> table(static_cast<size_t>(m) * m * m);
  for (uint32_t s = 0; s < m; ++s)
    for (uint32_t t = 0; t < m; ++t) {
      Row prod = ffla::apply_row(a.mul(lift.row(s), lift.row(t)), proj);
      for (uint32_t u = 0; u < m; ++u)
        table[(static_cast<size_t>(s) * m + t) * m + u] = prod[u];
    }
  Row one_q = ffla::apply_row(a.one(), proj);
  Algebra q(f, m, std::move(table), std::move(one_q), v);
  wb::check_internal((lift * proj).is_identity(), "quotient section does not split the projection");
  return Quotient{std::move(q), std::move(proj), std::move(lift), ideal};
}

Quotient semisimple_quotient(const Algebra& a) { return quotient_algebra(a, radical(a)); }

}  // namespace algebra

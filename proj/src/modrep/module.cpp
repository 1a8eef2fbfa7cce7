#include "modrep/module.hpp"

#include "support/util.hpp"

namespace modrep {

Module::Module(const Algebra& a, uint32_t dim, std::vector<Mat> action, Validate v)
    : a_(&a), dim_(dim), action_(std::move(action)) {
  if (action_.size() != a.dim()) wb::fail_validation("one action matrix per algebra basis element");
  for (const Mat& m : action_)
    if (m.rows() != dim_ || m.cols() != dim_) wb::fail_validation("action matrix has the wrong shape");
  if (!rho(a.one()).is_identity()) wb::fail_validation("identity must act as the identity");
  if (v == Validate::full) {
    for (uint32_t i = 0; i < a.dim(); ++i)
      for (uint32_t j = 0; j < a.dim(); ++j) {
        Mat lhs = action_[i] * action_[j];
        Mat rhs(field(), dim_, dim_);
        for (uint32_t k = 0; k < a.dim(); ++k) {
          uint16_t ck = a.c(i, j, k);
          if (ck == 0) continue;
          rhs = rhs + action_[k].scaled(ck);
        }
        if (lhs != rhs) wb::fail_validation("action does not respect the structure constants");
      }
  }
}

Mat Module::rho(const Row& x) const {
  Mat r(field(), dim_, dim_);
  for (uint32_t i = 0; i < a_->dim(); ++i)
    if (x[i] != 0) r = r + action_[i].scaled(x[i]);
  return r;
}

Row Module::apply(const Row& v, const Row& x) const { return ffla::apply_row(v, rho(x)); }

uint64_t Module::hash() const {
  wb::Fnv1a h;
  h.u64(a_->hash());
  h.u32(dim_);
  for (const Mat& m : action_)
    for (uint32_t i = 0; i < m.rows(); ++i)
      for (uint32_t j = 0; j < m.cols(); ++j) h.u16(m(i, j));
  return h.value();
}

Module regular_module(const Algebra& a) {
  std::vector<Mat> act;
  for (uint32_t i = 0; i < a.dim(); ++i) act.push_back(a.right_mult(a.basis_elem(i)));
  return Module(a, a.dim(), std::move(act), Validate::basic);
}

bool invariant_subspace(const Module& m, const Subspace& u) {
  if (u.ambient() != m.dim()) return false;
  for (uint32_t i = 0; i < m.alg().dim(); ++i)
    for (uint32_t r = 0; r < u.dim(); ++r)
      if (!u.contains(ffla::apply_row(u.basis().row(r), m.action(i)))) return false;
  return true;
}

Module submodule_module(const Module& m, const Subspace& u) {
  if (!invariant_subspace(m, u)) wb::fail_validation("subspace is not action invariant");
  std::vector<Mat> act;
  for (uint32_t i = 0; i < m.alg().dim(); ++i) {
    Mat t(m.field(), u.dim(), u.dim());
    for (uint32_t r = 0; r < u.dim(); ++r)
      t.set_row(r, u.coordinates(ffla::apply_row(u.basis().row(r), m.action(i))));
    act.push_back(t);
  }
  return Module(m.alg(), u.dim(), std::move(act), Validate::basic);
}

ModuleQuotient quotient_module(const Module& m, const Subspace& u) {
  if (!invariant_subspace(m, u)) wb::fail_validation("subspace is not action invariant");
  const Field& f = m.field();
  auto comp = u.complement_cols();
  uint32_t md = m.dim(), qd = md - u.dim();

  Mat proj(f, md, qd);
  for (uint32_t i = 0; i < md; ++i) {
    Row e(md, 0);
    e[i] = 1;
    Row res = u.reduce(e);
    for (uint32_t t = 0; t < qd; ++t) proj.at(i, t) = res[comp[t]];
  }
  Mat lift(f, qd, md);
  for (uint32_t t = 0; t < qd; ++t) lift.at(t, comp[t]) = 1;

  std::vector<Mat> act;
  for (uint32_t i = 0; i < m.alg().dim(); ++i) act.push_back(lift * m.action(i) * proj);
  Module q(m.alg(), qd, std::move(act), Validate::basic);
  return ModuleQuotient{std::move(q), std::move(proj), std::move(lift), u};
}

Module direct_sum(const Module& a, const Module& b) {
  if (&a.alg() != &b.alg()) wb::fail_validation("direct sum needs modules over one algebra");
  const Field& f = a.field();
  uint32_t da = a.dim(), db = b.dim();
  std::vector<Mat> act;
  for (uint32_t i = 0; i < a.alg().dim(); ++i) {
    Mat m(f, da + db, da + db);
    for (uint32_t r = 0; r < da; ++r)
      for (uint32_t c = 0; c < da; ++c) m.at(r, c) = a.action(i)(r, c);
    for (uint32_t r = 0; r < db; ++r)
      for (uint32_t c = 0; c < db; ++c) m.at(da + r, da + c) = b.action(i)(r, c);
    act.push_back(m);
  }
  return Module(a.alg(), da + db, std::move(act), Validate::basic);
}

Module dual_module(const Module& m, const Algebra& op) {
  Algebra expect = algebra::opposite(m.alg());
  if (op.table() != expect.table() || op.one() != expect.one() || &op.field() != &m.field())
    wb::fail_validation("target algebra is not the opposite of the module's algebra");
  std::vector<Mat> act;
  for (uint32_t i = 0; i < m.alg().dim(); ++i) act.push_back(m.action(i).transpose());
  return Module(op, m.dim(), std::move(act), Validate::basic);
}

Subspace socle(const Module& m, const Subspace* jac) {
  Subspace j = jac ? *jac : algebra::radical(m.alg());
  if (j.dim() == 0) return Subspace::full(m.field(), m.dim());
  Mat stacked(m.field(), m.dim(), 0);
  for (uint32_t t = 0; t < j.dim(); ++t) stacked = ffla::hstack(stacked, m.rho(j.basis().row(t)));
  return Subspace::from_rows(ffla::left_nullspace(stacked));
}

Subspace radical_submodule(const Module& m, const Subspace* jac) {
  Subspace j = jac ? *jac : algebra::radical(m.alg());
  std::vector<Row> rows;
  for (uint32_t t = 0; t < j.dim(); ++t) {
    Mat r = m.rho(j.basis().row(t));
    for (uint32_t v = 0; v < m.dim(); ++v) rows.push_back(r.row(v));
  }
  return Subspace::from_rows(m.field(), rows, m.dim());
}

ModuleQuotient top(const Module& m, const Subspace* jac) {
  return quotient_module(m, radical_submodule(m, jac));
}

Module pull_back(const Module& mq, const Algebra& a, const Mat& proj) {
  std::vector<Mat> act;
  for (uint32_t i = 0; i < a.dim(); ++i)
    act.push_back(mq.rho(ffla::apply_row(a.basis_elem(i), proj)));
  return Module(a, mq.dim(), std::move(act), Validate::full);
}

}  // namespace modrep

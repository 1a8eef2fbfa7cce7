#include "invariance/invariance.hpp"

#include <algorithm>

#include "algebra/units.hpp"
#include "support/util.hpp"

namespace invariance {

namespace {

Row flatten(const Mat& m) {
  Row r;
  r.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (uint32_t i = 0; i < m.rows(); ++i)
    for (uint32_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
  return r;
}

StabilizerRing stabilizer_of(const Module& outer, const Subspace& marked) {
  if (outer.dim() == 0) wb::fail_validation("stability needs a nonzero outer module");
  modrep::EndAlgebra end = modrep::end_algebra(outer);
  const ffla::Field& f = outer.field();
  uint32_t h = end.alg.dim();

  Subspace ring = Subspace::from_rows(Mat::identity(f, h));
  if (marked.dim() > 0) {  // an empty marked set is stable under everything
    Mat cond(f, h, marked.dim() * outer.dim());
    for (uint32_t t = 0; t < h; ++t) {
      Mat ht = end.hom.matrix(t);
      Row row;
      row.reserve(static_cast<size_t>(marked.dim()) * outer.dim());
      for (uint32_t r = 0; r < marked.dim(); ++r) {
        Row residue = marked.reduce(ffla::apply_row(marked.basis().row(r), ht));
        row.insert(row.end(), residue.begin(), residue.end());
      }
      cond.set_row(t, row);
    }
    ring = Subspace::from_rows(ffla::left_nullspace(cond));
  }
  StabilizerRing s{std::move(end), std::move(ring)};

  wb::check_internal(s.ring.contains(s.end.alg.one()), "the identity stabilizes");
  for (uint32_t i = 0; i < s.ring.dim(); ++i)
    for (uint32_t j = 0; j < s.ring.dim(); ++j)
      wb::check_internal(
          s.ring.contains(s.end.alg.mul(s.ring.basis().row(i), s.ring.basis().row(j))),
          "stable maps compose to stable maps");
  return s;
}

// locate a marked vector the map moves out, and re-check it arithmetically
Certificate violation(const Subspace& marked, Mat w) {
  Certificate c;
  c.holds = false;
  for (uint32_t r = 0; r < marked.dim(); ++r) {
    Row from = marked.basis().row(r);
    Row to = ffla::apply_row(from, w);
    if (!marked.contains(to)) {
      wb::check_internal(!ffla::row_is_zero(marked.reduce(to)), "the witness re-verifies");
      c.moved_from = std::move(from);
      c.moved_to = std::move(to);
      c.witness = std::move(w);
      return c;
    }
  }
  wb::check_internal(false, "a violating map moves some marked vector");
  return c;
}

bool quotient_is_f2(const Algebra& a) {
  algebra::Quotient q = algebra::semisimple_quotient(a);
  return q.alg.dim() == 1 && q.alg.field().q() == 2;
}

}  // namespace

Embedded embed_in_hull(const Module& m) { return {m, envelopes::injective_envelope(m)}; }

Covered cover_of(const Module& m) { return {m, envelopes::projective_cover(m)}; }

StabilizerRing stabilizer(const Embedded& e) {
  return stabilizer_of(e.hull.env, Subspace::from_rows(e.hull.embed));
}

StabilizerRing kernel_stabilizer(const Covered& c) {
  return stabilizer_of(c.cover.cover, c.cover.kernel);
}

namespace {

Certificate full_stability(const Module& outer, const Subspace& marked) {
  if (outer.dim() == 0) return {};
  StabilizerRing s = stabilizer_of(outer, marked);
  uint32_t h = s.end.alg.dim();
  if (s.ring.dim() == h) return {};
  for (uint32_t t = 0; t < h; ++t) {
    if (s.ring.contains(s.end.alg.basis_elem(t))) continue;
    return violation(marked, s.end.hom.matrix(t));
  }
  wb::check_internal(false, "a proper stabilizer misses some basis map");
  return {};
}

Certificate unit_stability(const Module& outer, const Subspace& marked, uint64_t cap) {
  if (outer.dim() == 0) return {};
  StabilizerRing s = stabilizer_of(outer, marked);
  const Algebra& ea = s.end.alg;
  if (!wb::checked_pow(ea.field().q(), ea.dim(), cap))
    wb::fail_validation("the endomorphism ring is too large to enumerate units");

  // units 1 + j sweep the radical directions
  algebra::Quotient q = algebra::semisimple_quotient(ea);
  for (uint32_t r = 0; r < q.ideal.dim(); ++r) {
    Row j = q.ideal.basis().row(r);
    if (s.ring.contains(j)) continue;
    return violation(marked, s.end.to_matrix(ea.add(ea.one(), j)));
  }
  // with the radical stable, one lift decides each unit of the quotient
  for (const Row& ubar : algebra::all_units(q.alg, cap)) {
    Row lift = ffla::apply_row(ubar, q.lift);
    if (s.ring.contains(lift)) continue;
    return violation(marked, s.end.to_matrix(lift));
  }
  return {};
}

Certificate sweep_stability(const Module& outer, const Subspace& marked, uint64_t cap,
                            bool units_only) {
  if (outer.dim() == 0) return {};
  modrep::EndAlgebra end = modrep::end_algebra(outer);
  const ffla::Field& f = outer.field();
  uint32_t h = end.alg.dim();
  if (!wb::checked_pow(f.q(), h, cap))
    wb::fail_validation("the endomorphism ring is too large to sweep");

  Row x(h, 0);
  while (wb::next_tuple(x, static_cast<uint16_t>(f.q()))) {
    if (units_only && !algebra::is_unit(end.alg, x)) continue;
    Mat w = end.to_matrix(x);
    for (uint32_t r = 0; r < marked.dim(); ++r)
      if (!marked.contains(ffla::apply_row(marked.basis().row(r), w)))
        return violation(marked, std::move(w));
  }
  return {};
}

}  // namespace

Certificate is_quasi_injective(const Embedded& e) {
  return full_stability(e.hull.env, Subspace::from_rows(e.hull.embed));
}

Certificate is_automorphism_invariant(const Embedded& e, uint64_t cap) {
  return unit_stability(e.hull.env, Subspace::from_rows(e.hull.embed), cap);
}

Certificate is_quasi_projective(const Covered& c) {
  return full_stability(c.cover.cover, c.cover.kernel);
}

Certificate is_automorphism_coinvariant(const Covered& c, uint64_t cap) {
  return unit_stability(c.cover.cover, c.cover.kernel, cap);
}

Certificate quasi_injective_oracle(const Embedded& e, uint64_t cap) {
  return sweep_stability(e.hull.env, Subspace::from_rows(e.hull.embed), cap, false);
}

Certificate automorphism_invariant_oracle(const Embedded& e, uint64_t cap) {
  return sweep_stability(e.hull.env, Subspace::from_rows(e.hull.embed), cap, true);
}

Certificate quasi_projective_oracle(const Covered& c, uint64_t cap) {
  return sweep_stability(c.cover.cover, c.cover.kernel, cap, false);
}

Certificate automorphism_coinvariant_oracle(const Covered& c, uint64_t cap) {
  return sweep_stability(c.cover.cover, c.cover.kernel, cap, true);
}

bool is_pseudo_injective(const Module& m, uint64_t cap) {
  if (m.dim() == 0) return true;
  const ffla::Field& f = m.field();
  if (!wb::checked_pow(f.q(), m.dim(), cap))
    wb::fail_validation("the module is too large for the extension sweep");
  modrep::EndAlgebra em = modrep::end_algebra(m);

  for (const Subspace& n : modrep::all_submodules(m, cap)) {
    if (n.dim() == 0) continue;
    Module sub = modrep::submodule_module(m, n);
    modrep::HomSpace h = modrep::hom_space(sub, m);
    if (h.dim() == 0) continue;

    Mat restricted(f, em.alg.dim(), n.dim() * m.dim());
    for (uint32_t t = 0; t < em.alg.dim(); ++t)
      restricted.set_row(t, flatten(n.basis() * em.hom.matrix(t)));
    Subspace reachable = Subspace::from_rows(restricted);

    if (!wb::checked_pow(f.q(), h.dim(), cap))
      wb::fail_validation("a hom space is too large for the extension sweep");
    Row x(h.dim(), 0);
    while (wb::next_tuple(x, static_cast<uint16_t>(f.q()))) {
      Mat cand = h.combine(x);
      if (ffla::rank(cand) != n.dim()) continue;  // only embeddings must extend
      if (!reachable.contains(flatten(cand))) return false;
    }
  }
  return true;
}

StructDecomposition struct_decompose(const Embedded& e) {
  if (!is_automorphism_invariant(e).holds)
    wb::fail_validation("the module is not stable under hull automorphisms");
  const Module& m = e.mod;
  const ffla::Field& f = m.field();

  modrep::EndAlgebra em = modrep::end_algebra(m);
  algebra::Quotient q = algebra::semisimple_quotient(em.alg);
  algebra::Wedderburn w = algebra::wedderburn_blocks(q.alg);

  // residue idempotent of the two-element blocks, lifted to End(M)
  Row e1_bar(q.alg.dim(), 0);
  for (const algebra::Block& b : w.blocks)
    if (b.n == 1 && b.center_q == 2) e1_bar = q.alg.add(e1_bar, b.idem);
  Row e1 = algebra::lift_idempotent(em.alg, ffla::apply_row(e1_bar, q.lift));

  Mat p = em.to_matrix(e1);
  Subspace n_image = Subspace::from_rows(p);
  Subspace l_image = Subspace::from_rows(Mat::identity(f, m.dim()) - p);
  wb::check_internal(n_image.dim() + l_image.dim() == m.dim() &&
                         n_image.sum(l_image).dim() == m.dim(),
                     "the idempotent splits the module");
  StructDecomposition out{modrep::submodule_module(m, n_image),
                          modrep::submodule_module(m, l_image),
                          std::move(n_image),
                          std::move(l_image),
                          std::move(e1),
                          true,
                          false};

  // certify: every residue element of End(N) squares to itself
  if (out.semiboolean.dim() > 0) {
    modrep::EndAlgebra en = modrep::end_algebra(out.semiboolean);
    algebra::Quotient qn = algebra::semisimple_quotient(en.alg);
    if (!wb::checked_pow(f.q(), qn.alg.dim(), 1ull << 16))
      wb::fail_validation("the split certificate sweep is too large");
    Row x(qn.alg.dim(), 0);
    while (wb::next_tuple(x, static_cast<uint16_t>(f.q())))
      if (qn.alg.mul(x, x) != x) {
        out.n_certified = false;
        break;
      }
  }
  // certify: the complement is stable under every map of its own hull
  out.l_certified = out.endo_invariant.dim() == 0 ||
                    is_quasi_injective(embed_in_hull(out.endo_invariant)).holds;
  wb::check_internal(out.n_certified && out.l_certified, "the split certificates re-verify");
  return out;
}

IndecomposableReport indecomposable_report(const Embedded& e) {
  if (!modrep::has_local_endomorphism_ring(e.mod))
    wb::fail_validation("the module is not indecomposable");
  if (!is_automorphism_invariant(e).holds)
    wb::fail_validation("the module is not stable under hull automorphisms");
  if (is_quasi_injective(e).holds)
    wb::fail_validation("the module is stable under all hull endomorphisms");

  IndecomposableReport rep;
  modrep::EndAlgebra em = modrep::end_algebra(e.mod);
  rep.end_mod_is_f2 = quotient_is_f2(em.alg);

  modrep::Decomposition d = modrep::decompose(e.hull.env);
  rep.hull_summands = static_cast<uint32_t>(d.parts.size());
  rep.summands_pairwise_noniso = true;
  for (size_t i = 0; i < d.parts.size(); ++i)
    for (size_t j = i + 1; j < d.parts.size(); ++j)
      if (modrep::is_isomorphic(d.parts[i].mod, d.parts[j].mod).verdict == modrep::Iso::yes)
        rep.summands_pairwise_noniso = false;
  rep.summand_ends_are_f2 = true;
  for (const modrep::Summand& s : d.parts)
    if (!quotient_is_f2(modrep::end_algebra(s.mod).alg)) rep.summand_ends_are_f2 = false;
  rep.hull_f2_quotients = algebra::count_f2_quotients(modrep::end_algebra(e.hull.env).alg);

  wb::check_internal(rep.end_mod_is_f2, "the endomorphism residue is the two-element field");
  wb::check_internal(rep.hull_summands >= 2, "the hull splits into at least two pieces");
  wb::check_internal(rep.summands_pairwise_noniso, "hull pieces are pairwise non-isomorphic");
  wb::check_internal(rep.summand_ends_are_f2, "hull piece residues are the two-element field");
  wb::check_internal(rep.hull_f2_quotients >= 2, "the hull residue covers a product of two fields");
  return rep;
}

DualIndecomposableReport dual_indecomposable_report(const Covered& c) {
  if (!modrep::has_local_endomorphism_ring(c.mod))
    wb::fail_validation("the module is not indecomposable");
  if (!is_automorphism_coinvariant(c).holds)
    wb::fail_validation("the module is not stable under cover automorphisms");
  if (is_quasi_projective(c).holds)
    wb::fail_validation("the module is stable under all cover endomorphisms");

  DualIndecomposableReport rep;
  rep.end_mod_is_f2 = quotient_is_f2(modrep::end_algebra(c.mod).alg);
  modrep::Decomposition d = modrep::decompose(c.cover.cover);
  rep.cover_summands = static_cast<uint32_t>(d.parts.size());
  rep.summands_pairwise_noniso = true;
  for (size_t i = 0; i < d.parts.size(); ++i)
    for (size_t j = i + 1; j < d.parts.size(); ++j)
      if (modrep::is_isomorphic(d.parts[i].mod, d.parts[j].mod).verdict == modrep::Iso::yes)
        rep.summands_pairwise_noniso = false;
  rep.summand_ends_are_f2 = true;
  for (const modrep::Summand& s : d.parts)
    if (!quotient_is_f2(modrep::end_algebra(s.mod).alg)) rep.summand_ends_are_f2 = false;

  wb::check_internal(rep.end_mod_is_f2, "the endomorphism residue is the two-element field");
  wb::check_internal(rep.cover_summands >= 2, "the cover splits into at least two pieces");
  wb::check_internal(rep.summands_pairwise_noniso, "cover pieces are pairwise non-isomorphic");
  wb::check_internal(rep.summand_ends_are_f2, "cover piece residues are the two-element field");
  return rep;
}

SocleReport socle_report(const Embedded& e, uint64_t cap) {
  if (!is_automorphism_invariant(e).holds)
    wb::fail_validation("the module is not stable under hull automorphisms");
  if (is_quasi_injective(e).holds)
    wb::fail_validation("the module is stable under all hull endomorphisms");
  if (struct_decompose(e).l_image.dim() != 0)
    wb::fail_validation("the module has a nontrivial stable complement");

  const Module& m = e.mod;
  const Algebra& a = m.alg();
  Subspace soc = modrep::socle(m);
  Module soc_mod = modrep::submodule_module(m, soc);
  modrep::Decomposition d = modrep::decompose(soc_mod);

  SocleReport rep;
  rep.summands = static_cast<uint32_t>(d.parts.size());
  rep.pairwise_noniso = true;
  for (size_t i = 0; i < d.parts.size(); ++i)
    for (size_t j = i + 1; j < d.parts.size(); ++j)
      if (modrep::is_isomorphic(d.parts[i].mod, d.parts[j].mod).verdict == modrep::Iso::yes)
        rep.pairwise_noniso = false;
  rep.ends_are_f2 = true;
  for (const modrep::Summand& s : d.parts)
    if (modrep::hom_space(s.mod, s.mod).dim() != 1 || m.field().q() != 2)
      rep.ends_are_f2 = false;

  rep.essential = true;
  for (const Subspace& u : modrep::all_submodules(m, cap))
    if (u.dim() > 0 && u.intersect(soc).dim() == 0) rep.essential = false;

  // each simple socle piece fills a whole matrix row of its block
  std::vector<Module> ss = modrep::simples(a);
  algebra::Wedderburn w = algebra::wedderburn_blocks(algebra::semisimple_quotient(a).alg);
  rep.sizes_match_blocks = true;
  for (const modrep::Summand& s : d.parts) {
    bool matched = false;
    for (size_t i = 0; i < ss.size(); ++i)
      if (modrep::is_isomorphic(s.mod, ss[i]).verdict == modrep::Iso::yes) {
        matched = s.mod.dim() == w.blocks[i].n;
        break;
      }
    if (!matched) rep.sizes_match_blocks = false;
  }

  wb::check_internal(rep.summands >= 2, "the socle splits into at least two pieces");
  wb::check_internal(rep.pairwise_noniso, "socle pieces are pairwise non-isomorphic");
  wb::check_internal(rep.ends_are_f2, "socle piece endomorphisms are the two-element field");
  wb::check_internal(rep.essential, "the socle meets every nonzero submodule");
  wb::check_internal(rep.sizes_match_blocks, "socle piece sizes match their block sizes");
  return rep;
}

InvarianceReport full_report(const Module& m) {
  InvarianceReport rep;
  if (m.dim() == 0) return rep;
  Embedded e = embed_in_hull(m);
  Covered c = cover_of(m);
  rep.quasi = is_quasi_injective(e);
  rep.invariant = is_automorphism_invariant(e);
  rep.dual_quasi = is_quasi_projective(c);
  rep.dual_invariant = is_automorphism_coinvariant(c);

  modrep::EndAlgebra em = modrep::end_algebra(m);
  algebra::Quotient q = algebra::semisimple_quotient(em.alg);
  for (const algebra::Block& b : algebra::wedderburn_blocks(q.alg).blocks)
    rep.end_blocks.emplace_back(b.n, b.center_q);
  rep.f2_quotients = algebra::count_f2_quotients(em.alg);
  return rep;
}

TheoremSuite theorem_suite(const Algebra& a, const std::vector<Module>& modules) {
  TheoremSuite suite;
  for (size_t idx = 0; idx < modules.size(); ++idx) {
    const Module& m = modules[idx];
    TheoremCheck tc;
    tc.index = idx;
    if (m.dim() == 0) {
      tc.quasi = tc.invariant = tc.dual_quasi = tc.dual_invariant = true;
      suite.checks.push_back(tc);
      continue;
    }
    Embedded e = embed_in_hull(m);
    Covered c = cover_of(m);
    tc.quasi = is_quasi_injective(e).holds;
    tc.invariant = is_automorphism_invariant(e).holds;
    tc.dual_quasi = is_quasi_projective(c).holds;
    tc.dual_invariant = is_automorphism_coinvariant(c).holds;
    tc.f2_quotients = algebra::count_f2_quotients(modrep::end_algebra(m).alg);
    if (wb::checked_pow(m.field().q(), m.dim(), 1ull << 10)) {
      tc.pseudo = is_pseudo_injective(m);
      tc.pseudo_ran = true;
    }

    auto flag = [&](const std::string& what) {
      suite.violations.push_back("module " + std::to_string(idx) + ": " + what);
    };
    if (tc.quasi && !tc.invariant)
      flag("endomorphism stability without automorphism stability on the hull side");
    if (tc.dual_quasi && !tc.dual_invariant)
      flag("endomorphism stability without automorphism stability on the cover side");
    if (tc.pseudo_ran && tc.pseudo != tc.invariant)
      flag("the extension oracle disagrees with the automorphism check");
    if (tc.f2_quotients == 0 && tc.invariant && !tc.quasi)
      flag("no two-element quotient yet the hull stabilities differ");
    if (a.commutative()) {
      if (tc.invariant != tc.quasi) flag("commutative base: hull stabilities must coincide");
      if (tc.dual_invariant != tc.dual_quasi)
        flag("commutative base: cover stabilities must coincide");
      if (tc.f2_quotients < 2 && tc.invariant && !tc.quasi)
        flag("commutative base with a single two-element quotient: hull stabilities must coincide");
    }
    suite.checks.push_back(tc);
  }
  return suite;
}

}  // namespace invariance

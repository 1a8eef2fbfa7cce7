#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ffla/config.hpp"
#include "invariance/invariance.hpp"
#include "modrep/lattice.hpp"
#include "support/util.hpp"

using namespace invariance;
using ffla::Field;
using modrep::Iso;
using modrep::Module;

namespace {

struct Triple {
  uint32_t i, j, k;
  uint16_t v;
};

Algebra sparse_algebra(const Field& f, uint32_t d, const std::vector<Triple>& entries, Row one) {
  std::vector<uint16_t> t(static_cast<size_t>(d) * d * d, 0);
  for (const Triple& e : entries) t[(static_cast<size_t>(e.i) * d + e.j) * d + e.k] = e.v;
  return Algebra(f, d, std::move(t), std::move(one), algebra::Validate::full);
}

Algebra two_arrow_path_algebra() {
  const Field& f2 = Field::get(2);
  return sparse_algebra(f2, 5,
                        {{0, 0, 0, 1},
                         {0, 1, 1, 1},
                         {0, 2, 2, 1},
                         {1, 3, 1, 1},
                         {2, 4, 2, 1},
                         {3, 3, 3, 1},
                         {4, 4, 4, 1}},
                        {1, 0, 0, 1, 1});
}

Module top_row_module(const Algebra& a) {
  const Field& f = a.field();
  auto m = [&](std::vector<Row> rows) { return Mat::from_rows(f, rows, 3); };
  std::vector<Mat> action = {
      m({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}),
      m({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}),
      m({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}),
      m({{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}),
      m({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}),
  };
  return Module(a, 3, std::move(action));
}

Module corner_hull_module(const Algebra& a, bool second_arrow) {
  const Field& f = a.field();
  auto m = [&](std::vector<Row> rows) { return Mat::from_rows(f, rows, 2); };
  Mat fix_top = m({{1, 0}, {0, 0}});
  Mat lower = m({{0, 1}, {0, 0}});
  Mat fix_soc = m({{0, 0}, {0, 1}});
  Mat zero = m({{0, 0}, {0, 0}});
  std::vector<Mat> action = second_arrow ? std::vector<Mat>{fix_top, zero, lower, zero, fix_soc}
                                         : std::vector<Mat>{fix_top, lower, zero, fix_soc, zero};
  return Module(a, 2, std::move(action));
}

Algebra tail_algebra() {
  const Field& f2 = Field::get(2);
  return sparse_algebra(f2, 4,
                        {{0, 0, 0, 1},
                         {1, 0, 1, 1},
                         {2, 1, 1, 1},
                         {2, 2, 2, 1},
                         {2, 3, 3, 1},
                         {3, 2, 3, 1}},
                        {1, 0, 1, 0});
}

Module tail_module(const Algebra& a) {
  const Field& f = a.field();
  auto m = [&](std::vector<Row> rows) { return Mat::from_rows(f, rows, 3); };
  std::vector<Mat> action = {
      m({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}),
      m({{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}),
      m({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
      m({{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}),
  };
  return Module(a, 3, std::move(action));
}

// block-diagonal module over a product algebra: each factor acts on its side
Module glued_module(const Algebra& p, const Module& left, const Module& right) {
  const Field& f = p.field();
  uint32_t d = left.dim() + right.dim();
  std::vector<Mat> act;
  for (uint32_t i = 0; i < left.alg().dim(); ++i) {
    Mat mm(f, d, d);
    for (uint32_t r = 0; r < left.dim(); ++r)
      for (uint32_t c = 0; c < left.dim(); ++c) mm.at(r, c) = left.action(i)(r, c);
    act.push_back(std::move(mm));
  }
  for (uint32_t i = 0; i < right.alg().dim(); ++i) {
    Mat mm(f, d, d);
    for (uint32_t r = 0; r < right.dim(); ++r)
      for (uint32_t c = 0; c < right.dim(); ++c)
        mm.at(left.dim() + r, left.dim() + c) = right.action(i)(r, c);
    act.push_back(std::move(mm));
  }
  return Module(p, d, std::move(act));
}

Subspace line(const Field& f, std::vector<Row> rows, uint32_t ambient) {
  return Subspace::from_rows(Mat::from_rows(f, rows, ambient));
}

// the certificate's arithmetic, redone from scratch
void recheck_witness(const Certificate& c, const Subspace& marked) {
  REQUIRE(!c.holds);
  CHECK(marked.contains(c.moved_from));
  CHECK(ffla::apply_row(c.moved_from, c.witness) == c.moved_to);
  CHECK(!marked.contains(c.moved_to));
}

}  // namespace

TEST_CASE("stabilizer of the diagonal copy is the scalar line") {
  Algebra a = two_arrow_path_algebra();
  Module m = top_row_module(a);
  Embedded e = embed_in_hull(m);
  REQUIRE(e.hull.env.dim() == 4);

  StabilizerRing s = stabilizer(e);
  CHECK(s.end.alg.dim() == 2);
  CHECK(s.ring.dim() == 1);
  CHECK(s.ring.contains(s.end.alg.one()));

  Certificate q = is_quasi_injective(e);
  REQUIRE(!q.holds);
  const Field& f2 = Field::get(2);
  Mat expect = Mat::from_rows(
      f2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}, 4);
  CHECK(q.witness == expect);
  CHECK(q.moved_from == Row{1, 0, 1, 0});
  CHECK(q.moved_to == Row{1, 0, 0, 0});
  recheck_witness(q, Subspace::from_rows(e.hull.embed));

  // the witness is a genuine hull endomorphism sitting outside the stabilizer
  Row wc = s.end.hom.coords_of(q.witness);
  CHECK(s.end.hom.combine(wc) == q.witness);
  CHECK(!s.ring.contains(wc));
}

TEST_CASE("hull automorphisms stabilize the diagonal copy") {
  Algebra a = two_arrow_path_algebra();
  Module m = top_row_module(a);
  Embedded e = embed_in_hull(m);
  CHECK(is_automorphism_invariant(e).holds);
  CHECK(is_pseudo_injective(m));

  // a hull keeps its full stabilizer, and so does its socle
  Module e2 = corner_hull_module(a, false);
  Embedded ee = embed_in_hull(e2);
  CHECK(is_quasi_injective(ee).holds);
  CHECK(is_automorphism_invariant(ee).holds);
  CHECK(is_pseudo_injective(e2));
  Module soc2 = modrep::submodule_module(e2, modrep::socle(e2));
  Embedded es = embed_in_hull(soc2);
  CHECK(is_quasi_injective(es).holds);
  CHECK(is_automorphism_invariant(es).holds);

  // the free module moves under a swap of isomorphic hull summands
  Module reg = modrep::regular_module(a);
  Embedded er = embed_in_hull(reg);
  Certificate c = is_automorphism_invariant(er);
  REQUIRE(!c.holds);
  recheck_witness(c, Subspace::from_rows(er.hull.embed));
  CHECK(ffla::rank(c.witness) == er.hull.env.dim());  // the witness is invertible
  CHECK(!is_quasi_injective(er).holds);
  CHECK(!is_pseudo_injective(reg));
}

TEST_CASE("tail module is automorphism stable but not endomorphism stable") {
  Algebra tail = tail_algebra();
  Module tm = tail_module(tail);
  Embedded e = embed_in_hull(tm);
  REQUIRE(e.hull.env.dim() == 4);

  StabilizerRing s = stabilizer(e);
  CHECK(s.end.alg.dim() == 4);
  CHECK(s.ring.dim() == 3);

  Certificate q = is_quasi_injective(e);
  REQUIRE(!q.holds);
  recheck_witness(q, Subspace::from_rows(e.hull.embed));
  Row wc = s.end.hom.coords_of(q.witness);
  CHECK(!s.ring.contains(wc));

  CHECK(is_automorphism_invariant(e).holds);
  CHECK(is_pseudo_injective(tm));

  // the tail module is its own cover, so the kernel side is trivially stable
  Covered ct = cover_of(tm);
  CHECK(ct.cover.kernel.dim() == 0);
  CHECK(is_quasi_projective(ct).holds);
  CHECK(is_automorphism_coinvariant(ct).holds);
}

TEST_CASE("sweep oracles agree with the structured checks") {
  Algebra a = two_arrow_path_algebra();
  Algebra tail = tail_algebra();
  std::vector<Module> mods;
  mods.push_back(top_row_module(a));
  mods.push_back(corner_hull_module(a, false));
  mods.push_back(modrep::regular_module(a));
  for (Module& s : modrep::simples(a)) mods.push_back(std::move(s));
  mods.push_back(tail_module(tail));
  mods.push_back(modrep::regular_module(tail));
  for (Module& s : modrep::simples(tail)) mods.push_back(std::move(s));

  for (const Module& m : mods) {
    Embedded e = embed_in_hull(m);
    Covered c = cover_of(m);
    Certificate qo = quasi_injective_oracle(e);
    CHECK(qo.holds == is_quasi_injective(e).holds);
    if (!qo.holds) recheck_witness(qo, Subspace::from_rows(e.hull.embed));
    Certificate ao = automorphism_invariant_oracle(e);
    CHECK(ao.holds == is_automorphism_invariant(e).holds);
    if (!ao.holds) recheck_witness(ao, Subspace::from_rows(e.hull.embed));
    Certificate po = quasi_projective_oracle(c);
    CHECK(po.holds == is_quasi_projective(c).holds);
    if (!po.holds) recheck_witness(po, c.cover.kernel);
    Certificate co = automorphism_coinvariant_oracle(c);
    CHECK(co.holds == is_automorphism_coinvariant(c).holds);
    if (!co.holds) recheck_witness(co, c.cover.kernel);
  }
}

TEST_CASE("boolean residue splits the module") {
  Algebra a = two_arrow_path_algebra();
  Module m = top_row_module(a);
  StructDecomposition sd = struct_decompose(embed_in_hull(m));
  CHECK(sd.n_image.dim() == 3);
  CHECK(sd.l_image.dim() == 0);
  CHECK(sd.semiboolean.dim() == 3);
  CHECK(sd.endo_invariant.dim() == 0);
  CHECK(sd.idem == Row{1});
  CHECK(sd.n_certified);
  CHECK(sd.l_certified);

  // odd characteristic: no two-element residue, everything is hull stable
  const Field& f3 = Field::get(3);
  Algebra a3 = algebra::polynomial_quotient_algebra(f3, {0, 0, 1});
  Module reg3 = modrep::regular_module(a3);
  StructDecomposition sr = struct_decompose(embed_in_hull(reg3));
  CHECK(sr.n_image.dim() == 0);
  CHECK(sr.l_image.dim() == 2);
  CHECK(sr.idem == Row{0, 0});
  CHECK(sr.n_certified);
  CHECK(sr.l_certified);
  Module s3 = modrep::submodule_module(reg3, line(f3, {{0, 1}}, 2));
  StructDecomposition ss = struct_decompose(embed_in_hull(s3));
  CHECK(ss.n_image.dim() == 0);
  CHECK(ss.l_image.dim() == 1);

  // a genuine two-sided split over a product algebra
  const Field& f2 = Field::get(2);
  Algebra tail = tail_algebra();
  Algebra f4 = algebra::polynomial_quotient_algebra(f2, {1, 1, 1});
  Algebra p = algebra::product_algebra(tail, f4);
  Module glued = glued_module(p, tail_module(tail), modrep::regular_module(f4));
  StructDecomposition sg = struct_decompose(embed_in_hull(glued));
  CHECK(sg.n_image.dim() == 3);
  CHECK(sg.l_image.dim() == 2);
  CHECK(sg.n_image.contains(Row{1, 0, 0, 0, 0}));
  CHECK(sg.n_image.contains(Row{0, 1, 0, 0, 0}));
  CHECK(sg.n_image.contains(Row{0, 0, 1, 0, 0}));
  CHECK(sg.l_image.contains(Row{0, 0, 0, 1, 0}));
  CHECK(sg.l_image.contains(Row{0, 0, 0, 0, 1}));
  CHECK(sg.n_certified);
  CHECK(sg.l_certified);
  Module n_ref = modrep::submodule_module(
      glued, line(f2, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}, 5));
  CHECK(modrep::is_isomorphic(sg.semiboolean, n_ref).verdict == Iso::yes);
}

TEST_CASE("indecomposable and socle reports certify the examples") {
  Algebra a = two_arrow_path_algebra();
  Module m = top_row_module(a);
  Embedded e = embed_in_hull(m);

  IndecomposableReport rep = indecomposable_report(e);
  CHECK(rep.end_mod_is_f2);
  CHECK(rep.hull_summands == 2);
  CHECK(rep.summands_pairwise_noniso);
  CHECK(rep.summand_ends_are_f2);
  CHECK(rep.hull_f2_quotients == 2);

  SocleReport soc = socle_report(e);
  CHECK(soc.summands == 2);
  CHECK(soc.pairwise_noniso);
  CHECK(soc.ends_are_f2);
  CHECK(soc.essential);
  CHECK(soc.sizes_match_blocks);

  Algebra tail = tail_algebra();
  Module tm = tail_module(tail);
  Embedded et = embed_in_hull(tm);
  IndecomposableReport rt = indecomposable_report(et);
  CHECK(rt.end_mod_is_f2);
  CHECK(rt.hull_summands == 2);
  CHECK(rt.hull_f2_quotients == 2);
  SocleReport st = socle_report(et);
  CHECK(st.summands == 2);
  CHECK(st.essential);
  CHECK(st.sizes_match_blocks);

  // preconditions hold their ground
  Module e2 = corner_hull_module(a, false);
  CHECK_THROWS_AS(indecomposable_report(embed_in_hull(e2)), wb::Error);
  Module socm = modrep::submodule_module(m, modrep::socle(m));
  CHECK_THROWS_AS(indecomposable_report(embed_in_hull(socm)), wb::Error);
  CHECK_THROWS_AS(socle_report(embed_in_hull(e2)), wb::Error);
}

TEST_CASE("cover-side stability mirrors through the dual") {
  Algebra a = two_arrow_path_algebra();
  Algebra op = algebra::opposite(a);
  Module m = top_row_module(a);
  Module dm = modrep::dual_module(m, op);

  Covered c = cover_of(dm);
  CHECK(c.cover.cover.dim() == 4);
  CHECK(c.cover.kernel.dim() == 1);
  StabilizerRing s = kernel_stabilizer(c);
  CHECK(s.end.alg.dim() == 2);
  CHECK(s.ring.dim() == 1);

  Certificate qp = is_quasi_projective(c);
  REQUIRE(!qp.holds);
  recheck_witness(qp, c.cover.kernel);
  CHECK(is_automorphism_coinvariant(c).holds);

  DualIndecomposableReport rep = dual_indecomposable_report(c);
  CHECK(rep.end_mod_is_f2);
  CHECK(rep.cover_summands == 2);
  CHECK(rep.summands_pairwise_noniso);
  CHECK(rep.summand_ends_are_f2);
}

TEST_CASE("full report collects both sides and the residue shape") {
  Algebra a = two_arrow_path_algebra();
  Module m = top_row_module(a);
  InvarianceReport rep = full_report(m);
  CHECK(!rep.quasi.holds);
  CHECK(rep.invariant.holds);
  CHECK(rep.dual_quasi.holds);  // the module is projective
  CHECK(rep.dual_invariant.holds);
  std::vector<std::pair<uint32_t, uint64_t>> blocks = {{1, 2}};
  CHECK(rep.end_blocks == blocks);
  CHECK(rep.f2_quotients == 1);
}

TEST_CASE("theorem suite finds no defects across the families") {
  const Field& f2 = Field::get(2);
  const Field& f3 = Field::get(3);

  {
    Algebra a = algebra::polynomial_quotient_algebra(f2, {0, 0, 1});
    Module reg = modrep::regular_module(a);
    Module rad = modrep::submodule_module(reg, line(f2, {{0, 1}}, 2));
    Module zero(a, 0, std::vector<Mat>(a.dim(), Mat(f2, 0, 0)));
    TheoremSuite ts = theorem_suite(a, {reg, rad, zero});
    CHECK(ts.violations.empty());
    CHECK(ts.checks[0].quasi);
    CHECK(ts.checks[0].invariant);
    CHECK(ts.checks[1].quasi);
    CHECK(ts.checks[2].quasi);  // the zero module is trivially stable
  }
  {
    Algebra a = algebra::polynomial_quotient_algebra(f2, {0, 0, 0, 1});
    Module reg = modrep::regular_module(a);
    Module plane = modrep::submodule_module(reg, line(f2, {{0, 1, 0}, {0, 0, 1}}, 3));
    Module socl = modrep::submodule_module(reg, line(f2, {{0, 0, 1}}, 3));
    TheoremSuite ts = theorem_suite(a, {reg, plane, socl});
    CHECK(ts.violations.empty());
  }
  {
    Algebra a = algebra::polynomial_quotient_algebra(f3, {0, 0, 1});
    Module reg = modrep::regular_module(a);
    Module rad = modrep::submodule_module(reg, line(f3, {{0, 1}}, 2));
    TheoremSuite ts = theorem_suite(a, {reg, rad});
    CHECK(ts.violations.empty());
  }
  {
    Algebra a = algebra::polynomial_quotient_algebra(f2, {0, 1, 1});  // two field factors
    Module reg = modrep::regular_module(a);
    Module left = modrep::submodule_module(reg, line(f2, {{0, 1}}, 2));
    Module right = modrep::submodule_module(reg, line(f2, {{1, 1}}, 2));
    TheoremSuite ts = theorem_suite(a, {reg, left, right});
    CHECK(ts.violations.empty());
    CHECK(ts.checks[0].quasi);
    CHECK(ts.checks[0].f2_quotients == 2);
  }
  {
    Algebra a = two_arrow_path_algebra();
    std::vector<Module> mods = {top_row_module(a), modrep::regular_module(a),
                                corner_hull_module(a, false), corner_hull_module(a, true)};
    for (Module& s : modrep::simples(a)) mods.push_back(std::move(s));
    TheoremSuite ts = theorem_suite(a, mods);
    CHECK(ts.violations.empty());
    CHECK(!ts.checks[0].quasi);
    CHECK(ts.checks[0].invariant);
    CHECK(ts.checks[0].pseudo_ran);
    CHECK(ts.checks[0].pseudo);
    CHECK(!ts.checks[1].invariant);
    CHECK(!ts.checks[1].pseudo);
    CHECK(ts.checks[2].quasi);
  }
  {
    Algebra tail = tail_algebra();
    std::vector<Module> mods = {tail_module(tail), modrep::regular_module(tail)};
    for (Module& s : modrep::simples(tail)) mods.push_back(std::move(s));
    TheoremSuite ts = theorem_suite(tail, mods);
    CHECK(ts.violations.empty());
    CHECK(ts.checks[0].invariant);
    CHECK(!ts.checks[0].quasi);
    CHECK(ts.checks[0].pseudo);
    CHECK(ts.checks[0].f2_quotients == 1);
    CHECK(!ts.checks[1].invariant);
  }
}

TEST_CASE("kernel choice does not change stability verdicts") {
  for (ffla::F2Kernel k : {ffla::F2Kernel::bitpacked, ffla::F2Kernel::generic}) {
    ffla::F2KernelScope scope(k);
    Algebra a = two_arrow_path_algebra();
    Module m = top_row_module(a);
    Embedded e = embed_in_hull(m);
    CHECK(!is_quasi_injective(e).holds);
    CHECK(is_automorphism_invariant(e).holds);
    StabilizerRing s = stabilizer(e);
    CHECK(s.ring.dim() == 1);
    Algebra tail = tail_algebra();
    Module tm = tail_module(tail);
    CHECK(stabilizer(embed_in_hull(tm)).ring.dim() == 3);
  }
}

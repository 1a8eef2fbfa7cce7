#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "envelopes/envelopes.hpp"
#include "support/util.hpp"

using namespace envelopes;
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

}  // namespace

TEST_CASE("injective indecomposables match their socles blockwise") {
  Algebra a = two_arrow_path_algebra();
  std::vector<Module> injs = indecomposable_injectives(a);
  std::vector<Module> ss = modrep::simples(a);
  REQUIRE(injs.size() == 3);

  std::vector<uint32_t> dims;
  for (const Module& e : injs) dims.push_back(e.dim());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<uint32_t>{1, 2, 2});

  for (size_t i = 0; i < injs.size(); ++i) {
    Module soc_mod = modrep::submodule_module(injs[i], modrep::socle(injs[i]));
    CHECK(modrep::is_isomorphic(soc_mod, ss[i]).verdict == Iso::yes);
    CHECK(modrep::goldie_dimension(injs[i]) == 1);
  }

  // the two nontrivial hulls are the two corner hulls, in one order or the other
  auto hits = [&](const Module& target) {
    int n = 0;
    for (const Module& e : injs)
      if (modrep::is_isomorphic(e, target).verdict == Iso::yes) ++n;
    return n;
  };
  CHECK(hits(corner_hull_module(a, false)) == 1);
  CHECK(hits(corner_hull_module(a, true)) == 1);
}

TEST_CASE("projective indecomposables match their tops blockwise") {
  Algebra a = two_arrow_path_algebra();
  std::vector<Module> projs = indecomposable_projectives(a);
  std::vector<Module> ss = modrep::simples(a);
  REQUIRE(projs.size() == 3);

  std::vector<uint32_t> dims;
  for (const Module& p : projs) dims.push_back(p.dim());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<uint32_t>{1, 1, 3});

  for (size_t i = 0; i < projs.size(); ++i)
    CHECK(modrep::is_isomorphic(modrep::top(projs[i]).mod, ss[i]).verdict == Iso::yes);
}

TEST_CASE("the extension test certifies the constructed hulls") {
  Algebra a = two_arrow_path_algebra();

  // dual construction on one side, ideal-extension test on the other
  for (const Module& e : indecomposable_injectives(a)) CHECK(is_injective_module(e));
  CHECK(!is_injective_module(top_row_module(a)));

  Module sum = modrep::direct_sum(corner_hull_module(a, false), corner_hull_module(a, true));
  CHECK(is_injective_module(sum));

  // over a semisimple algebra everything passes
  Algebra m2 = algebra::matrix_algebra(Field::get(2), 2);
  CHECK(is_injective_module(modrep::regular_module(m2)));
  CHECK(is_injective_module(modrep::simples(m2)[0]));
}

TEST_CASE("envelopes embed essentially with the right hull") {
  Algebra a = two_arrow_path_algebra();
  Module m = top_row_module(a);

  Envelope env = injective_envelope(m);
  CHECK(env.env.dim() == 4);
  CHECK(ffla::rank(env.embed) == 3);
  Module expected = modrep::direct_sum(corner_hull_module(a, false), corner_hull_module(a, true));
  CHECK(modrep::is_isomorphic(env.env, expected).verdict == Iso::yes);

  // the embedding is a module map with essential image
  for (uint32_t i = 0; i < a.dim(); ++i)
    CHECK(m.action(i) * env.embed == env.embed * env.env.action(i));
  CHECK(Subspace::from_rows(env.embed).contains(modrep::socle(env.env)));

  // hulls of simples are the indecomposable injectives; hulls of hulls stall
  std::vector<Module> injs = indecomposable_injectives(a);
  std::vector<Module> ss = modrep::simples(a);
  for (size_t i = 0; i < ss.size(); ++i) {
    Envelope se = injective_envelope(ss[i]);
    CHECK(modrep::is_isomorphic(se.env, injs[i]).verdict == Iso::yes);
  }
  Envelope ee = injective_envelope(injs[1]);
  CHECK(ee.env.dim() == injs[1].dim());
}

TEST_CASE("tail algebra hulls and their asymmetric homs") {
  Algebra a = tail_algebra();
  std::vector<Module> injs = indecomposable_injectives(a);
  REQUIRE(injs.size() == 2);
  CHECK(injs[0].dim() == 2);
  CHECK(injs[1].dim() == 2);

  // one hull is uniserial with repeated factor, the other mixes two factors
  std::vector<uint32_t> end_dims = {modrep::hom_space(injs[0], injs[0]).dim(),
                                    modrep::hom_space(injs[1], injs[1]).dim()};
  std::sort(end_dims.begin(), end_dims.end());
  CHECK(end_dims == std::vector<uint32_t>{1, 2});

  std::vector<uint32_t> cross = {modrep::hom_space(injs[0], injs[1]).dim(),
                                 modrep::hom_space(injs[1], injs[0]).dim()};
  std::sort(cross.begin(), cross.end());
  CHECK(cross == std::vector<uint32_t>{0, 1});

  Module m = tail_module(a);
  Envelope env = injective_envelope(m);
  CHECK(env.env.dim() == 4);
  CHECK(ffla::rank(env.embed) == 3);
  CHECK(modrep::hom_space(env.env, env.env).dim() == 4);
  CHECK(is_injective_module(env.env));
  CHECK(!is_injective_module(m));
}

TEST_CASE("projective covers are minimal surjections") {
  Algebra a = two_arrow_path_algebra();
  Module m = top_row_module(a);

  // a projective covers itself
  Cover self = projective_cover(m);
  CHECK(self.cover.dim() == 3);
  CHECK(self.kernel.dim() == 0);
  CHECK(modrep::is_isomorphic(self.cover, m).verdict == Iso::yes);

  // covers of simples are the indecomposable projectives
  std::vector<Module> projs = indecomposable_projectives(a);
  std::vector<Module> ss = modrep::simples(a);
  for (size_t i = 0; i < ss.size(); ++i) {
    Cover c = projective_cover(ss[i]);
    CHECK(modrep::is_isomorphic(c.cover, projs[i]).verdict == Iso::yes);
    CHECK(c.kernel.dim() == c.cover.dim() - 1);
    CHECK(ffla::rank(c.onto) == 1);
    CHECK(modrep::radical_submodule(c.cover).contains(c.kernel));
  }

  // the map is a module map
  for (uint32_t i = 0; i < a.dim(); ++i)
    CHECK(self.cover.action(i) * self.onto == self.onto * m.action(i));
}

TEST_CASE("covers over the opposite algebra split into two pieces") {
  Algebra a = two_arrow_path_algebra();
  Algebra op = algebra::opposite(a);
  Module md = modrep::dual_module(top_row_module(a), op);

  // the dual has semisimple top of length two, so its cover has two summands
  Cover c = projective_cover(md);
  CHECK(c.cover.dim() == 4);
  CHECK(ffla::rank(c.onto) == 3);
  CHECK(c.kernel.dim() == 1);
  modrep::Decomposition d = modrep::decompose(c.cover);
  REQUIRE(d.parts.size() == 2);
  CHECK(d.parts[0].mod.dim() == 2);
  CHECK(d.parts[1].mod.dim() == 2);

  Algebra tail = tail_algebra();
  Module tm = tail_module(tail);
  CHECK(projective_cover(tm).kernel.dim() == 0);
}

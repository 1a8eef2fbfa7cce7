#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algebra/algebra.hpp"
#include "algebra/radical.hpp"
#include "algebra/units.hpp"
#include "algebra/wedderburn.hpp"
#include "support/util.hpp"

using namespace algebra;
using ffla::Field;
using ffla::Row;
using ffla::Subspace;

namespace {

struct Triple {
  uint32_t i, j, k;
  uint16_t v;
};

Algebra sparse_algebra(const Field& f, uint32_t d, const std::vector<Triple>& entries, Row one) {
  std::vector<uint16_t> t(static_cast<size_t>(d) * d * d, 0);
  for (const Triple& e : entries) t[(static_cast<size_t>(e.i) * d + e.j) * d + e.k] = e.v;
  return Algebra(f, d, std::move(t), std::move(one), Validate::full);
}

// three paths out of one vertex: e11 with arrows into e22 and e33 columns
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

// upper-triangular glue of F_2 (left) acting before an F_4 column (right);
// its residue idempotent over F_2 has no central lift
Algebra mixed_corner_algebra() {
  const Field& f2 = Field::get(2);
  return sparse_algebra(f2, 5,
                        {{0, 0, 0, 1},
                         {0, 1, 1, 1},
                         {0, 2, 2, 1},
                         {1, 3, 1, 1},
                         {1, 4, 2, 1},
                         {2, 3, 2, 1},
                         {2, 4, 1, 1},
                         {2, 4, 2, 1},
                         {3, 3, 3, 1},
                         {3, 4, 4, 1},
                         {4, 3, 4, 1},
                         {4, 4, 3, 1},
                         {4, 4, 4, 1}},
                        {1, 0, 0, 1, 0});
}

Subspace span_of(const Field& f, const std::vector<Row>& rows, uint32_t ambient) {
  return Subspace::from_rows(f, rows, ambient);
}

}  // namespace

TEST_CASE("builders produce validated algebras of the right shape") {
  const Field& f2 = Field::get(2);
  const Field& f3 = Field::get(3);

  Algebra m2 = matrix_algebra(f2, 2);
  CHECK(m2.dim() == 4);
  CHECK(!m2.commutative());
  CHECK(m2.one() == Row{1, 0, 0, 1});

  Algebra f4 = extension_field_algebra(f2, 2);
  CHECK(f4.dim() == 2);
  CHECK(f4.commutative());

  Algebra m2f4 = matrix_algebra_over_extension(f2, 2, 2);
  CHECK(m2f4.dim() == 8);

  Algebra t3 = upper_triangular_algebra(f3, 3);
  CHECK(t3.dim() == 6);

  Algebra prod = product_algebra(field_algebra(f2), matrix_algebra(f2, 2));
  CHECK(prod.dim() == 5);
  CHECK(prod.one() == Row{1, 1, 0, 0, 1});

  CHECK_THROWS_AS(polynomial_quotient_algebra(f2, {1, 1, 0}), wb::Error);
}

TEST_CASE("radical of reference algebras") {
  const Field& f2 = Field::get(2);
  const Field& f3 = Field::get(3);

  CHECK(radical(matrix_algebra(f2, 2)).dim() == 0);
  CHECK(radical(matrix_algebra(f3, 2)).dim() == 0);
  CHECK(radical(matrix_algebra(f2, 3)).dim() == 0);
  CHECK(radical(extension_field_algebra(f2, 2)).dim() == 0);
  CHECK(radical(extension_field_algebra(f3, 2)).dim() == 0);

  Algebra dual2 = polynomial_quotient_algebra(f2, {0, 0, 1});
  CHECK(radical(dual2) == span_of(f2, {{0, 1}}, 2));

  Algebra trip2 = polynomial_quotient_algebra(f2, {0, 0, 0, 1});
  CHECK(radical(trip2) == span_of(f2, {{0, 1, 0}, {0, 0, 1}}, 3));

  Algebra dual3 = polynomial_quotient_algebra(f3, {0, 0, 1});
  CHECK(radical(dual3) == span_of(f3, {{0, 1}}, 2));

  // x^2 - 1 = (x+1)^2 in characteristic two
  Algebra invol = polynomial_quotient_algebra(f2, {1, 0, 1});
  CHECK(radical(invol) == span_of(f2, {{1, 1}}, 2));

  // x^3 - 1 = (x-1)^3 in characteristic three
  Algebra c3 = polynomial_quotient_algebra(f3, {2, 0, 0, 1});
  CHECK(radical(c3).dim() == 2);

  Algebra t2 = upper_triangular_algebra(f2, 2);
  CHECK(radical(t2) == span_of(f2, {{0, 1, 0}}, 3));
  CHECK(radical(upper_triangular_algebra(f2, 3)).dim() == 3);

  CHECK(radical(two_arrow_path_algebra()) ==
        span_of(f2, {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}, 5));
  CHECK(radical(mixed_corner_algebra()) ==
        span_of(f2, {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}, 5));

  Algebra prod = product_algebra(dual2, matrix_algebra(f2, 2));
  CHECK(radical(prod) == span_of(f2, {{0, 1, 0, 0, 0, 0}}, 6));
}

TEST_CASE("chain radical agrees with the elementwise reference across the zoo") {
  const Field& f2 = Field::get(2);
  const Field& f3 = Field::get(3);
  const Field& f4 = Field::get(2, 2);
  const Field& f5 = Field::get(5);

  std::vector<Algebra> zoo;
  zoo.push_back(matrix_algebra(f2, 2));
  zoo.push_back(matrix_algebra(f2, 3));
  zoo.push_back(matrix_algebra(f3, 2));
  zoo.push_back(extension_field_algebra(f2, 2));
  zoo.push_back(polynomial_quotient_algebra(f2, {0, 0, 1}));
  zoo.push_back(polynomial_quotient_algebra(f2, {0, 0, 0, 1}));
  zoo.push_back(polynomial_quotient_algebra(f2, {0, 0, 0, 0, 1}));
  zoo.push_back(polynomial_quotient_algebra(f3, {0, 0, 1}));
  zoo.push_back(polynomial_quotient_algebra(f5, {0, 0, 1}));
  zoo.push_back(polynomial_quotient_algebra(f2, {1, 0, 1}));
  zoo.push_back(polynomial_quotient_algebra(f3, {2, 0, 0, 1}));
  zoo.push_back(polynomial_quotient_algebra(f4, {0, 0, 1}));
  zoo.push_back(upper_triangular_algebra(f2, 2));
  zoo.push_back(upper_triangular_algebra(f2, 3));
  zoo.push_back(upper_triangular_algebra(f3, 2));
  zoo.push_back(two_arrow_path_algebra());
  zoo.push_back(mixed_corner_algebra());
  zoo.push_back(product_algebra(polynomial_quotient_algebra(f2, {0, 0, 1}), field_algebra(f2)));
  zoo.push_back(product_algebra(matrix_algebra(f2, 2), polynomial_quotient_algebra(f2, {0, 0, 1})));

  for (size_t i = 0; i < zoo.size(); ++i) {
    CAPTURE(i);
    CHECK(radical(zoo[i]) == radical_elementwise(zoo[i]));
  }

  CHECK_THROWS_AS(radical_elementwise(matrix_algebra(f2, 3), 100), wb::Error);
}

TEST_CASE("semisimple quotient really is semisimple") {
  const Field& f2 = Field::get(2);
  for (Algebra a : {upper_triangular_algebra(f2, 3), mixed_corner_algebra(),
                    polynomial_quotient_algebra(f2, {0, 0, 0, 1})}) {
    Quotient q = semisimple_quotient(a);
    CHECK(q.alg.dim() == a.dim() - radical(a).dim());
    CHECK(radical(q.alg).dim() == 0);
  }
}

TEST_CASE("block inventory of semisimple algebras") {
  const Field& f2 = Field::get(2);
  const Field& f3 = Field::get(3);

  auto blocks_of = [](const Algebra& a) {
    std::vector<std::pair<uint32_t, uint64_t>> v;
    for (const Block& b : wedderburn_blocks(a).blocks) v.emplace_back(b.n, b.center_q);
    std::sort(v.begin(), v.end());
    return v;
  };
  using BL = std::vector<std::pair<uint32_t, uint64_t>>;

  CHECK(blocks_of(matrix_algebra(f2, 2)) == BL{{2, 2}});
  CHECK(blocks_of(matrix_algebra(f3, 2)) == BL{{2, 3}});
  CHECK(blocks_of(extension_field_algebra(f2, 2)) == BL{{1, 4}});
  CHECK(blocks_of(matrix_algebra_over_extension(f2, 2, 2)) == BL{{2, 4}});
  CHECK(blocks_of(product_algebra(field_algebra(f2), field_algebra(f2))) == BL{{1, 2}, {1, 2}});
  CHECK(blocks_of(product_algebra(matrix_algebra(f2, 2), extension_field_algebra(f2, 2))) ==
        BL{{1, 4}, {2, 2}});
  CHECK(blocks_of(semisimple_quotient(upper_triangular_algebra(f2, 2)).alg) == BL{{1, 2}, {1, 2}});
  CHECK(blocks_of(semisimple_quotient(mixed_corner_algebra()).alg) == BL{{1, 2}, {1, 4}});

  CHECK(center(matrix_algebra(f2, 2)).dim() == 1);
  CHECK(center(product_algebra(matrix_algebra(f2, 2), field_algebra(f2))).dim() == 2);
  CHECK(center(extension_field_algebra(f2, 3)).dim() == 3);

  CHECK_THROWS_AS(wedderburn_blocks(upper_triangular_algebra(f2, 2)), wb::Error);
}

TEST_CASE("primitive orthogonal idempotent counts match block sizes") {
  const Field& f2 = Field::get(2);
  const Field& f3 = Field::get(3);
  CHECK(primitive_orthogonal_idempotents(matrix_algebra(f2, 2)).size() == 2);
  CHECK(primitive_orthogonal_idempotents(matrix_algebra(f2, 3)).size() == 3);
  CHECK(primitive_orthogonal_idempotents(matrix_algebra(f3, 2)).size() == 2);
  CHECK(primitive_orthogonal_idempotents(extension_field_algebra(f2, 2)).size() == 1);
  CHECK(primitive_orthogonal_idempotents(
            product_algebra(matrix_algebra(f2, 2), field_algebra(f2)))
            .size() == 3);
  CHECK(primitive_orthogonal_idempotents(matrix_algebra_over_extension(f2, 2, 2)).size() == 2);
}

TEST_CASE("element minimal polynomials") {
  const Field& f2 = Field::get(2);
  Algebra trip = polynomial_quotient_algebra(f2, {0, 0, 0, 1});
  CHECK(element_minpoly(trip, {0, 1, 0}) == ffla::Poly(f2, {0, 0, 0, 1}));
  CHECK(element_minpoly(trip, trip.one()) == ffla::Poly(f2, {1, 1}));

  Algebra f4 = extension_field_algebra(f2, 2);
  CHECK(element_minpoly(f4, {0, 1}) == ffla::Poly(f2, {1, 1, 1}));

  Algebra m2 = matrix_algebra(f2, 2);
  CHECK(element_minpoly(m2, {0, 1, 0, 0}) == ffla::Poly(f2, {0, 0, 1}));
}

TEST_CASE("idempotent lifting by p-th powers") {
  const Field& f3 = Field::get(3);
  Algebra dual3 = polynomial_quotient_algebra(f3, {0, 0, 1});
  // 1 + t squares into a two-cycle but cubing lands on the idempotent 1
  Row lifted = lift_idempotent(dual3, {1, 1});
  CHECK(lifted == Row{1, 0});
  CHECK(radical(dual3).contains(dual3.sub(lifted, Row{1, 1})));

  const Field& f2 = Field::get(2);
  Algebra t2 = upper_triangular_algebra(f2, 2);
  Quotient q = semisimple_quotient(t2);
  std::vector<Row> fam =
      lift_orthogonal_idempotents(t2, q, {q.alg.basis_elem(0), q.alg.basis_elem(1)});
  REQUIRE(fam.size() == 2);
  CHECK(t2.add(fam[0], fam[1]) == t2.one());
  CHECK(t2.mul(fam[0], fam[1]) == t2.zero());
  CHECK(t2.is_idempotent(fam[0]));
  CHECK(t2.is_idempotent(fam[1]));
}

TEST_CASE("unit structure of small rings") {
  const Field& f2 = Field::get(2);
  const Field& f3 = Field::get(3);

  Algebra one_f2 = field_algebra(f2);
  CHECK(all_units(one_f2) == std::vector<Row>{{1}});
  TwoGoodReport r = every_element_two_unit_sum(one_f2);
  CHECK(!r.two_good);
  CHECK(r.witness == Row{1});

  CHECK(every_element_two_unit_sum(field_algebra(f3)).two_good);

  Algebra m2 = matrix_algebra(f2, 2);
  CHECK(all_units(m2).size() == 6);  // |GL_2(F_2)|
  CHECK(every_element_two_unit_sum(m2).two_good);
  auto pair = sum_of_two_units(m2, {1, 0, 0, 0});
  REQUIRE(pair.has_value());
  CHECK(m2.add(pair->u, pair->v) == Row{1, 0, 0, 0});
  CHECK(is_unit(m2, pair->u));
  CHECK(is_unit(m2, pair->v));

  Algebra dual2 = polynomial_quotient_algebra(f2, {0, 0, 1});
  TwoGoodReport r2 = every_element_two_unit_sum(dual2);
  CHECK(!r2.two_good);
  CHECK(r2.witness == Row{1, 0});

  auto inv = inverse_elem(m2, {1, 1, 1, 0});
  REQUIRE(inv.has_value());
  CHECK(m2.mul({1, 1, 1, 0}, *inv) == m2.one());
  CHECK(!inverse_elem(m2, {1, 0, 0, 0}).has_value());
}

TEST_CASE("boolean/two-good factorization outcomes") {
  const Field& f2 = Field::get(2);
  const Field& f3 = Field::get(3);

  BooleanTwoGoodSplit s = boolean_two_good_split(field_algebra(f2));
  CHECK(s.exists);
  CHECK(s.boolean_part.dim() == 1);
  CHECK(s.two_good_part.dim() == 0);

  s = boolean_two_good_split(field_algebra(f3));
  CHECK(s.exists);
  CHECK(s.boolean_part.dim() == 0);
  CHECK(s.two_good_part.dim() == 1);

  s = boolean_two_good_split(product_algebra(field_algebra(f2), field_algebra(f2)));
  CHECK(s.exists);
  CHECK(s.boolean_part.dim() == 2);

  s = boolean_two_good_split(product_algebra(field_algebra(f2), matrix_algebra(f2, 2)));
  CHECK(s.exists);
  CHECK(s.e1 == Row{1, 0, 0, 0, 0});
  CHECK(s.boolean_part.dim() == 1);
  CHECK(s.two_good_part.dim() == 4);

  s = boolean_two_good_split(matrix_algebra(f2, 2));
  CHECK(s.exists);
  CHECK(s.boolean_part.dim() == 0);

  s = boolean_two_good_split(polynomial_quotient_algebra(f2, {0, 0, 1}));
  CHECK(!s.exists);
  CHECK(s.witness == Row{0, 1});

  s = boolean_two_good_split(upper_triangular_algebra(f2, 2));
  CHECK(!s.exists);
  CHECK(s.witness == Row{0, 1, 0});

  s = boolean_two_good_split(mixed_corner_algebra());
  CHECK(!s.exists);
  CHECK(s.reason == "the residue-block idempotent has no central lift");
}

TEST_CASE("counting maps onto the two-element field") {
  const Field& f2 = Field::get(2);
  std::vector<std::pair<Algebra, uint32_t>> cases;
  cases.emplace_back(two_arrow_path_algebra(), 3);
  cases.emplace_back(matrix_algebra(f2, 2), 0);
  cases.emplace_back(product_algebra(field_algebra(f2), field_algebra(f2)), 2);
  cases.emplace_back(upper_triangular_algebra(f2, 2), 2);
  cases.emplace_back(extension_field_algebra(f2, 2), 0);
  cases.emplace_back(polynomial_quotient_algebra(f2, {0, 0, 1}), 1);
  cases.emplace_back(mixed_corner_algebra(), 1);

  for (size_t i = 0; i < cases.size(); ++i) {
    CAPTURE(i);
    CHECK(count_f2_quotients(cases[i].first) == cases[i].second);
    CHECK(count_f2_quotients_functional(cases[i].first) == cases[i].second);
  }
}

TEST_CASE("unit-stable subrings split along the ambient factorization") {
  const Field& f2 = Field::get(2);

  Algebra s = product_algebra(product_algebra(field_algebra(f2), field_algebra(f2)),
                              matrix_algebra(f2, 2));
  // diagonal booleans glued to the full matrix factor
  Subspace diag = span_of(f2,
                          {{1, 1, 0, 0, 0, 0},
                           {0, 0, 1, 0, 0, 0},
                           {0, 0, 0, 1, 0, 0},
                           {0, 0, 0, 0, 1, 0},
                           {0, 0, 0, 0, 0, 1}},
                          6);
  UnitStableReport rep = unit_stable_subring_split(s, diag);
  CHECK(rep.valid);
  CHECK(rep.split_matches);
  CHECK(rep.t1.dim() == 1);
  CHECK(rep.t2.dim() == 4);

  rep = unit_stable_subring_split(s, Subspace::full(f2, 6));
  CHECK(rep.valid);
  CHECK(rep.split_matches);
  CHECK(rep.t1.dim() == 2);

  // the unit orbit of the identity leaves the scalar line
  rep = unit_stable_subring_split(s, span_of(f2, {{1, 1, 1, 0, 0, 1}}, 6));
  CHECK(!rep.valid);
  CHECK(rep.reason == "left multiplication by a unit leaves the subspace");

  Algebra m2 = matrix_algebra(f2, 2);
  rep = unit_stable_subring_split(m2, span_of(f2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}, 4));
  CHECK(!rep.valid);

  Algebra cube = product_algebra(product_algebra(field_algebra(f2), field_algebra(f2)),
                                 field_algebra(f2));
  rep = unit_stable_subring_split(cube, span_of(f2, {{1, 1, 1}}, 3));
  CHECK(rep.valid);
  CHECK(rep.split_matches);
  CHECK(rep.t1.dim() == 1);

  rep = unit_stable_subring_split(cube, span_of(f2, {{1, 1, 1}, {1, 0, 0}}, 3));
  CHECK(rep.valid);
  CHECK(rep.split_matches);
  CHECK(rep.t1.dim() == 2);

  Algebra trip = polynomial_quotient_algebra(f2, {0, 0, 0, 1});
  rep = unit_stable_subring_split(trip, span_of(f2, {{1, 0, 0}, {0, 1, 0}}, 3));
  CHECK(!rep.valid);
  CHECK(rep.reason == "the subspace is not closed under multiplication");
  CHECK(rep.witness_product == Row{0, 0, 1});
}

TEST_CASE("opposite algebra round trip") {
  const Field& f2 = Field::get(2);
  Algebra t2 = upper_triangular_algebra(f2, 2);
  Algebra op = opposite(t2);
  CHECK(radical(op).dim() == radical(t2).dim());
  Algebra back = opposite(op);
  CHECK(back.table() == t2.table());
  CHECK(back.one() == t2.one());

  Algebra m2 = matrix_algebra(f2, 2);
  Algebra m2op = opposite(m2);
  Row a{1, 1, 0, 0}, b{0, 1, 1, 0};
  CHECK(m2op.mul(a, b) == m2.mul(b, a));
}

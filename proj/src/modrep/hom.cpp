#include "modrep/hom.hpp"

#include <random>

#include "support/util.hpp"

namespace modrep {

Mat HomSpace::matrix(uint32_t t) const {
  Mat f(space.field(), m, n);
  for (uint32_t r = 0; r < m; ++r)
    for (uint32_t c = 0; c < n; ++c) f.at(r, c) = space.basis()(t, r * n + c);
  return f;
}

Mat HomSpace::combine(const Row& coeffs) const {
  Row vec = ffla::apply_row(coeffs, space.basis());
  Mat f(space.field(), m, n);
  for (uint32_t r = 0; r < m; ++r)
    for (uint32_t c = 0; c < n; ++c) f.at(r, c) = vec[r * n + c];
  return f;
}

Row HomSpace::coords_of(const Mat& f) const {
  Row vec(static_cast<size_t>(m) * n);
  for (uint32_t r = 0; r < m; ++r)
    for (uint32_t c = 0; c < n; ++c) vec[r * n + c] = f(r, c);
  return space.coordinates(vec);
}

HomSpace hom_space(const Module& a, const Module& b) {
  if (&a.alg() != &b.alg()) wb::fail_validation("homomorphisms need modules over one algebra");
  const Field& f = a.field();
  uint32_t m = a.dim(), n = b.dim();
  uint32_t mn = m * n;

  // vec(F) * C_i = 0 encodes rho_a(b_i) F = F rho_b(b_i)
  Mat cond(f, mn, 0);
  for (uint32_t i = 0; i < a.alg().dim(); ++i) {
    const Mat& ra = a.action(i);
    const Mat& rb = b.action(i);
    Mat ci(f, mn, mn);
    for (uint32_t s = 0; s < m; ++s)
      for (uint32_t t = 0; t < n; ++t) {
        uint32_t from = s * n + t;
        for (uint32_t r = 0; r < m; ++r)
          ci.at(from, r * n + t) = f.add(ci.at(from, r * n + t), ra(r, s));
        for (uint32_t c = 0; c < n; ++c)
          ci.at(from, s * n + c) = f.sub(ci.at(from, s * n + c), rb(t, c));
      }
    cond = ffla::hstack(cond, ci);
  }
  HomSpace h;
  h.m = m;
  h.n = n;
  h.space = Subspace::from_rows(ffla::left_nullspace(cond));
  return h;
}

EndAlgebra end_algebra(const Module& m) {
  if (m.dim() == 0) wb::fail_validation("endomorphisms of the zero module are not represented");
  HomSpace h = hom_space(m, m);
  uint32_t e = h.dim();
  wb::check_internal(e > 0, "a nonzero module has at least the identity endomorphism");

  std::vector<Mat> mats;
  for (uint32_t t = 0; t < e; ++t) mats.push_back(h.matrix(t));
  std::vector<uint16_t> table(static_cast<size_t>(e) * e * e);
  for (uint32_t i = 0; i < e; ++i)
    for (uint32_t j = 0; j < e; ++j) {
      Row coords = h.coords_of(mats[i] * mats[j]);
      for (uint32_t k = 0; k < e; ++k)
        table[(static_cast<size_t>(i) * e + j) * e + k] = coords[k];
    }
  Row one = h.coords_of(Mat::identity(m.field(), m.dim()));
  algebra::Algebra alg(m.field(), e, std::move(table), std::move(one), algebra::Validate::basic);
  return EndAlgebra{std::move(alg), std::move(h)};
}

IsoResult is_isomorphic(const Module& a, const Module& b, uint64_t cap) {
  if (&a.alg() != &b.alg()) wb::fail_validation("isomorphism needs modules over one algebra");
  const Field& f = a.field();
  if (a.dim() != b.dim()) return {Iso::no, {}};
  uint32_t m = a.dim();
  if (m == 0) return {Iso::yes, Mat(f, 0, 0)};

  HomSpace h = hom_space(a, b);
  if (h.dim() == 0) return {Iso::no, {}};

  auto attempt = [&](const Row& coeffs) -> bool {
    Mat cand = h.combine(coeffs);
    return ffla::rank(cand) == m;
  };

  if (wb::checked_pow(f.q(), h.dim(), cap)) {
    Row coeffs(h.dim(), 0);
    while (wb::next_tuple(coeffs, static_cast<uint16_t>(f.q()))) {
      if (attempt(coeffs)) return {Iso::yes, h.combine(coeffs)};
    }
    return {Iso::no, {}};
  }

  std::mt19937_64 rng(0x6d6f647265ull);  // fixed seed: deterministic verdicts
  for (uint32_t trial = 0; trial < 200; ++trial) {
    Row coeffs(h.dim());
    for (auto& c : coeffs) c = static_cast<uint16_t>(rng() % f.q());
    if (attempt(coeffs)) return {Iso::yes, h.combine(coeffs)};
  }
  return {Iso::unknown, {}};
}

}  // namespace modrep

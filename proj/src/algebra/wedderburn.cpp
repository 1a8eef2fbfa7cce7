#include "algebra/wedderburn.hpp"

#include <algorithm>

#include "support/util.hpp"

namespace algebra {

using ffla::Subspace;

Subspace center(const Algebra& a) {
  const Field& f = a.field();
  uint32_t d = a.dim();
  Mat cond(f, d, 0);
  for (uint32_t i = 0; i < d; ++i) {
    Row b = a.basis_elem(i);
    cond = ffla::hstack(cond, a.right_mult(b) - a.left_mult(b));
  }
  return Subspace::from_rows(ffla::left_nullspace(cond));
}

Row Subalg::from_ambient(const Row& x) const {
  return Subspace::from_rows(basis).coordinates(x);
}

Subalg subalgebra_on(const Algebra& a, const Subspace& s, const Row& identity_elem) {
  const Field& f = a.field();
  uint32_t m = s.dim();
  if (m == 0) wb::fail_validation("subalgebra needs a nonzero carrier");
  if (!s.contains(identity_elem)) wb::fail_validation("designated identity outside the subspace");

  std::vector<uint16_t> table(static_cast<size_t>(m) * m * m);
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < m; ++j) {
      Row prod = a.mul(s.basis().row(i), s.basis().row(j));
      if (!s.contains(prod)) wb::fail_validation("subspace is not closed under multiplication");
      Row coords = s.coordinates(prod);
      for (uint32_t k = 0; k < m; ++k)
        table[(static_cast<size_t>(i) * m + j) * m + k] = coords[k];
    }
  Algebra alg(f, m, std::move(table), s.coordinates(identity_elem), Validate::basic);
  return Subalg{std::move(alg), s.basis()};
}

namespace {

// roots of a polynomial that splits into distinct linear factors
std::vector<uint16_t> split_roots(const ffla::Poly& p) {
  std::vector<uint16_t> roots;
  const Field& f = p.field();
  for (uint32_t x = 0; x < f.q(); ++x)
    if (p.eval(static_cast<uint16_t>(x)) == 0) roots.push_back(static_cast<uint16_t>(x));
  return roots;
}

}  // namespace

std::vector<Row> primitive_central_idempotents(const Algebra& a) {
  const Field& f = a.field();
  Subspace z = center(a);
  Subalg zs = subalgebra_on(a, z, a.one());
  const Algebra& za = zs.alg;
  uint32_t zm = za.dim();
  if (radical(za).dim() != 0)
    wb::fail_validation("center carries radical; primitive idempotents need a semisimple input");

  // central elements fixed by x -> x^q form the F_q-span of the primitive
  // central idempotents
  Mat phi(f, zm, zm);
  for (uint32_t s = 0; s < zm; ++s) {
    Row zq = za.pow(za.basis_elem(s), f.q());
    phi.set_row(s, za.sub(zq, za.basis_elem(s)));
  }
  Mat fixed = ffla::left_nullspace(phi);
  uint32_t expected = fixed.rows();

  std::vector<Row> fam{za.one()};
  for (uint32_t wrow = 0; wrow < fixed.rows(); ++wrow) {
    Row w = fixed.row(wrow);
    ffla::Poly mp = element_minpoly(za, w);
    if (mp.deg() <= 1) continue;
    auto roots = split_roots(mp);
    wb::check_internal(static_cast<int32_t>(roots.size()) == mp.deg(),
                       "Frobenius-fixed element whose minimal polynomial does not split");
    std::vector<Row> next;
    for (const Row& e : fam) {
      for (uint16_t root : roots) {
        // Lagrange idempotent selecting the root eigencomponent
        Row u = za.one();
        for (uint16_t other : roots) {
          if (other == root) continue;
          Row lin = za.sub(w, za.scale(other, za.one()));
          u = za.mul(u, za.scale(f.inv(f.sub(root, other)), lin));
        }
        Row piece = za.mul(e, u);
        if (piece != za.zero()) next.push_back(piece);
      }
    }
    fam = std::move(next);
  }

  wb::check_internal(fam.size() == expected,
                     "central idempotent count must match the Frobenius-fixed dimension");
  Row total = za.zero();
  for (const Row& e : fam) {
    wb::check_internal(za.is_idempotent(e), "central family member is not idempotent");
    total = za.add(total, e);
  }
  wb::check_internal(total == za.one(), "central family does not sum to the identity");
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t j = i + 1; j < fam.size(); ++j)
      wb::check_internal(za.mul(fam[i], fam[j]) == za.zero() && za.mul(fam[j], fam[i]) == za.zero(),
                         "central family is not orthogonal");

  std::vector<Row> out;
  for (const Row& e : fam) {
    Row amb = zs.to_ambient(e);
    wb::check_internal(a.is_central(amb) && a.is_idempotent(amb),
                       "lifted central idempotent lost its defining properties");
    out.push_back(amb);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

uint32_t exact_isqrt(uint32_t x) {
  uint32_t n = 0;
  while ((n + 1) * (n + 1) <= x) ++n;
  wb::check_internal(n * n == x, "block dimension is not a perfect square multiple");
  return n;
}

}  // namespace

Wedderburn wedderburn_blocks(const Algebra& a) {
  const Field& f = a.field();
  if (!is_semisimple(a)) wb::fail_validation("block decomposition needs a semisimple algebra");
  Subspace z = center(a);
  std::vector<Row> idems = primitive_central_idempotents(a);

  Wedderburn w;
  w.center = z;
  for (const Row& e : idems) {
    std::vector<Row> span_rows, zspan_rows;
    for (uint32_t i = 0; i < a.dim(); ++i) span_rows.push_back(a.mul(e, a.basis_elem(i)));
    for (uint32_t t = 0; t < z.dim(); ++t) zspan_rows.push_back(a.mul(e, z.basis().row(t)));
    Subspace space = Subspace::from_rows(f, span_rows, a.dim());
    Subspace zspace = Subspace::from_rows(f, zspan_rows, a.dim());
    uint32_t c = zspace.dim();
    wb::check_internal(c > 0 && space.dim() % c == 0, "block center dimension must divide the block");
    uint32_t n = exact_isqrt(space.dim() / c);

    Subalg zes = subalgebra_on(a, zspace, e);
    Row cert;
    bool found = false;
    for (uint32_t t = 0; t < c && !found; ++t) {
      ffla::Poly mp = element_minpoly(zes.alg, zes.alg.basis_elem(t));
      if (mp.deg() == static_cast<int32_t>(c) && ffla::poly_irreducible(mp)) {
        cert = zes.to_ambient(zes.alg.basis_elem(t));
        found = true;
      }
    }
    wb::check_internal(found, "no basis element generates the block center field");

    auto cq = wb::checked_pow(f.q(), c, 1ull << 62);
    if (!cq) wb::fail_cap("block center field too large to describe");
    w.blocks.push_back(Block{n, *cq, e, std::move(space), std::move(cert)});
  }
  return w;
}

namespace {

// orthogonal primitive idempotent family of a semisimple algebra, in its own
// coordinates; recursion peels central pieces, then splits simple blocks with
// an element whose minimal polynomial has two coprime parts
std::vector<Row> split_semisimple(const Algebra& s, uint64_t cap) {
  const Field& f = s.field();
  uint32_t d = s.dim();
  std::vector<Row> centrals = primitive_central_idempotents(s);

  auto corner = [&](const Row& e) {
    std::vector<Row> rows;
    for (uint32_t i = 0; i < d; ++i) rows.push_back(s.mul(s.mul(e, s.basis_elem(i)), e));
    return Subspace::from_rows(f, rows, d);
  };

  if (centrals.size() > 1) {
    std::vector<Row> out;
    for (const Row& e : centrals) {
      Subalg sub = subalgebra_on(s, corner(e), e);
      for (const Row& p : split_semisimple(sub.alg, cap)) out.push_back(sub.to_ambient(p));
    }
    return out;
  }

  uint32_t c = center(s).dim();
  if (d == c) return {s.one()};  // commutative simple piece: a field, size-1 block

  auto try_split = [&](const Row& x) -> std::optional<Row> {
    ffla::Poly mp = element_minpoly(s, x);
    auto factors = ffla::poly_factor(mp);
    if (factors.size() < 2) return std::nullopt;
    ffla::Poly part = factors[0].first;
    for (uint32_t i = 1; i < factors[0].second; ++i) part = part * factors[0].first;
    ffla::Poly rest = ffla::Poly::constant(f, 1);
    for (size_t i = 1; i < factors.size(); ++i)
      for (uint32_t m = 0; m < factors[i].second; ++m) rest = rest * factors[i].first;
    ffla::Egcd eg = ffla::poly_egcd(rest, part);
    wb::check_internal(eg.g.deg() == 0, "coprime minimal-polynomial parts with a common factor");
    uint16_t gi = f.inv(eg.g.coeff(0));
    Row idem = eval_poly(s, (eg.u * rest).scaled(gi), x);
    if (idem == s.zero() || idem == s.one()) return std::nullopt;
    wb::check_internal(s.is_idempotent(idem), "splitting construction must yield an idempotent");
    return idem;
  };

  std::optional<Row> f_idem;
  for (uint32_t i = 0; i < d && !f_idem; ++i) f_idem = try_split(s.basis_elem(i));
  for (uint32_t i = 0; i < d && !f_idem; ++i)
    for (uint32_t j = i + 1; j < d && !f_idem; ++j)
      f_idem = try_split(s.add(s.basis_elem(i), s.basis_elem(j)));
  for (uint32_t i = 0; i < d && !f_idem; ++i)
    for (uint32_t j = 0; j < d && !f_idem; ++j)
      f_idem = try_split(s.mul(s.basis_elem(i), s.basis_elem(j)));
  if (!f_idem) {
    auto total = wb::checked_pow(f.q(), d, cap);
    if (!total) wb::fail_cap("no splitting element among candidates and the block is too large to sweep");
    Row x(d, 0);
    do {
      f_idem = try_split(x);
    } while (!f_idem && wb::next_tuple(x, static_cast<uint16_t>(f.q())));
    wb::check_internal(f_idem.has_value(), "simple non-division block without a splitting element");
  }

  Row e1 = *f_idem;
  Row e2 = s.sub(s.one(), e1);
  std::vector<Row> out;
  for (const Row& e : {e1, e2}) {
    Subalg sub = subalgebra_on(s, corner(e), e);
    for (const Row& p : split_semisimple(sub.alg, cap)) out.push_back(sub.to_ambient(p));
  }
  return out;
}

}  // namespace

std::vector<Row> primitive_orthogonal_idempotents(const Algebra& a) {
  Wedderburn w = wedderburn_blocks(a);
  uint32_t target = 0;
  for (const Block& b : w.blocks) target += b.n;

  std::vector<Row> fam;
  for (const Block& b : w.blocks) {
    Subalg sub = subalgebra_on(a, b.space, b.idem);
    for (const Row& p : split_semisimple(sub.alg, 1ull << 16)) fam.push_back(sub.to_ambient(p));
  }

  wb::check_internal(fam.size() == target,
                     "primitive family size must equal the sum of block sizes");
  Row total = a.zero();
  for (const Row& e : fam) {
    wb::check_internal(a.is_idempotent(e), "family member is not idempotent");
    total = a.add(total, e);
  }
  wb::check_internal(total == a.one(), "primitive family does not sum to the identity");
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t j = i + 1; j < fam.size(); ++j)
      wb::check_internal(a.mul(fam[i], fam[j]) == a.zero() && a.mul(fam[j], fam[i]) == a.zero(),
                         "primitive family is not orthogonal");
  std::sort(fam.begin(), fam.end());
  return fam;
}

}  // namespace algebra

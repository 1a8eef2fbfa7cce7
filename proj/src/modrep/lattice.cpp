#include "modrep/lattice.hpp"

#include <algorithm>
#include <map>

#include "support/util.hpp"

namespace modrep {

Subspace spin(const Module& m, const Mat& gens) {
  Subspace u = Subspace::from_rows(gens);
  for (;;) {
    Mat next = u.basis();
    for (uint32_t i = 0; i < m.alg().dim(); ++i) next = ffla::vstack(next, u.basis() * m.action(i));
    Subspace grown = Subspace::from_rows(next);
    if (grown.dim() == u.dim()) return grown;
    u = grown;
  }
}

Subspace spin(const Module& m, const Row& v) {
  return spin(m, Mat::from_rows(m.field(), {v}, m.dim()));
}

std::vector<Subspace> all_submodules(const Module& m, uint64_t cap) {
  const Field& f = m.field();
  if (!wb::checked_pow(f.q(), m.dim(), cap))
    wb::fail_validation("the module is too large to enumerate submodules");

  std::map<std::vector<uint16_t>, Subspace> found;
  auto insert = [&](const Subspace& u) {
    found.emplace(u.encode(), u);
  };
  insert(Subspace::zero(f, m.dim()));
  Row v(m.dim(), 0);
  while (wb::next_tuple(v, static_cast<uint16_t>(f.q()))) insert(spin(m, v));

  // cyclic submodules are not closed under sum; saturate pairwise
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Subspace> snapshot;
    snapshot.reserve(found.size());
    for (const auto& [key, u] : found) snapshot.push_back(u);
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        Subspace s = snapshot[i].sum(snapshot[j]);
        if (found.emplace(s.encode(), s).second) grew = true;
      }
  }

  std::vector<Subspace> out;
  out.reserve(found.size());
  for (const auto& [key, u] : found) out.push_back(u);
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.encode() < b.encode();
  });
  return out;
}

bool is_simple(const Module& m, uint64_t cap) {
  if (m.dim() == 0) return false;
  const Field& f = m.field();
  if (!wb::checked_pow(f.q(), m.dim(), cap))
    wb::fail_validation("the module is too large to sweep for simplicity");
  Row v(m.dim(), 0);
  while (wb::next_tuple(v, static_cast<uint16_t>(f.q())))
    if (spin(m, v).dim() != m.dim()) return false;
  return true;
}

std::vector<Module> simples(const algebra::Algebra& a) {
  algebra::Quotient q = algebra::semisimple_quotient(a);
  algebra::Wedderburn w = algebra::wedderburn_blocks(q.alg);
  std::vector<Row> prims = algebra::primitive_orthogonal_idempotents(q.alg);

  Module reg = regular_module(q.alg);
  std::vector<Module> out;
  for (const auto& block : w.blocks) {
    const Row* pick = nullptr;
    for (const Row& e : prims)
      if (block.space.contains(e)) {
        pick = &e;  // prims are sorted, so the first hit is the least
        break;
      }
    wb::check_internal(pick != nullptr, "every block contains a primitive idempotent");
    Subspace row_space = spin(reg, *pick);
    Module s = submodule_module(reg, row_space);
    out.push_back(pull_back(s, a, q.proj));
  }

  for (const Module& s : out)
    if (wb::checked_pow(s.field().q(), s.dim(), 1ull << 16))
      wb::check_internal(is_simple(s), "block modules are simple");
  return out;
}

}  // namespace modrep

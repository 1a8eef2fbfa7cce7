#include "modrep/decompose.hpp"

#include <algorithm>

#include "algebra/units.hpp"
#include "support/util.hpp"

namespace modrep {

bool has_local_endomorphism_ring(const Module& m) {
  if (m.dim() == 0) return false;
  EndAlgebra e = end_algebra(m);
  algebra::Quotient q = algebra::semisimple_quotient(e.alg);
  algebra::Wedderburn w = algebra::wedderburn_blocks(q.alg);
  return w.blocks.size() == 1 && w.blocks[0].n == 1;
}

Decomposition decompose(const Module& m) {
  Decomposition d;
  if (m.dim() == 0) return d;

  EndAlgebra e = end_algebra(m);
  algebra::Quotient q = algebra::semisimple_quotient(e.alg);
  std::vector<Row> prims_q = algebra::primitive_orthogonal_idempotents(q.alg);
  std::vector<Row> prims = algebra::lift_orthogonal_idempotents(e.alg, q, prims_q);

  uint32_t total = 0;
  Subspace covered = Subspace::zero(m.field(), m.dim());
  for (const Row& coords : prims) {
    Mat f = e.to_matrix(coords);
    Subspace image = Subspace::from_rows(f);
    total += image.dim();
    covered = covered.sum(image);
    d.parts.push_back({submodule_module(m, image), image, f});
  }
  wb::check_internal(total == m.dim() && covered.dim() == m.dim(),
                     "idempotent images decompose the module");

  for (const Summand& s : d.parts)
    wb::check_internal(has_local_endomorphism_ring(s.mod),
                       "primitive idempotents give indecomposable summands");

  std::sort(d.parts.begin(), d.parts.end(), [](const Summand& a, const Summand& b) {
    if (a.mod.dim() != b.mod.dim()) return a.mod.dim() < b.mod.dim();
    return a.image.encode() < b.image.encode();
  });
  return d;
}

std::vector<uint32_t> socle_multiplicities(const Module& m, const std::vector<Module>& simple_list) {
  Subspace soc = socle(m);
  std::vector<uint32_t> mult;
  if (soc.dim() == 0) {
    mult.assign(simple_list.size(), 0);
    return mult;
  }
  Module soc_mod = submodule_module(m, soc);
  uint32_t accounted = 0;
  for (const Module& s : simple_list) {
    uint32_t h = hom_space(s, soc_mod).dim();
    uint32_t e = hom_space(s, s).dim();
    wb::check_internal(e > 0 && h % e == 0, "hom from a simple is a free module over its schur field");
    mult.push_back(h / e);
    accounted += (h / e) * s.dim();
  }
  wb::check_internal(accounted == soc.dim(), "socle multiplicities cover the whole socle");
  return mult;
}

uint32_t goldie_dimension(const Module& m) {
  if (m.dim() == 0) return 0;
  std::vector<Module> ss = simples(m.alg());
  std::vector<uint32_t> mult = socle_multiplicities(m, ss);
  uint32_t g = 0;
  for (uint32_t c : mult) g += c;
  return g;
}

}  // namespace modrep

#pragma once

#include "algebra/wedderburn.hpp"
#include "modrep/module.hpp"

namespace modrep {

// Module homomorphisms as a canonical subspace of vectorized m x n matrices
// (row-major). Composition is matrix product in the row-operator convention.
struct HomSpace {
  uint32_t m = 0, n = 0;
  Subspace space;  // of F^(m*n)

  uint32_t dim() const { return space.dim(); }
  Mat matrix(uint32_t t) const;
  Mat combine(const Row& coeffs) const;
  Row coords_of(const Mat& f) const;
};

HomSpace hom_space(const Module& a, const Module& b);

struct EndAlgebra {
  algebra::Algebra alg;  // structure constants on the hom basis
  HomSpace hom;

  Mat to_matrix(const Row& coords) const { return hom.combine(coords); }
  Row from_matrix(const Mat& f) const { return hom.coords_of(f); }
};

// requires a nonzero module
EndAlgebra end_algebra(const Module& m);

enum class Iso { yes, no, unknown };
struct IsoResult {
  Iso verdict = Iso::no;
  Mat witness;  // invertible intertwiner when verdict is yes
};

// exhaustive over the hom space when it fits under cap (so yes/no are both
// definitive), deterministic sampling with an unknown verdict otherwise
IsoResult is_isomorphic(const Module& a, const Module& b, uint64_t cap = 1ull << 20);

}  // namespace modrep

#pragma once

#include "modrep/lattice.hpp"

namespace modrep {

// End(M)/J(End(M)) is a division algebra: one block of matrix size 1.
// Equivalent to M being indecomposable (fitting decomposition).
bool has_local_endomorphism_ring(const Module& m);

struct Summand {
  Module mod;
  Subspace image;  // inside the ambient module
  Mat idem;        // the projecting idempotent endomorphism
};

struct Decomposition {
  std::vector<Summand> parts;  // sorted by (dim, image key)
};

// direct-sum decomposition into indecomposables via lifted primitive
// idempotents of End(M)/J(End(M)); each part is certified indecomposable
Decomposition decompose(const Module& m);

// multiplicity of each listed simple inside soc(M), by Schur counting
std::vector<uint32_t> socle_multiplicities(const Module& m, const std::vector<Module>& simple_list);

// number of simple summands of the socle = uniform dimension here
uint32_t goldie_dimension(const Module& m);

}  // namespace modrep

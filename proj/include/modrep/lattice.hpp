#pragma once

#include "modrep/hom.hpp"

namespace modrep {

// smallest submodule containing the row space of gens
Subspace spin(const Module& m, const Mat& gens);
Subspace spin(const Module& m, const Row& v);

// every submodule, sorted by (dim, encode). Enumerates cyclic submodules from
// all q^dim vectors and closes under pairwise sums, so it throws when q^dim
// exceeds cap.
std::vector<Subspace> all_submodules(const Module& m, uint64_t cap = 1ull << 16);

// nonzero and generated by each of its nonzero vectors (swept under cap)
bool is_simple(const Module& m, uint64_t cap = 1ull << 16);

// one simple right module per semisimple block of a / rad(a), in block order
std::vector<Module> simples(const algebra::Algebra& a);

}  // namespace modrep

#pragma once

#include "modrep/decompose.hpp"

namespace envelopes {

using algebra::Algebra;
using ffla::Mat;
using ffla::Row;
using ffla::Subspace;
using modrep::Module;

// duals of the opposite algebra's projective indecomposables, one per block,
// indexed so that soc(result[i]) matches simples(a)[i]
std::vector<Module> indecomposable_injectives(const Algebra& a);

// summands of the regular module, one per block, indexed by their top
std::vector<Module> indecomposable_projectives(const Algebra& a);

struct Envelope {
  Module env;
  Mat embed;  // source rows into env; full row rank and the image carries soc(env)
};

// smallest injective the module embeds essentially into
Envelope injective_envelope(const Module& m);

// every hom out of each listed right ideal extends to the whole algebra
bool baer_injective(const Module& m, const std::vector<Subspace>& right_ideals);
// the same test against every right ideal (enumerated under cap)
bool is_injective_module(const Module& m, uint64_t cap = 1ull << 16);

struct Cover {
  Module cover;
  Mat onto;         // rank equals the target dimension
  Subspace kernel;  // inside cover * J, so the cover is minimal
};

// smallest projective mapping onto the module
Cover projective_cover(const Module& m);

}  // namespace envelopes

#pragma once

#include "envelopes/envelopes.hpp"

namespace invariance {

using algebra::Algebra;
using ffla::Mat;
using ffla::Row;
using ffla::Subspace;
using modrep::Module;

// a module sitting inside its injective hull
struct Embedded {
  Module mod;
  envelopes::Envelope hull;
};
Embedded embed_in_hull(const Module& m);

// a module under its projective cover
struct Covered {
  Module mod;
  envelopes::Cover cover;
};
Covered cover_of(const Module& m);

// Maps of the outer object leaving a marked subspace inside itself, as a
// coordinate subspace of End(outer). Unital and closed under composition.
struct StabilizerRing {
  modrep::EndAlgebra end;
  Subspace ring;
};
// marked = the embedded image
StabilizerRing stabilizer(const Embedded& e);
// marked = the cover kernel
StabilizerRing kernel_stabilizer(const Covered& c);

// decision plus a re-verified witness on the negative side
struct Certificate {
  bool holds = true;
  Mat witness;     // map of the outer object violating stability
  Row moved_from;  // marked vector it moves
  Row moved_to;    // image outside the marked subspace
};

// the marked image is stable under every endomorphism of the hull
Certificate is_quasi_injective(const Embedded& e);
// ... under every automorphism: radical containment plus a transversal of
// unit lifts from End(hull)/J, instead of sweeping all of End(hull)
Certificate is_automorphism_invariant(const Embedded& e, uint64_t cap = 1ull << 20);
// kernel-stability mirrors through the cover
Certificate is_quasi_projective(const Covered& c);
Certificate is_automorphism_coinvariant(const Covered& c, uint64_t cap = 1ull << 20);

// sweep oracles over all endomorphisms / all units of the hull or cover;
// verdicts must match the production checkers
Certificate quasi_injective_oracle(const Embedded& e, uint64_t cap = 1ull << 16);
Certificate automorphism_invariant_oracle(const Embedded& e, uint64_t cap = 1ull << 16);
Certificate quasi_projective_oracle(const Covered& c, uint64_t cap = 1ull << 16);
Certificate automorphism_coinvariant_oracle(const Covered& c, uint64_t cap = 1ull << 16);

// every injective intertwiner from a submodule into the module extends to an
// endomorphism of the module; exhaustive, tiny modules only
bool is_pseudo_injective(const Module& m, uint64_t cap = 1ull << 10);

// split off the part of the module whose endomorphism quotient is a product
// of two-element fields; the complement is stable under all hull maps
struct StructDecomposition {
  Module semiboolean;       // N
  Module endo_invariant;    // L
  Subspace n_image, l_image;  // inside the module
  Row idem;                 // End(M) coordinates of the projector onto N
  bool n_certified = false;  // End(N)/J is elementwise idempotent
  bool l_certified = false;  // L passes the hull-stability check
};
StructDecomposition struct_decompose(const Embedded& e);

// structure forced on an indecomposable module that is hull-stable under
// automorphisms but not under all endomorphisms
struct IndecomposableReport {
  bool end_mod_is_f2 = false;
  uint32_t hull_summands = 0;  // >= 2
  bool summands_pairwise_noniso = false;
  bool summand_ends_are_f2 = false;
  uint32_t hull_f2_quotients = 0;  // >= 2
};
IndecomposableReport indecomposable_report(const Embedded& e);

struct DualIndecomposableReport {
  bool end_mod_is_f2 = false;
  uint32_t cover_summands = 0;  // >= 2
  bool summands_pairwise_noniso = false;
  bool summand_ends_are_f2 = false;
};
DualIndecomposableReport dual_indecomposable_report(const Covered& c);

// socle structure in the all-semiboolean case
struct SocleReport {
  uint32_t summands = 0;  // >= 2
  bool pairwise_noniso = false;
  bool ends_are_f2 = false;
  bool essential = false;
  bool sizes_match_blocks = false;  // each summand dim equals its block size
};
SocleReport socle_report(const Embedded& e, uint64_t cap = 1ull << 16);

// both sides of the invariance story for one module
struct InvarianceReport {
  Certificate quasi, invariant;            // hull side
  Certificate dual_quasi, dual_invariant;  // cover side
  std::vector<std::pair<uint32_t, uint64_t>> end_blocks;  // (n, center size) of End(M)/J
  uint32_t f2_quotients = 0;               // of End(M)
};
InvarianceReport full_report(const Module& m);

// implication checks across a family of modules; a non-empty violation list
// is a defect, never an expected outcome
struct TheoremCheck {
  size_t index = 0;
  bool quasi = false, invariant = false;
  bool dual_quasi = false, dual_invariant = false;
  bool pseudo = false, pseudo_ran = false;
  uint32_t f2_quotients = 0;
};
struct TheoremSuite {
  std::vector<TheoremCheck> checks;
  std::vector<std::string> violations;
};
TheoremSuite theorem_suite(const Algebra& a, const std::vector<Module>& modules);

}  // namespace invariance

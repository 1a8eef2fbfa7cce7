#pragma once

#include "algebra/algebra.hpp"
#include "algebra/radical.hpp"
#include "ffla/subspace.hpp"

namespace algebra {

Subspace center(const Algebra& a);

// a subspace of an algebra carrying its own multiplication (closed under
// products, with the designated identity); elements convert through the
// stored basis
struct Subalg {
  Algebra alg;
  Mat basis;  // sub-dim x ambient-dim
  Row to_ambient(const Row& x) const { return ffla::apply_row(x, basis); }
  Row from_ambient(const Row& x) const;
};

Subalg subalgebra_on(const Algebra& a, const Subspace& s, const Row& identity_elem);

// Orthogonal central idempotent family refining 1, each primitive. Requires a
// semisimple algebra: splitting elements are drawn from the subalgebra of
// Frobenius-fixed central elements, which the primitive idempotents span, so
// refinement by its basis cannot stop early.
std::vector<Row> primitive_central_idempotents(const Algebra& a);

struct Block {
  uint32_t n;         // matrix size over the center field
  uint64_t center_q;  // size of the block's center field
  Row idem;           // primitive central idempotent, ambient coordinates
  Subspace space;     // the block ideal e*A
  Row center_cert;    // central element whose minimal polynomial has degree
                      // equal to the center dimension and is irreducible
};

struct Wedderburn {
  std::vector<Block> blocks;
  Subspace center;
};

// requires semisimple input (checked via the radical)
Wedderburn wedderburn_blocks(const Algebra& a);

// full orthogonal family of primitive (not necessarily central) idempotents
// of a semisimple algebra; the family size must equal the sum of block sizes
std::vector<Row> primitive_orthogonal_idempotents(const Algebra& a);

}  // namespace algebra

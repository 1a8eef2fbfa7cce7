#pragma once

#include <cstdint>
#include <vector>

#include "ffla/mat.hpp"

namespace ffla {

// Subspace of F^n held by its reduced-row-echelon basis. The basis is unique
// per subspace, so equality of subspaces is row-wise equality of bases and
// any set keyed on encode() is canonical.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(const Field& f, uint32_t ambient);
  static Subspace full(const Field& f, uint32_t ambient);
  static Subspace from_rows(const Mat& rows);
  static Subspace from_rows(const Field& f, const std::vector<Row>& rows, uint32_t ambient);

  const Field& field() const { return basis_.field(); }
  uint32_t ambient() const { return ambient_; }
  uint32_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<uint32_t>& pivots() const { return pivots_; }

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  // v minus its projection onto the pivot coordinates; zero iff v is a member.
  Row reduce(const Row& v) const;
  bool contains(const Row& v) const;
  bool contains(const Subspace& o) const;
  // coordinates of v in the basis; v must be a member
  Row coordinates(const Row& v) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  // ambient coordinates that are not pivot columns, ascending
  std::vector<uint32_t> complement_cols() const;

  // deterministic ordering/identity key
  std::vector<uint16_t> encode() const;

 private:
  uint32_t ambient_ = 0;
  Mat basis_;  // rref, no zero rows
  std::vector<uint32_t> pivots_;
};

}  // namespace ffla

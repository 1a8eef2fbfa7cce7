#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffla/field.hpp"

namespace ffla {

using Row = std::vector<uint16_t>;

// Dense matrix over an interned Field. Row major.
class Mat {
 public:
  Mat() : f_(nullptr), rows_(0), cols_(0) {}
  Mat(const Field& f, uint32_t rows, uint32_t cols)
      : f_(&f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  static Mat identity(const Field& f, uint32_t n);
  static Mat from_rows(const Field& f, const std::vector<Row>& rows, uint32_t cols);

  const Field& field() const { return *f_; }
  const Field* field_ptr() const { return f_; }
  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }

  uint16_t operator()(uint32_t i, uint32_t j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  uint16_t& at(uint32_t i, uint32_t j) { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Row row(uint32_t i) const;
  void set_row(uint32_t i, const Row& r);

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(uint16_t c) const;
  Mat transpose() const;

  bool is_zero() const;
  bool is_identity() const;

  const std::vector<uint16_t>& data() const { return a_; }
  std::vector<uint16_t>& data() { return a_; }

 private:
  const Field* f_;
  uint32_t rows_, cols_;
  std::vector<uint16_t> a_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

// row vector times matrix
Row apply_row(const Row& v, const Mat& m);
Row row_add(const Field& f, const Row& a, const Row& b);
Row row_scale(const Field& f, const Row& a, uint16_t c);
bool row_is_zero(const Row& r);

struct Rref {
  Mat m;
  std::vector<uint32_t> pivots;  // pivot column per nonzero row
  uint32_t rank() const { return static_cast<uint32_t>(pivots.size()); }
};

Rref rref(const Mat& m);
uint32_t rank(const Mat& m);

// Solves A X = B column-wise; free variables are set to zero, so the result
// is deterministic. nullopt when inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);
// Solves X A = B (row-vector convention).
std::optional<Mat> solve_left(const Mat& a, const Mat& b);

// Rows form the canonical (reduced echelon) basis of {x : A x^T = 0}.
Mat nullspace(const Mat& a);
// Rows y with y A = 0.
Mat left_nullspace(const Mat& a);

std::optional<Mat> inverse(const Mat& a);

std::string to_string(const Mat& m);

}  // namespace ffla

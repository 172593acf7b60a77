#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "uso/rational.hpp"

namespace uso {

struct SingularMatrixError : std::runtime_error {
  SingularMatrixError() : std::runtime_error("matrix is singular") {}
};

class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(int n) : e_(n) {}
  explicit RationalVector(std::vector<Rational> e) : e_(std::move(e)) {}

  int size() const { return static_cast<int>(e_.size()); }
  Rational& operator[](int i) { return e_[i]; }
  const Rational& operator[](int i) const { return e_[i]; }

  bool operator==(const RationalVector& o) const { return e_ == o.e_; }

 private:
  std::vector<Rational> e_;
};

// Dense exact-rational matrix. Row/column indices are 0-based in code;
// the 1-based index sets of the problem domain (bases, principal minors)
// are passed as bitmasks with bit i-1 standing for index i.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return e_[static_cast<size_t>(r) * cols_ + c];
  }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

  RationalVector column(int c) const;

  // Exact determinant by pivoted elimination. Throws on non-square input.
  Rational determinant() const;

  // Exact solution of A x = b; throws SingularMatrixError.
  RationalVector solve(const RationalVector& b) const;

  // Exact inverse; throws SingularMatrixError.
  RationalMatrix inverse() const;

  // Determinant of the submatrix indexed by S (1-based bitmask) on both
  // axes. S must be nonempty and within range.
  Rational principal_minor(std::uint32_t index_set) const;

  RationalVector multiply(const RationalVector& x) const;

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

}  // namespace uso

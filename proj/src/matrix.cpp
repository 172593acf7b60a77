#include "uso/matrix.hpp"

#include <bit>
#include <utility>

namespace uso {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::column(int c) const {
  RationalVector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

namespace {

// Forward elimination with row pivoting on a working copy; returns the
// determinant and leaves `a` upper triangular (augmented columns in `b`
// are transformed along). `a` is rows x rows, `b` is rows x k.
Rational eliminate(std::vector<Rational>& a, std::vector<Rational>& b, int n,
                   int k) {
  auto A = [&](int r, int c) -> Rational& { return a[static_cast<size_t>(r) * n + c]; };
  auto B = [&](int r, int c) -> Rational& { return b[static_cast<size_t>(r) * k + c]; };
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (sgn(A(r, col)) != 0) { piv = r; break; }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      for (int c = col; c < n; ++c) std::swap(A(piv, c), A(col, c));
      for (int c = 0; c < k; ++c) std::swap(B(piv, c), B(col, c));
      det = -det;
    }
    det *= A(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (sgn(A(r, col)) == 0) continue;
      Rational f = A(r, col) / A(col, col);
      A(r, col) = 0;
      for (int c = col + 1; c < n; ++c) A(r, c) -= f * A(col, c);
      for (int c = 0; c < k; ++c) B(r, c) -= f * B(col, c);
    }
  }
  return det;
}

void back_substitute(const std::vector<Rational>& a, std::vector<Rational>& b,
                     int n, int k) {
  auto A = [&](int r, int c) -> const Rational& {
    return a[static_cast<size_t>(r) * n + c];
  };
  auto B = [&](int r, int c) -> Rational& { return b[static_cast<size_t>(r) * k + c]; };
  for (int r = n - 1; r >= 0; --r) {
    for (int c = 0; c < k; ++c) {
      Rational s = B(r, c);
      for (int j = r + 1; j < n; ++j) s -= A(r, j) * B(j, c);
      B(r, c) = s / A(r, r);
    }
  }
}

}  // namespace

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  std::vector<Rational> a = e_;
  std::vector<Rational> b;
  return eliminate(a, b, rows_, 0);
}

RationalVector RationalMatrix::solve(const RationalVector& b) const {
  if (rows_ != cols_) throw std::invalid_argument("solve with non-square matrix");
  if (b.size() != rows_) throw std::invalid_argument("solve shape mismatch");
  std::vector<Rational> a = e_;
  std::vector<Rational> rhs(rows_);
  for (int i = 0; i < rows_; ++i) rhs[i] = b[i];
  if (sgn(eliminate(a, rhs, rows_, 1)) == 0) throw SingularMatrixError();
  back_substitute(a, rhs, rows_, 1);
  return RationalVector(std::move(rhs));
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  std::vector<Rational> a = e_;
  std::vector<Rational> rhs(static_cast<size_t>(rows_) * rows_);
  for (int i = 0; i < rows_; ++i) rhs[static_cast<size_t>(i) * rows_ + i] = 1;
  if (sgn(eliminate(a, rhs, rows_, rows_)) == 0) throw SingularMatrixError();
  back_substitute(a, rhs, rows_, rows_);
  RationalMatrix inv(rows_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < rows_; ++c) inv.at(r, c) = rhs[static_cast<size_t>(r) * rows_ + c];
  return inv;
}

Rational RationalMatrix::principal_minor(std::uint32_t index_set) const {
  if (rows_ != cols_) throw std::invalid_argument("principal minor of non-square matrix");
  if (index_set == 0) throw std::invalid_argument("empty principal-minor index set");
  if (rows_ < 32 && (index_set >> rows_) != 0)
    throw std::invalid_argument("principal-minor index out of range");
  std::vector<int> idx;
  for (int i = 0; i < rows_; ++i)
    if ((index_set >> i) & 1u) idx.push_back(i);
  int k = static_cast<int>(idx.size());
  RationalMatrix sub(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) sub.at(r, c) = at(idx[r], idx[c]);
  return sub.determinant();
}

RationalVector RationalMatrix::multiply(const RationalVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("multiply shape mismatch");
  RationalVector y(rows_);
  for (int r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (int c = 0; c < cols_; ++c) s += at(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

}  // namespace uso

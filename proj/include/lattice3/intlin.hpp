#pragma once

// Exact integer linear algebra over arbitrary-precision integers.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace lattice3 {

using Int = mpz_class;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Rows given as nested lists; all rows must have equal length.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntMatrix transposed() const;
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// U * A = H, with H in lower Hermite form (see hnf_left).
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
};

/// U * A * V = D, with D diagonal, nonnegative and d1 | d2 | ...
struct SnfResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  /// The min(rows, cols) diagonal entries of D.
  std::vector<Int> divisors() const;
};

/// Exact determinant (Bareiss fraction-free elimination).
/// Throws ShapeError for non-square input.
Int det(const IntMatrix& m);

/// Left Hermite normal form of an m x n matrix of rank n (m >= n).
///
/// Convention: U is m x m unimodular, H = U * A has its first m - n rows zero
/// and its last n rows lower triangular. The pivot of column j sits in row
/// m - n + j, is positive, and every entry below it in that column lies in
/// [0, pivot). H is unique; for square A so is U.
///
/// Throws ShapeError when m < n or A is rank deficient.
HnfResult hnf_left(const IntMatrix& a);

/// Inverse of a square unimodular matrix. Throws std::invalid_argument if
/// |det| != 1.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// Smith normal form; never fails on a well-formed matrix.
SnfResult snf(const IntMatrix& a);

/// gcd of absolute values; gcd_all({0, ..., 0}) == 0. Throws on empty input.
Int gcd_all(std::span<const Int> xs);

/// Returns g = gcd(a, b) >= 0 together with s, t such that s*a + t*b = g.
struct ExtendedGcd {
  Int g, s, t;
};
ExtendedGcd ext_gcd(const Int& a, const Int& b);

/// floor(a / b) and ceil(a / b) for b != 0.
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

}  // namespace lattice3

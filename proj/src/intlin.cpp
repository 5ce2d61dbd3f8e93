#include "lattice3/intlin.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace lattice3 {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("ragged matrix literal");
    for (long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw ShapeError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os << ']';
}

std::vector<Int> SnfResult::divisors() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    out.push_back(d(i, i));
  return out;
}

ExtendedGcd ext_gcd(const Int& a, const Int& b) {
  ExtendedGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int gcd_all(std::span<const Int> xs) {
  if (xs.empty()) throw std::invalid_argument("gcd_all of empty sequence");
  Int g = 0;
  for (const auto& x : xs) g = gcd(g, x);
  return g;
}

Int det(const IntMatrix& m) {
  if (!m.is_square()) throw ShapeError("det of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(),
                     prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Replaces rows (p, q) of both matrices by the unimodular combination that
// moves gcd(A[p][col], A[q][col]) into row p and zero into row q.
void combine_rows(IntMatrix& a, IntMatrix& u, std::size_t p, std::size_t q,
                  std::size_t col) {
  const Int x = a(p, col);
  const Int y = a(q, col);
  if (y == 0) return;
  if (x != 0 && mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t())) {
    // Plain elimination; ext_gcd may answer s = 0 here and swap the rows.
    const Int c = y / x;
    a.add_row_multiple(q, p, -c);
    u.add_row_multiple(q, p, -c);
    return;
  }
  const auto [g, s, t] = ext_gcd(x, y);
  const Int xg = x / g;
  const Int yg = y / g;
  for (IntMatrix* m : {&a, &u}) {
    for (std::size_t j = 0; j < m->cols(); ++j) {
      const Int rp = (*m)(p, j);
      const Int rq = (*m)(q, j);
      (*m)(p, j) = s * rp + t * rq;
      (*m)(q, j) = xg * rq - yg * rp;
    }
  }
}

void combine_cols(IntMatrix& a, IntMatrix& v, std::size_t p, std::size_t q,
                  std::size_t row) {
  const Int x = a(row, p);
  const Int y = a(row, q);
  if (y == 0) return;
  if (x != 0 && mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t())) {
    const Int c = y / x;
    a.add_col_multiple(q, p, -c);
    v.add_col_multiple(q, p, -c);
    return;
  }
  const auto [g, s, t] = ext_gcd(x, y);
  const Int xg = x / g;
  const Int yg = y / g;
  for (IntMatrix* m : {&a, &v}) {
    for (std::size_t i = 0; i < m->rows(); ++i) {
      const Int cp = (*m)(i, p);
      const Int cq = (*m)(i, q);
      (*m)(i, p) = s * cp + t * cq;
      (*m)(i, q) = xg * cq - yg * cp;
    }
  }
}

}  // namespace

HnfResult hnf_left(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m < n) throw ShapeError("hnf_left needs rows >= cols");
  HnfResult r{a, IntMatrix::identity(m)};
  IntMatrix& h = r.h;
  IntMatrix& u = r.u;
  for (std::size_t j = n; j-- > 0;) {
    const std::size_t piv = m - n + j;
    for (std::size_t i = 0; i < piv; ++i) combine_rows(h, u, piv, i, j);
    if (h(piv, j) == 0) throw ShapeError("hnf_left: rank-deficient matrix");
    if (h(piv, j) < 0) {
      h.negate_row(piv);
      u.negate_row(piv);
    }
  }
  for (std::size_t j = n; j-- > 0;) {
    const std::size_t piv = m - n + j;
    for (std::size_t i = piv + 1; i < m; ++i) {
      const Int c = floor_div(h(i, j), h(piv, j));
      if (c == 0) continue;
      h.add_row_multiple(i, piv, -c);
      u.add_row_multiple(i, piv, -c);
    }
  }
  return r;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (!a.is_square()) throw ShapeError("inverse of non-square matrix");
  if (abs(det(a)) != 1) throw std::invalid_argument("matrix is not unimodular");
  // The Hermite form of a unimodular matrix is the identity, so U = A^-1.
  return hnf_left(a).u;
}

SnfResult snf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SnfResult r{a, IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix& d = r.d;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    d.swap_rows(t, pi);
    r.u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    r.v.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) combine_rows(d, r.u, t, i, t);
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) != 0) clean = false;
        combine_cols(d, r.v, t, j, t);
      }
      for (std::size_t i = t + 1; i < m && clean; ++i)
        if (d(i, t) != 0) clean = false;
      if (!clean) continue;
      // Enforce divisibility against the rest of the block.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      d.add_row_multiple(t, bad, 1);
      r.u.add_row_multiple(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      r.u.negate_row(t);
    }
  }
  return r;
}

}  // namespace lattice3

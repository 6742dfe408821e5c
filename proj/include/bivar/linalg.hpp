#pragma once

// Dense exact linear algebra.
//
// Rational matrices are reduced by fraction-free Gauss-Jordan elimination on
// an integer matrix obtained by clearing denominators row by row: every
// intermediate entry is a minor of the input, so no gcd work happens inside
// the elimination loop. The generic Bareiss routines also run on polynomial
// entries (rank over the rational function field, symbolic determinants).

#include <bivar/poly.hpp>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace bivar {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: dimension mismatch");
    Matrix out(a.rows_, b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Scalar>;
using ZMatrix = Matrix<Integer>;

// Exact quotient of a ring element by one known to divide it.
inline Integer exact_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Poly exact_quotient(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw InternalError("Bareiss step produced an inexact polynomial quotient");
  return std::move(*q);
}

inline bool ring_is_zero(const Integer& a) { return sgn(a) == 0; }
inline bool ring_is_zero(const Poly& a) { return a.is_zero(); }

/// Forward fraction-free elimination over an integral domain. Returns the
/// pivot columns; `m` is left in echelon form, `swaps` counts row exchanges.
template <class T>
std::vector<std::size_t> bareiss_forward(Matrix<T>& m, int* swaps = nullptr) {
  std::vector<std::size_t> pivots;
  T prev(1);
  std::size_t r = 0;
  int nswaps = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && ring_is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.swap_rows(p, r);
      ++nswaps;
    }
    const T piv = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const T lead = m(i, c);
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m(i, j) = exact_quotient(piv * m(i, j) - lead * m(r, j), prev);
      m(i, c) = T(0);
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  if (swaps) *swaps = nswaps;
  return pivots;
}

/// Determinant of a square matrix over an integral domain.
template <class T>
T bareiss_determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) return T(1);
  int swaps = 0;
  auto pivots = bareiss_forward(m, &swaps);
  if (pivots.size() < m.rows()) return T(0);
  T det = m(m.rows() - 1, m.cols() - 1);
  return swaps % 2 ? T(-det) : det;
}

template <class T>
std::size_t bareiss_rank(Matrix<T> m) {
  return bareiss_forward(m).size();
}

/// Rows scaled by the lcm of their denominators; row space and rank kept.
inline ZMatrix clear_denominators(const QMatrix& a) {
  ZMatrix z(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c)
      z(r, c) = exact_quotient(a(r, c).get_num() * l, a(r, c).get_den());
  }
  return z;
}

struct Echelon {
  QMatrix rref;  ///< reduced row echelon form, zero rows at the bottom
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form via fraction-free Gauss-Jordan.
inline Echelon row_reduce(const QMatrix& a) {
  ZMatrix m = clear_denominators(a);
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Integer piv = m(r, c);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Integer lead = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j == c) continue;
        m(i, j) = exact_quotient(piv * m(i, j) - lead * m(r, j), prev);
      }
      m(i, c) = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  Echelon e{QMatrix(m.rows(), m.cols(), Scalar(0)), pivots};
  for (std::size_t i = 0; i < r; ++i) {
    const Integer& piv = m(i, pivots[i]);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Scalar v(m(i, j), piv);
      v.canonicalize();
      e.rref(i, j) = v;
    }
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) e.rref(i, pivots[k]) = (i == k) ? 1 : 0;
  return e;
}

inline std::size_t rank(const QMatrix& a) {
  ZMatrix z = clear_denominators(a);
  return bareiss_rank(std::move(z));
}

inline Scalar determinant(const QMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  Scalar det(bareiss_determinant(clear_denominators(a)));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    det /= Scalar(l);
  }
  return det;
}

/// Canonical basis of the right nullspace {v : A v = 0}: one vector per free
/// column, with a 1 in that column and 0 in the other free columns.
inline std::vector<std::vector<Scalar>> nullspace(const QMatrix& a) {
  Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(a.cols(), Scalar(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some X with A X = B, or std::nullopt if the system is inconsistent.
/// Free variables are set to zero, so the solution is unique whenever A has
/// full column rank.
inline std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw DomainError("solve: dimension mismatch");
  QMatrix aug(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = b(r, c);
  }
  Echelon e = row_reduce(aug);
  QMatrix x(a.cols(), b.cols(), Scalar(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivots[i], c) = e.rref(i, a.cols() + c);
  }
  return x;
}

inline std::optional<QMatrix> inverse(const QMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("inverse of a non-square matrix");
  if (rank(a) < a.rows()) return std::nullopt;
  return solve(a, QMatrix::identity(a.rows()));
}

}  // namespace bivar

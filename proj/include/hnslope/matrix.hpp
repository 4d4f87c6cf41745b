#pragma once

// Dense matrices over one of the valued rings (HahnSeries, PadicNumber, XiSeries).
// Determinants and adjugates are division-free (Berkowitz), so they stay exact
// over the series rings.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hnslope/error.hpp"

namespace hnslope {

template <class R>
class Matrix {
 public:
  using Ring = typename R::Ring;

  Matrix() = default;
  Matrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, R::zero(ring_)) {}

  static Matrix identity(const Ring& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R::one(ring);
    return m;
  }

  /// Throws SchemaError for ragged rows.
  static Matrix from_rows(const Ring& ring, const std::vector<std::vector<R>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(ring, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) fail(ErrorKind::SchemaError, "matrix rows of different lengths");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix diagonal(const Ring& ring, const std::vector<R>& d) {
    Matrix m(ring, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  Matrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
    Matrix s(ring_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
      for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    }
    return s;
  }

  /// Columns [from, to).
  Matrix columns(std::size_t from, std::size_t to) const {
    std::vector<std::size_t> r(rows_), c;
    for (std::size_t i = 0; i < rows_; ++i) r[i] = i;
    for (std::size_t j = from; j < to; ++j) c.push_back(j);
    return submatrix(r, c);
  }

  /// Rows [from, to).
  Matrix row_range(std::size_t from, std::size_t to) const {
    std::vector<std::size_t> r, c(cols_);
    for (std::size_t i = from; i < to; ++i) r.push_back(i);
    for (std::size_t j = 0; j < cols_; ++j) c[j] = j;
    return submatrix(r, c);
  }

  Matrix scaled(const R& s) const {
    Matrix m = *this;
    for (auto& x : m.data_) x = s * x;
    return m;
  }

  template <class F>
  Matrix map(F&& f) const {
    Matrix m = *this;
    for (auto& x : m.data_) x = f(x);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::RankMismatch, "matrix product of incompatible shapes");
    Matrix c(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (aik.is_exact_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j).is_exact_zero()) continue;
          c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::RankMismatch, "matrix sum of different shapes");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::RankMismatch, "matrix difference of different shapes");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  /// One row per line, entries separated by `; `.
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += "; ";
        out += (*this)(i, j).str();
      }
      out += "\n";
    }
    return out;
  }

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

/// Kronecker product a ⊗ b.
template <class R>
Matrix<R> kronecker(const Matrix<R>& a, const Matrix<R>& b) {
  Matrix<R> k(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_exact_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t s = 0; s < b.cols(); ++s) k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
      }
    }
  }
  return k;
}

template <class R>
Matrix<R> block_diagonal(const Matrix<R>& a, const Matrix<R>& b) {
  Matrix<R> m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return m;
}

/// Coefficients c_0..c_n of det(λI − A) = λ^n + c_1 λ^{n−1} + ... + c_n (c_0 = 1),
/// by the Berkowitz recursion (no divisions).
template <class R>
std::vector<R> charpoly(const Matrix<R>& a) {
  if (!a.square()) fail(ErrorKind::RankMismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  const auto& ring = a.ring();
  std::vector<R> poly{R::one(ring)};
  for (std::size_t k = 0; k < n; ++k) {
    // Leading (k+1)x(k+1) block: A_k = [[M, col], [row, a_kk]] with M the previous block.
    std::vector<R> col(k), row(k);
    for (std::size_t i = 0; i < k; ++i) {
      col[i] = a(i, k);
      row[i] = a(k, i);
    }
    // Toeplitz column: 1, -a_kk, -row·col, -row·M·col, ...
    std::vector<R> t{R::one(ring), -a(k, k)};
    std::vector<R> v = col;
    for (std::size_t s = 0; s < k; ++s) {
      R dot = R::zero(ring);
      for (std::size_t i = 0; i < k; ++i) dot += row[i] * v[i];
      t.push_back(-dot);
      if (s + 1 < k) {
        std::vector<R> next(k, R::zero(ring));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            if (!a(i, j).is_exact_zero() && !v[j].is_exact_zero()) next[i] += a(i, j) * v[j];
          }
        }
        v = std::move(next);
      }
    }
    std::vector<R> out(k + 2, R::zero(ring));
    for (std::size_t i = 0; i < k + 2; ++i) {
      for (std::size_t j = 0; j <= i && j < poly.size(); ++j) out[i] += t[i - j] * poly[j];
    }
    poly = std::move(out);
  }
  return poly;
}

template <class R>
R determinant(const Matrix<R>& a) {
  if (!a.square()) fail(ErrorKind::RankMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return R::one(a.ring());
  const auto poly = charpoly(a);
  return n % 2 == 0 ? poly[n] : -poly[n];
}

/// Adjugate via Cayley-Hamilton: adj(A) = (−1)^{n−1}(A^{n−1} + c_1 A^{n−2} + ... + c_{n−1} I).
template <class R>
Matrix<R> adjugate(const Matrix<R>& a) {
  if (!a.square()) fail(ErrorKind::RankMismatch, "adjugate of a non-square matrix");
  const std::size_t n = a.rows();
  const auto& ring = a.ring();
  if (n == 0) return a;
  const auto poly = charpoly(a);
  Matrix<R> acc = Matrix<R>::identity(ring, n);
  for (std::size_t k = 1; k < n; ++k) acc = a * acc + Matrix<R>::identity(ring, n).scaled(poly[k]);
  return n % 2 == 1 ? acc : acc.scaled(-R::one(ring));
}

}  // namespace hnslope

#pragma once

// Dense linear algebra over the prime field F_p. Matrices are small (a few
// hundred rows at most), so plain row reduction is used throughout.

#include <cstdint>
#include <optional>
#include <vector>

#include "pga/error.hpp"

namespace pga {

inline std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(r);
}

/// Multiplicative inverse by Fermat; a must be nonzero mod p.
inline std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(ErrorKind::InternalInconsistency, "zero has no inverse");
  return mod_pow(a, p - 2, p);
}

using Vec = std::vector<std::uint32_t>;

class Matrix {
 public:
  Matrix(std::uint32_t p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Matrix whose rows are the given vectors (all of length `cols`).
  static Matrix from_rows(std::uint32_t p, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix M(p, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorKind::ShapeMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) M(i, j) = rows[i][j] % p;
    }
    return M;
  }
  /// Matrix whose columns are the given vectors.
  static Matrix from_cols(std::uint32_t p, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix M(p, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error(ErrorKind::ShapeMismatch, "ragged matrix columns");
      for (std::size_t i = 0; i < rows; ++i) M(i, j) = cols[j][i] % p;
    }
    return M;
  }

  std::uint32_t p() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  Vec operator*(const Vec& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "vector length mismatch");
    Vec out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < cols_; ++j) s = (s + std::uint64_t{(*this)(i, j)} * v[j]) % p_;
      out[i] = static_cast<std::uint32_t>(s);
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::uint32_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(Matrix& M) {
  const std::uint32_t p = M.p();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t piv = r;
    while (piv < M.rows() && M(piv, c) == 0) ++piv;
    if (piv == M.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(piv, j), M(r, j));
    }
    const std::uint64_t inv = mod_inv(M(r, c), p);
    for (std::size_t j = 0; j < M.cols(); ++j) M(r, j) = static_cast<std::uint32_t>(M(r, j) * inv % p);
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == r || M(i, c) == 0) continue;
      const std::uint64_t f = M(i, c);
      for (std::size_t j = 0; j < M.cols(); ++j) {
        M(i, j) = static_cast<std::uint32_t>((M(i, j) + (p - f) * M(r, j)) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Matrix M) { return rref(M).size(); }

/// Basis of {v : M v = 0}, one vector per free column, in column order.
inline std::vector<Vec> nullspace(Matrix M) {
  const auto pivots = rref(M);
  const std::uint32_t p = M.p();
  std::vector<bool> is_pivot(M.cols(), false);
  for (const auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < M.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(M.cols(), 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - M(r, f)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with M x = b, or nullopt when b is outside the column space.
inline std::optional<Vec> solve(const Matrix& M, const Vec& b) {
  if (b.size() != M.rows()) throw Error(ErrorKind::ShapeMismatch, "right-hand side length mismatch");
  Matrix A(M.p(), M.rows(), M.cols() + 1);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) A(i, j) = M(i, j);
    A(i, M.cols()) = b[i] % M.p();
  }
  const auto pivots = rref(A);
  if (!pivots.empty() && pivots.back() == M.cols()) return std::nullopt;
  Vec x(M.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = A(r, M.cols());
  return x;
}

/// Reduced echelon basis of the span of `vectors` (each of length n).
inline std::vector<Vec> span_basis(std::uint32_t p, std::size_t n, const std::vector<Vec>& vectors) {
  Matrix M = Matrix::from_rows(p, n, vectors);
  const auto pivots = rref(M);
  std::vector<Vec> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(M.row(r));
  return out;
}

inline std::size_t span_dim(std::uint32_t p, std::size_t n, const std::vector<Vec>& vectors) {
  return rank(Matrix::from_rows(p, n, vectors));
}

inline bool in_span(std::uint32_t p, std::size_t n, const std::vector<Vec>& vectors, const Vec& v) {
  auto with = vectors;
  with.push_back(v);
  return span_dim(p, n, with) == span_dim(p, n, vectors);
}

}  // namespace pga

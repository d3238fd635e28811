#pragma once

#include "kdeck/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace kdeck {

/// Dense row-major integer matrix.
template <class Int>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<Int> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Int> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// (row_a, row_b) <- (p row_a + q row_b, r row_a + s row_b)
  void mix_rows(std::size_t a, std::size_t b, const Int& p, const Int& q, const Int& r, const Int& s) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Int x = (*this)(a, j), y = (*this)(b, j);
      (*this)(a, j) = p * x + q * y;
      (*this)(b, j) = r * x + s * y;
    }
  }
  /// (col_a, col_b) <- (p col_a + q col_b, r col_a + s col_b)
  void mix_cols(std::size_t a, std::size_t b, const Int& p, const Int& q, const Int& r, const Int& s) {
    for (std::size_t i = 0; i < rows_; ++i) {
      const Int x = (*this)(i, a), y = (*this)(i, b);
      (*this)(i, a) = p * x + q * y;
      (*this)(i, b) = r * x + s * y;
    }
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

using IntMatrix = Matrix<BigInt>;

struct SnfTracking {
  bool left = true;         // U
  bool right = true;        // V
  bool right_inverse = true;  // V^{-1}
};

/// D = diag(d_1, ..., d_r, 0, ...) with d_i > 0 and d_i | d_{i+1};
/// M = U D V with U, V unimodular. Untracked factors are left empty.
template <class Int>
struct SmithResult {
  Matrix<Int> D;
  Matrix<Int> U;
  Matrix<Int> V;
  Matrix<Int> V_inverse;
  std::size_t rank = 0;
};

template <class Int>
SmithResult<Int> smith_reduce(Matrix<Int> m, SnfTracking track = {}) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithResult<Int> res;
  if (track.left) res.U = Matrix<Int>::identity(rows);
  if (track.right) res.V = Matrix<Int>::identity(cols);
  if (track.right_inverse) res.V_inverse = Matrix<Int>::identity(cols);
  auto& d = m;

  // Row op R on rows (a, b) with det +-1: D <- R D, U <- U R^{-1}.
  auto row_op = [&](std::size_t a, std::size_t b, const Int& p, const Int& q, const Int& r, const Int& s) {
    d.mix_rows(a, b, p, q, r, s);
    if (track.left) {
      const Int det = p * s - q * r;
      // R^{-1} = det * [s -q; -r p]; U's columns combine with R^{-1} entries.
      res.U.mix_cols(a, b, det * s, det * (-r), det * (-q), det * p);
    }
  };
  // Column op C on cols (a, b): new col_a = p col_a + q col_b, new col_b = r col_a + s col_b.
  // D <- D C, V <- C^{-1} V, V^{-1} <- V^{-1} C.
  auto col_op = [&](std::size_t a, std::size_t b, const Int& p, const Int& q, const Int& r, const Int& s) {
    d.mix_cols(a, b, p, q, r, s);
    if (track.right_inverse) res.V_inverse.mix_cols(a, b, p, q, r, s);
    if (track.right) {
      const Int det = p * s - q * r;
      // As a matrix C = [p r; q s] on (a, b); C^{-1} = det * [s -r; -q p].
      res.V.mix_rows(a, b, det * s, det * (-r), det * (-q), det * p);
    }
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a != b) row_op(a, b, Int(0), Int(1), Int(1), Int(0));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a != b) col_op(a, b, Int(0), Int(1), Int(1), Int(0));
  };

  const std::size_t lim = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < lim; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (d(i, j) == 0) continue;
        Int a = abs_value(d(i, j));
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = a;
        }
      }
    if (!best) break;
    swap_rows(t, best->first);
    swap_cols(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Int e = d(i, t);
        if (e == 0) continue;
        const Int p = d(t, t);
        if (e % p == 0) {
          row_op(t, i, Int(1), Int(0), Int(-(e / p)), Int(1));
        } else {
          const auto g = xgcd<Int>(p, e);
          row_op(t, i, g.x, g.y, Int(-(e / g.g)), Int(p / g.g));
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Int e = d(t, j);
        if (e == 0) continue;
        const Int p = d(t, t);
        if (e % p == 0) {
          col_op(t, j, Int(1), Int(0), Int(-(e / p)), Int(1));
        } else {
          const auto g = xgcd<Int>(p, e);
          col_op(t, j, g.x, g.y, Int(-(e / g.g)), Int(p / g.g));
          clean = false;  // column t may have picked up entries below the pivot
        }
      }
      if (!clean) continue;
      bool col_clear = true;
      for (std::size_t i = t + 1; i < rows && col_clear; ++i) col_clear = d(i, t) == 0;
      if (!col_clear) continue;
      // Divisibility: fold any row with an entry not divisible by the pivot into row t.
      std::optional<std::size_t> bad;
      const Int p = d(t, t);
      for (std::size_t i = t + 1; i < rows && !bad; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (!bad) break;
      row_op(t, *bad, Int(1), Int(1), Int(0), Int(1));
    }
    if (d(t, t) < 0) {
      // Negating a row is its own inverse.
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      if (track.left)
        for (std::size_t i = 0; i < rows; ++i) res.U(i, t) = -res.U(i, t);
    }
  }
  res.rank = t;
  res.D = std::move(m);
  return res;
}

/// Echelon basis of the row lattice of an integer matrix, grown one row at a
/// time. Each basis row has a positive leading entry in a distinct column.
template <class Int>
class RowLattice {
 public:
  explicit RowLattice(std::size_t cols) : cols_(cols), pivot_rows_(cols) {}

  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::size_t rank() const { return rank_; }

  /// Adds a row; returns true if the lattice changed.
  bool insert(std::vector<Int> r) {
    bool changed = false;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r[c] == 0) continue;
      auto& slot = pivot_rows_[c];
      if (!slot) {
        if (r[c] < 0)
          for (auto& x : r) x = -x;
        slot = std::move(r);
        ++rank_;
        return true;
      }
      auto& b = *slot;
      const Int p = b[c], e = r[c];
      if (e % p == 0) {
        const Int q = e / p;
        for (std::size_t j = c; j < cols_; ++j) r[j] -= q * b[j];
        continue;
      }
      const auto g = xgcd<Int>(p, e);
      const Int bp = p / g.g, be = e / g.g;
      for (std::size_t j = c; j < cols_; ++j) {
        const Int x = b[j], y = r[j];
        b[j] = g.x * x + g.y * y;
        r[j] = bp * y - be * x;
      }
      changed = true;
    }
    return changed;
  }

  /// |det| of the lattice when it has full rank, else 0.
  [[nodiscard]] Int index() const {
    if (rank_ < cols_) return Int(0);
    Int det = 1;
    for (std::size_t c = 0; c < cols_; ++c) det *= (*pivot_rows_[c])[c];
    return det;
  }

  [[nodiscard]] Matrix<Int> basis() const {
    Matrix<Int> m(rank_, cols_);
    std::size_t i = 0;
    for (const auto& r : pivot_rows_) {
      if (!r) continue;
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*r)[j];
      ++i;
    }
    return m;
  }

 private:
  std::size_t cols_;
  std::vector<std::optional<std::vector<Int>>> pivot_rows_;
  std::size_t rank_ = 0;
};

/// Smith normal form M = U D V over arbitrary-precision integers.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Diagonal d_1 | d_2 | ... | d_rank of the Smith form.
std::vector<BigInt> invariant_factors(const IntMatrix& m);

/// Basis of {w in Z^m : w . v = 0}; rank m - 1 for v != 0, the standard basis
/// for v = 0. Each vector has a positive first nonzero entry.
std::vector<std::vector<BigInt>> integer_kernel(std::span<const BigInt> v);

/// det of a square integer matrix by fraction-free elimination.
BigInt determinant(const IntMatrix& m);

}  // namespace kdeck

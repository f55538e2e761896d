#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hspecht/rational.hpp"

namespace hspecht {

/// Dense exact rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend bool operator==(const Matrix& x, const Matrix& y);
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  Matrix transpose() const;
  int rank() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_lower_triangular() const;
  bool is_upper_triangular() const;
  bool has_nonzero_diagonal() const;
  /// Rows separated by newlines, cells by commas, "p/q" syntax.
  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

/// Some solution of a x = b (free variables set to zero), or nullopt if the
/// system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(const Matrix& a, const std::vector<Rational>& b);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(Matrix& m);

/// Sparse vector: (column, nonzero value) pairs sorted by column.
using SparseVec = std::vector<std::pair<int, Rational>>;

/// Incrementally maintained, fully reduced row echelon basis.
///
/// Pivots are the leftmost nonzero column of each row, rows are normalized
/// to a leading 1 and every pivot column is zero in all other rows.
class RowEchelon {
 public:
  explicit RowEchelon(int ncols = 0);

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_pivot(int col) const { return row_of_col_[static_cast<std::size_t>(col)] >= 0; }
  /// Remainder of v modulo the row space; supported on non-pivot columns.
  SparseVec reduce(const SparseVec& v) const;
  /// Adds v to the row space; false when v was already in it.
  bool insert(const SparseVec& v);
  /// Pivot columns in increasing order.
  std::vector<int> pivots() const;

 private:
  int ncols_;
  std::vector<SparseVec> rows_;
  std::vector<int> row_of_col_;
};

}  // namespace hspecht

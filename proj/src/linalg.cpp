#include "hspecht/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hspecht {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
  Matrix r(x.rows_, y.cols_);
  for (int i = 0; i < x.rows_; ++i)
    for (int k = 0; k < x.cols_; ++k) {
      const Rational& a = x(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < y.cols_; ++j)
        if (!y(k, j).is_zero()) r(i, j) += a * y(k, j);
    }
  return r;
}

bool operator==(const Matrix& x, const Matrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
  for (std::size_t i = 0; i < x.a_.size(); ++i)
    if (x.a_[i] != y.a_[i]) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(rref(m).size());
}

bool Matrix::is_lower_triangular() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool Matrix::is_upper_triangular() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < std::min(i, cols_); ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool Matrix::has_nonzero_diagonal() const {
  for (int i = 0; i < std::min(rows_, cols_); ++i)
    if ((*this)(i, i).is_zero()) return false;
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << (*this)(i, j).str();
    }
    os << "\n";
  }
  return os.str();
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    Rational inv = m(row, col).inverse();
    for (int j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Rational f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::optional<std::vector<Rational>> solve_linear(const Matrix& a, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve_linear: size mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[static_cast<std::size_t>(i)];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  std::vector<Rational> x(static_cast<std::size_t>(a.cols()));
  for (std::size_t r = 0; r < piv.size(); ++r) x[static_cast<std::size_t>(piv[r])] = aug(static_cast<int>(r), a.cols());
  return x;
}

// ---------------------------------------------------------------- RowEchelon

RowEchelon::RowEchelon(int ncols) : ncols_(ncols), row_of_col_(static_cast<std::size_t>(ncols), -1) {}

SparseVec RowEchelon::reduce(const SparseVec& v) const {
  // Rows are fully reduced, so only the pivots present in v itself need
  // eliminating and each contributes to non-pivot columns only.
  SparseVec parts;
  bool touched = false;
  for (const auto& [col, c] : v) {
    int r = row_of_col_[static_cast<std::size_t>(col)];
    if (r < 0) {
      parts.emplace_back(col, c);
      continue;
    }
    touched = true;
    const SparseVec& row = rows_[static_cast<std::size_t>(r)];
    for (std::size_t k = 1; k < row.size(); ++k) parts.emplace_back(row[k].first, -(c * row[k].second));
  }
  if (!touched) return parts;
  std::stable_sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec out;
  for (auto& [col, c] : parts) {
    if (!out.empty() && out.back().first == col) {
      out.back().second += c;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!c.is_zero()) {
      out.emplace_back(col, std::move(c));
    }
  }
  return out;
}

bool RowEchelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  Rational inv = r.front().second.inverse();
  for (auto& e : r) e.second *= inv;
  const int p = r.front().first;
  for (auto& row : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), p, [](const auto& e, int c) { return e.first < c; });
    if (it == row.end() || it->first != p) continue;
    Rational f = it->second;
    SparseVec merged;
    merged.reserve(row.size() + r.size());
    auto i = row.begin();
    auto j = r.begin();
    while (i != row.end() || j != r.end()) {
      if (j == r.end() || (i != row.end() && i->first < j->first)) {
        merged.push_back(*i++);
      } else if (i == row.end() || j->first < i->first) {
        merged.emplace_back(j->first, -(f * j->second));
        ++j;
      } else {
        Rational c = i->second - f * j->second;
        if (!c.is_zero()) merged.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    row = std::move(merged);
  }
  row_of_col_[static_cast<std::size_t>(p)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<int> RowEchelon::pivots() const {
  std::vector<int> p;
  for (int c = 0; c < ncols_; ++c)
    if (row_of_col_[static_cast<std::size_t>(c)] >= 0) p.push_back(c);
  return p;
}

}  // namespace hspecht

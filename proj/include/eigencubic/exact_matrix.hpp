#ifndef EIGENCUBIC_EXACT_MATRIX_HPP
#define EIGENCUBIC_EXACT_MATRIX_HPP

#include <vector>

#include "eigencubic/field.hpp"

namespace eigencubic {

// Dense exact matrix over Q or an extension field.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, FieldElement(Rational(0))) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement(Rational(1));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
    ExactMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).isZero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return r;
  }

  // Exact reduced row echelon form with the ascending pivot column list.
  std::pair<ExactMatrix, std::vector<std::size_t>> rref() const {
    ExactMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && m.at(sel, col).isZero()) ++sel;
      if (sel == rows_) continue;
      if (sel != row)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(row, j));
      FieldElement inv = invert(m.at(row, col));
      for (std::size_t j = col; j < cols_; ++j) m.at(row, j) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || m.at(r, col).isZero()) continue;
        FieldElement f = m.at(r, col);
        for (std::size_t j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return {m, pivots};
  }

  std::size_t rank() const { return rref().second.size(); }

  FieldElement determinant() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
    ExactMatrix m = *this;
    FieldElement det(Rational(1));
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t sel = col;
      while (sel < rows_ && m.at(sel, col).isZero()) ++sel;
      if (sel == rows_) return FieldElement(Rational(0));
      if (sel != col) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(col, j));
        det = -det;
      }
      det *= m.at(col, col);
      FieldElement inv = invert(m.at(col, col));
      for (std::size_t r = col + 1; r < rows_; ++r) {
        if (m.at(r, col).isZero()) continue;
        FieldElement f = m.at(r, col) * inv;
        for (std::size_t j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(col, j);
      }
    }
    return det;
  }

  ExactMatrix inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
    ExactMatrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = FieldElement(Rational(1));
    }
    auto [r, piv] = aug.rref();
    if (piv.size() != rows_ || piv.back() >= cols_) throw SingularMatrix("matrix is singular");
    ExactMatrix inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
    return inv;
  }

  // Kernel basis (column vectors), from the RREF free columns.
  std::vector<std::vector<FieldElement>> nullspace() const {
    auto [r, piv] = rref();
    std::vector<bool> isPivot(cols_, false);
    for (auto p : piv) isPivot[p] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (isPivot[free]) continue;
      std::vector<FieldElement> v(cols_, FieldElement(Rational(0)));
      v[free] = FieldElement(Rational(1));
      for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r.at(k, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // One minor per size-rows() column subset, subsets enumerated in
  // lexicographic order of their ascending index tuples.
  std::vector<FieldElement> maximalMinors() const {
    if (rows_ > cols_) throw DimensionMismatch("maximalMinors requires rows <= cols");
    std::vector<FieldElement> out;
    std::vector<std::size_t> sel(rows_);
    for (std::size_t i = 0; i < rows_; ++i) sel[i] = i;
    while (true) {
      ExactMatrix sub(rows_, rows_);
      for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rows_; ++j) sub.at(i, j) = at(i, sel[j]);
      out.push_back(sub.determinant());
      // next lexicographic combination
      std::size_t k = rows_;
      while (k-- > 0) {
        if (sel[k] + (rows_ - k) < cols_) {
          ++sel[k];
          for (std::size_t j = k + 1; j < rows_; ++j) sel[j] = sel[j - 1] + 1;
          break;
        }
        if (k == 0) return out;
      }
    }
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElement> e_;
};

}  // namespace eigencubic

#endif

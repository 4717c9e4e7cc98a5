/*
   Copyright 2026 The upm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "upm/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace upm {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be at least 1x1");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be at least 1x1");
  if (entries_.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match dimensions");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Scalar det(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant requires a square matrix");
  const std::size_t n = m.rows();
  Matrix w = m;
  Scalar prev(1);
  bool negate = false;
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t pivot_row = step;
    while (pivot_row < n && w(pivot_row, step).is_zero()) ++pivot_row;
    if (pivot_row == n) return Scalar(0);
    if (pivot_row != step) {
      for (std::size_t j = step; j < n; ++j) std::swap(w(step, j), w(pivot_row, j));
      negate = !negate;
    }
    const Scalar pivot = w(step, step);
    for (std::size_t i = step + 1; i < n; ++i) {
      for (std::size_t j = step + 1; j < n; ++j) {
        w(i, j) = (w(i, j) * pivot - w(i, step) * w(step, j)) / prev;
      }
      w(i, step) = Scalar(0);
    }
    prev = pivot;
  }
  Scalar result = w(n - 1, n - 1);
  return negate ? -result : result;
}

Matrix replace_column(const Matrix& m, std::size_t col, std::span<const Scalar> v) {
  if (col < 1 || col > m.cols()) throw std::invalid_argument("column index out of range");
  if (v.size() != m.rows()) throw std::invalid_argument("column length does not match row count");
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, col - 1) = v[i];
  return out;
}

Matrix swap_columns(const Matrix& m, std::size_t a, std::size_t b) {
  if (a < 1 || a > m.cols() || b < 1 || b > m.cols()) throw std::invalid_argument("column index out of range");
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(out(i, a - 1), out(i, b - 1));
  return out;
}

Matrix column_combination(const Matrix& m, std::size_t target,
                          std::span<const std::pair<std::size_t, Scalar>> terms) {
  if (target < 1 || target > m.cols()) throw std::invalid_argument("column index out of range");
  // Accumulate per-column coefficients so repeated indices behave additively.
  std::vector<Scalar> coeff(m.cols());
  for (const auto& [index, c] : terms) {
    if (index < 1 || index > m.cols()) throw std::invalid_argument("column index out of range");
    coeff[index - 1] += c;
  }
  const Scalar& own = coeff[target - 1];
  if (own != Scalar(1) && own != Scalar(-1)) {
    throw std::invalid_argument("target column coefficient must be +1 or -1");
  }
  std::vector<Scalar> column(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Scalar sum(0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!coeff[j].is_zero()) sum += coeff[j] * m(i, j);
    }
    column[i] = sum;
  }
  return replace_column(m, target, column);
}

}  // namespace upm

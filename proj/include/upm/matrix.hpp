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

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "upm/rational.hpp"

namespace upm {

/// Dense matrix over Scalar, row-major. Treated as an immutable value by all
/// operations below: they take a const matrix and return a fresh one.
/// Entry access is 0-based; the column-manipulation helpers speak 1-based
/// column indices, matching the usual C_j notation.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Throws on non-square input.
Scalar det(const Matrix& m);

/// Returns m with 1-based column `col` replaced by v (v.size() == rows).
Matrix replace_column(const Matrix& m, std::size_t col, std::span<const Scalar> v);

/// Returns m with 1-based columns a and b exchanged.
Matrix swap_columns(const Matrix& m, std::size_t a, std::size_t b);

/// Determinant-controlled column update: 1-based column `target` becomes
/// sum(coeff * C_index(m)) over `terms`. The target's own accumulated
/// coefficient must be +1 or -1, so det changes at most by that sign.
Matrix column_combination(const Matrix& m, std::size_t target,
                          std::span<const std::pair<std::size_t, Scalar>> terms);

}  // namespace upm

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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "upm/combinatorics.hpp"
#include "upm/matrix.hpp"
#include "upm/rational.hpp"

namespace upm {

/// Input data (k; x, y, r, ell) for the k x k matrix with entries
/// A_ij = (x_i + r_j y_i)^ell. Sequences may be longer than k; only the
/// first k entries are used. Construction rejects sequences shorter than k
/// and r values that repeat among the first k.
class UniformSpec {
 public:
  UniformSpec(int k, int ell, std::vector<Scalar> x, std::vector<Scalar> y, std::vector<Scalar> r);

  /// x_i = start + (i-1)k - 1, y_i = 1, r_i = i: the matrix filled row-wise
  /// with consecutive integers (from `start`) raised to the ell-th power.
  static UniformSpec constant_gap(const BigInt& start, int k, int ell);

  int k() const { return k_; }
  int ell() const { return ell_; }
  const std::vector<Scalar>& x() const { return x_; }
  const std::vector<Scalar>& y() const { return y_; }
  const std::vector<Scalar>& r() const { return r_; }

  /// 0-based accessors for the active (first k) entries.
  const Scalar& xi(int i) const { return x_[static_cast<std::size_t>(i)]; }
  const Scalar& yi(int i) const { return y_[static_cast<std::size_t>(i)]; }
  const Scalar& ri(int i) const { return r_[static_cast<std::size_t>(i)]; }

 private:
  int k_;
  int ell_;
  std::vector<Scalar> x_;
  std::vector<Scalar> y_;
  std::vector<Scalar> r_;
};

enum class Regularity {
  SingularBySize,         // k >= ell+2: rank bound, no determinant computed
  RegularByPositivity,    // positivity hypotheses certify det != 0
  RegularByDeterminant,   // fallback oracle returned a nonzero witness
  SingularByDeterminant,  // fallback oracle returned exactly zero
};

const char* to_string(Regularity r);

struct RegularityVerdict {
  Regularity status;
  std::optional<Scalar> witness;  // present iff decided by determinant
  std::string method;
};

/// The k x k matrix A with A_ij = (x_i + r_j y_i)^ell.
Matrix build_matrix(const UniformSpec& spec);

/// The k x (ell+1) coefficient grid b_i^(j) = C(ell,j) x_i^(ell-j) y_i^j;
/// row i lists the expansion coefficients of (x_i + t y_i)^ell in t.
Matrix b_coefficient_matrix(const UniformSpec& spec);

/// The k x k column selection (b_i^(alpha_j)) of the coefficient grid.
Matrix b_alpha_matrix(const UniformSpec& spec, const IndexTuple& alpha);

/// det(B_alpha) routed by zero pattern: row-factored over x when no x_i
/// vanishes, row-factored over y when no y_i vanishes, direct elimination
/// otherwise. All routes agree wherever they are defined.
Scalar det_b_alpha(const UniformSpec& spec, const IndexTuple& alpha);

/// Direct elimination on the selected columns; total.
Scalar det_b_alpha_direct(const UniformSpec& spec, const IndexTuple& alpha);

/// prod x_i^ell * prod C(ell,alpha_j) * V_{k,alpha}(y_1/x_1,...,y_k/x_k).
/// Requires every x_i != 0.
Scalar det_b_alpha_factored_x(const UniformSpec& spec, const IndexTuple& alpha);

/// (-1)^(k(k-1)/2) * prod y_i^ell * prod C(ell,alpha_j)
///   * V_{k,complement(alpha)}(x_1/y_1,...,x_k/y_k).
/// Requires every y_i != 0.
Scalar det_b_alpha_factored_y(const UniformSpec& spec, const IndexTuple& alpha);

/// Size-(k-1) reduction valid when x_1 = 0 (and x_i != 0 for i >= 2):
/// zero unless alpha_k = ell, else expansion along the first row.
Scalar det_b_alpha_reduced_x1_zero(const UniformSpec& spec, const IndexTuple& alpha);

/// Size-(k-1) reduction valid when y_1 = 0 (and x_i != 0 for i >= 2):
/// zero unless alpha_1 = 0, else expansion along the first row.
Scalar det_b_alpha_reduced_y1_zero(const UniformSpec& spec, const IndexTuple& alpha);

/// det(A) as the sum over strictly increasing alpha of
/// V_{k,alpha}(r_1..r_k) * det(B_alpha). Returns exact 0 without computing
/// when k >= ell+2. `jobs` > 1 splits the alpha sum across threads; the
/// result is bit-identical to the sequential sum.
Scalar det_expansion(const UniformSpec& spec, unsigned jobs = 1);

/// Closed-form determinant of the constant-gap matrix at the limit size
/// k = ell+1, independent of the start value:
/// (-1)^(ell(ell+1)/2) (ell+1)^(ell(ell+1)/2) prod_j (j!)^2 C(ell,j).
Scalar closed_form_limit_det(int ell);

/// Alternating binomial sum over polynomial values:
/// sum_{v=0..ell} (-1)^v C(ell,v) q(v) for q given by coefficients a_0..a_d,
/// d <= ell. Equals (-1)^ell ell! a_ell.
Scalar finite_diff_sum(int ell, std::span<const Scalar> coefficients);

/// For r = (1,...,k) and k >= ell+1: applies, for j = k down to ell+1, the
/// det-preserving update C_j <- (-1)^ell sum_v (-1)^v C(ell,v) C_{j-ell+v}.
/// Every reduced column equals (ell! y_i^ell)_i, so two of them coincide as
/// soon as k >= ell+2.
Matrix column_reduce(const UniformSpec& spec);

/// Regularity decision: the size bound first, then the positivity
/// certificate over rational data, then the determinant oracle.
RegularityVerdict classify_regularity(const UniformSpec& spec);

}  // namespace upm

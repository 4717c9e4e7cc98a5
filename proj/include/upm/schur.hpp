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

#include <map>
#include <span>

#include "upm/combinatorics.hpp"
#include "upm/rational.hpp"

namespace upm {

/// Graded-lexicographic order on exponent vectors: total degree first, then
/// plain lexicographic comparison. This is the canonical term order for
/// sparse polynomials throughout.
struct GradedLexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Multivariate polynomial in a fixed number of symbols, stored as exponent
/// vector -> coefficient with no zero coefficients retained. Term iteration
/// follows GradedLexLess, so serialization and equality are canonical.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(int arity);

  static SparsePolynomial constant(int arity, const Scalar& c);
  static SparsePolynomial monomial(ExponentVector exponents, const Scalar& coefficient);

  int arity() const { return arity_; }
  const std::map<ExponentVector, Scalar, GradedLexLess>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coefficient * u^exponents, erasing the term if it cancels.
  void add_term(const ExponentVector& exponents, const Scalar& coefficient);

  SparsePolynomial& operator+=(const SparsePolynomial& o);
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);

  Scalar eval(std::span<const Scalar> points) const;

  bool operator==(const SparsePolynomial&) const = default;

 private:
  int arity_;
  std::map<ExponentVector, Scalar, GradedLexLess> terms_;
};

/// prod_{i<j} (u_j - u_i); 1 for a single point.
Scalar vandermonde(std::span<const Scalar> points);

/// det(points_i ^ alpha_j), exact; reduces to vandermonde() for the
/// staircase alpha = (0, 1, ..., k-1).
Scalar generalized_vandermonde(std::span<const Scalar> points, const IndexTuple& alpha);

/// Schur polynomial value s_lambda(points). Pairwise-distinct points go
/// through the bialternant quotient (two determinants, one division); any
/// coincidences fall back to evaluating the tableau expansion, which is
/// total.
Scalar schur_eval(const Partition& lambda, std::span<const Scalar> points);

/// Monomial expansion of s_lambda in k symbols: sum over semistandard
/// tableau contents, so every coefficient is a positive integer count.
SparsePolynomial schur_expand(const Partition& lambda, int k);

/// The Vandermonde determinant det(u_i^(j-1)) expanded symbolically via the
/// signed permutation sum. Factorial term growth: intended for small k.
SparsePolynomial vandermonde_poly(int k);

/// det(u_i^alpha_j) expanded symbolically via the signed permutation sum.
SparsePolynomial generalized_vandermonde_poly(const IndexTuple& alpha);

}  // namespace upm

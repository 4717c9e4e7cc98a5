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

#include "upm/schur.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "upm/matrix.hpp"

namespace upm {

bool GradedLexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

SparsePolynomial::SparsePolynomial(int arity) : arity_(arity) {
  if (arity < 1) throw std::invalid_argument("polynomial arity must be at least 1");
}

SparsePolynomial SparsePolynomial::constant(int arity, const Scalar& c) {
  SparsePolynomial p(arity);
  p.add_term(ExponentVector(static_cast<std::size_t>(arity), 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(ExponentVector exponents, const Scalar& coefficient) {
  SparsePolynomial p(static_cast<int>(exponents.size()));
  p.add_term(exponents, coefficient);
  return p;
}

void SparsePolynomial::add_term(const ExponentVector& exponents, const Scalar& coefficient) {
  if (static_cast<int>(exponents.size()) != arity_) throw std::invalid_argument("exponent vector length must equal arity");
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("exponents must be non-negative");
  }
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("polynomial arity mismatch");
  SparsePolynomial out(a.arity_);
  ExponentVector e(static_cast<std::size_t>(a.arity_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Scalar SparsePolynomial::eval(std::span<const Scalar> points) const {
  if (static_cast<int>(points.size()) != arity_) throw std::invalid_argument("point count must equal arity");
  Scalar sum(0);
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (e[i] > 0) term *= points[i].pow(static_cast<unsigned long>(e[i]));
    }
    sum += term;
  }
  return sum;
}

Scalar vandermonde(std::span<const Scalar> points) {
  if (points.empty()) throw std::invalid_argument("vandermonde needs at least one point");
  Scalar prod(1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      prod *= points[j] - points[i];
    }
  }
  return prod;
}

Scalar generalized_vandermonde(std::span<const Scalar> points, const IndexTuple& alpha) {
  const int k = alpha.k();
  if (static_cast<int>(points.size()) != k) throw std::invalid_argument("point count must equal tuple length");
  Matrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = points[static_cast<std::size_t>(i)].pow(static_cast<unsigned long>(alpha[j]));
    }
  }
  return det(m);
}

Scalar schur_eval(const Partition& lambda, std::span<const Scalar> points) {
  const int k = lambda.size();
  if (static_cast<int>(points.size()) != k) throw std::invalid_argument("point count must equal partition length");
  bool distinct = true;
  for (std::size_t i = 0; i < points.size() && distinct; ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        distinct = false;
        break;
      }
    }
  }
  if (distinct) {
    const IndexTuple alpha = partition_to_tuple(lambda, lambda[0] + k - 1);
    return generalized_vandermonde(points, alpha) / vandermonde(points);
  }
  return schur_expand(lambda, k).eval(points);
}

SparsePolynomial schur_expand(const Partition& lambda, int k) {
  if (lambda.size() != k) throw std::invalid_argument("partition length must equal arity");
  SparsePolynomial p(k);
  const Scalar one(1);
  for (const Tableau& t : enumerate_ssyt(lambda, k)) {
    p.add_term(tableau_content(t, k), one);
  }
  return p;
}

namespace {

// Signed permutation sum over column exponents; k! terms.
SparsePolynomial permutation_expansion(const std::vector<int>& exponents) {
  const int k = static_cast<int>(exponents.size());
  SparsePolynomial p(k);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  ExponentVector e(static_cast<std::size_t>(k));
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
      }
    }
    for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = exponents[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    p.add_term(e, Scalar(inversions % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

}  // namespace

SparsePolynomial vandermonde_poly(int k) {
  if (k < 1) throw std::invalid_argument("vandermonde_poly needs k >= 1");
  std::vector<int> staircase(static_cast<std::size_t>(k));
  std::iota(staircase.begin(), staircase.end(), 0);
  return permutation_expansion(staircase);
}

SparsePolynomial generalized_vandermonde_poly(const IndexTuple& alpha) {
  return permutation_expansion(alpha.values());
}

}  // namespace upm

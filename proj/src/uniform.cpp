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

#include "upm/uniform.hpp"

#include <exception>
#include <stdexcept>
#include <thread>

#include "upm/schur.hpp"

namespace upm {

UniformSpec::UniformSpec(int k, int ell, std::vector<Scalar> x, std::vector<Scalar> y, std::vector<Scalar> r)
    : k_(k), ell_(ell), x_(std::move(x)), y_(std::move(y)), r_(std::move(r)) {
  if (k_ < 1) throw std::invalid_argument("spec requires k >= 1");
  if (ell_ < 0) throw std::invalid_argument("spec requires ell >= 0");
  const auto need = static_cast<std::size_t>(k_);
  if (x_.size() < need || y_.size() < need || r_.size() < need) {
    throw std::invalid_argument("sequences must provide at least k entries");
  }
  for (int i = 0; i < k_; ++i) {
    for (int j = i + 1; j < k_; ++j) {
      if (ri(i) == ri(j)) throw std::invalid_argument("r must be injective on its first k entries");
    }
  }
}

UniformSpec UniformSpec::constant_gap(const BigInt& start, int k, int ell) {
  if (start < 1) throw std::invalid_argument("constant-gap start must be a positive integer");
  std::vector<Scalar> x, y, r;
  x.reserve(static_cast<std::size_t>(k));
  y.reserve(static_cast<std::size_t>(k));
  r.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    x.emplace_back(BigInt(start + BigInt(i - 1) * k - 1));
    y.emplace_back(1);
    r.emplace_back(i);
  }
  return UniformSpec(k, ell, std::move(x), std::move(y), std::move(r));
}

const char* to_string(Regularity r) {
  switch (r) {
    case Regularity::SingularBySize: return "SingularBySize";
    case Regularity::RegularByPositivity: return "RegularByPositivity";
    case Regularity::RegularByDeterminant: return "RegularByDeterminant";
    case Regularity::SingularByDeterminant: return "SingularByDeterminant";
  }
  return "?";
}

Matrix build_matrix(const UniformSpec& spec) {
  const int k = spec.k();
  Matrix a(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          (spec.xi(i) + spec.ri(j) * spec.yi(i)).pow(static_cast<unsigned long>(spec.ell()));
    }
  }
  return a;
}

Matrix b_coefficient_matrix(const UniformSpec& spec) {
  const int k = spec.k();
  const int ell = spec.ell();
  Matrix b(static_cast<std::size_t>(k), static_cast<std::size_t>(ell + 1));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j <= ell; ++j) {
      b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          Scalar(binomial(ell, j)) * spec.xi(i).pow(static_cast<unsigned long>(ell - j)) *
          spec.yi(i).pow(static_cast<unsigned long>(j));
    }
  }
  return b;
}

namespace {

void check_alpha(const UniformSpec& spec, const IndexTuple& alpha) {
  if (alpha.k() != spec.k()) throw std::invalid_argument("alpha length must equal k");
  if (alpha.ceiling() != spec.ell() || alpha[alpha.k() - 1] > spec.ell()) {
    throw std::invalid_argument("alpha entries must lie in {0..ell}");
  }
}

Scalar binomial_product(int ell, const IndexTuple& alpha, int first, int last) {
  BigInt prod(1);
  for (int j = first; j <= last; ++j) prod *= binomial(ell, alpha[j]);
  return Scalar(prod);
}

}  // namespace

Matrix b_alpha_matrix(const UniformSpec& spec, const IndexTuple& alpha) {
  check_alpha(spec, alpha);
  const int k = spec.k();
  const int ell = spec.ell();
  Matrix b(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          Scalar(binomial(ell, alpha[j])) * spec.xi(i).pow(static_cast<unsigned long>(ell - alpha[j])) *
          spec.yi(i).pow(static_cast<unsigned long>(alpha[j]));
    }
  }
  return b;
}

Scalar det_b_alpha_direct(const UniformSpec& spec, const IndexTuple& alpha) {
  return det(b_alpha_matrix(spec, alpha));
}

Scalar det_b_alpha_factored_x(const UniformSpec& spec, const IndexTuple& alpha) {
  check_alpha(spec, alpha);
  const int k = spec.k();
  const auto ell = static_cast<unsigned long>(spec.ell());
  std::vector<Scalar> rho(static_cast<std::size_t>(k));
  Scalar prefactor(1);
  for (int i = 0; i < k; ++i) {
    if (spec.xi(i).is_zero()) throw std::domain_error("x-factored route requires all x_i nonzero");
    rho[static_cast<std::size_t>(i)] = spec.yi(i) / spec.xi(i);
    prefactor *= spec.xi(i).pow(ell);
  }
  return prefactor * binomial_product(spec.ell(), alpha, 0, k - 1) * generalized_vandermonde(rho, alpha);
}

Scalar det_b_alpha_factored_y(const UniformSpec& spec, const IndexTuple& alpha) {
  check_alpha(spec, alpha);
  const int k = spec.k();
  const auto ell = static_cast<unsigned long>(spec.ell());
  std::vector<Scalar> inv_rho(static_cast<std::size_t>(k));
  Scalar prefactor((k * (k - 1) / 2) % 2 == 0 ? 1 : -1);
  for (int i = 0; i < k; ++i) {
    if (spec.yi(i).is_zero()) throw std::domain_error("y-factored route requires all y_i nonzero");
    inv_rho[static_cast<std::size_t>(i)] = spec.xi(i) / spec.yi(i);
    prefactor *= spec.yi(i).pow(ell);
  }
  return prefactor * binomial_product(spec.ell(), alpha, 0, k - 1) *
         generalized_vandermonde(inv_rho, complement(alpha));
}

Scalar det_b_alpha_reduced_x1_zero(const UniformSpec& spec, const IndexTuple& alpha) {
  check_alpha(spec, alpha);
  const int k = spec.k();
  const int ell = spec.ell();
  if (!spec.xi(0).is_zero()) throw std::domain_error("reduction requires x_1 = 0");
  if (alpha[k - 1] != ell) return Scalar(0);
  const Scalar lead = spec.yi(0).pow(static_cast<unsigned long>(ell));
  if (k == 1) return lead;
  std::vector<Scalar> rho(static_cast<std::size_t>(k - 1));
  Scalar prefactor(k % 2 == 0 ? -1 : 1);  // cofactor sign (-1)^(1+k)
  for (int i = 1; i < k; ++i) {
    if (spec.xi(i).is_zero()) throw std::domain_error("reduction requires x_i != 0 for i >= 2");
    rho[static_cast<std::size_t>(i - 1)] = spec.yi(i) / spec.xi(i);
    prefactor *= spec.xi(i).pow(static_cast<unsigned long>(ell));
  }
  std::vector<int> head(alpha.values().begin(), alpha.values().end() - 1);
  const IndexTuple alpha_head(std::move(head), ell);
  return prefactor * lead * binomial_product(ell, alpha, 0, k - 2) * generalized_vandermonde(rho, alpha_head);
}

Scalar det_b_alpha_reduced_y1_zero(const UniformSpec& spec, const IndexTuple& alpha) {
  check_alpha(spec, alpha);
  const int k = spec.k();
  const int ell = spec.ell();
  if (!spec.yi(0).is_zero()) throw std::domain_error("reduction requires y_1 = 0");
  if (alpha[0] != 0) return Scalar(0);
  const Scalar lead = spec.xi(0).pow(static_cast<unsigned long>(ell));
  if (k == 1) return lead;
  std::vector<Scalar> rho(static_cast<std::size_t>(k - 1));
  Scalar prefactor(1);
  for (int i = 1; i < k; ++i) {
    if (spec.xi(i).is_zero()) throw std::domain_error("reduction requires x_i != 0 for i >= 2");
    rho[static_cast<std::size_t>(i - 1)] = spec.yi(i) / spec.xi(i);
    prefactor *= spec.xi(i).pow(static_cast<unsigned long>(ell));
  }
  std::vector<int> tail(alpha.values().begin() + 1, alpha.values().end());
  const IndexTuple alpha_tail(std::move(tail), ell);
  return prefactor * lead * binomial_product(ell, alpha, 1, k - 1) * generalized_vandermonde(rho, alpha_tail);
}

Scalar det_b_alpha(const UniformSpec& spec, const IndexTuple& alpha) {
  check_alpha(spec, alpha);
  bool x_clear = true;
  bool y_clear = true;
  for (int i = 0; i < spec.k(); ++i) {
    if (spec.xi(i).is_zero()) x_clear = false;
    if (spec.yi(i).is_zero()) y_clear = false;
  }
  if (x_clear) return det_b_alpha_factored_x(spec, alpha);
  if (y_clear) return det_b_alpha_factored_y(spec, alpha);
  return det_b_alpha_direct(spec, alpha);
}

Scalar det_expansion(const UniformSpec& spec, unsigned jobs) {
  const int k = spec.k();
  const int ell = spec.ell();
  if (k >= ell + 2) return Scalar(0);

  const std::vector<IndexTuple> tuples = enumerate_index_tuples(k, ell);
  const std::span<const Scalar> r_points(spec.r().data(), static_cast<std::size_t>(k));
  auto term = [&](const IndexTuple& alpha) {
    return generalized_vandermonde(r_points, alpha) * det_b_alpha(spec, alpha);
  };

  if (jobs <= 1 || tuples.size() < 2) {
    Scalar sum(0);
    for (const IndexTuple& alpha : tuples) sum += term(alpha);
    return sum;
  }

  const std::size_t workers = std::min<std::size_t>(jobs, tuples.size());
  std::vector<Scalar> partial(workers, Scalar(0));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        Scalar sum(0);
        for (std::size_t t = w; t < tuples.size(); t += workers) sum += term(tuples[t]);
        partial[w] = std::move(sum);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  // Exact addition is associative and commutative, so any combination order
  // reproduces the sequential value bit for bit; keep worker order anyway.
  Scalar sum(0);
  for (const Scalar& p : partial) sum += p;
  return sum;
}

Scalar closed_form_limit_det(int ell) {
  if (ell < 0) throw std::invalid_argument("ell must be non-negative");
  const auto e = static_cast<unsigned long>(ell) * static_cast<unsigned long>(ell + 1) / 2;
  BigInt value;
  mpz_ui_pow_ui(value.get_mpz_t(), static_cast<unsigned long>(ell + 1), e);
  for (int j = 0; j <= ell; ++j) {
    const BigInt f = factorial(j);
    value *= f * f * binomial(ell, j);
  }
  if (e % 2 == 1) value = -value;
  return Scalar(value);
}

Scalar finite_diff_sum(int ell, std::span<const Scalar> coefficients) {
  if (ell < 0) throw std::invalid_argument("ell must be non-negative");
  std::size_t n = coefficients.size();
  while (n > 0 && coefficients[n - 1].is_zero()) --n;
  if (n > static_cast<std::size_t>(ell) + 1) {
    throw std::domain_error("polynomial degree exceeds ell; the identity does not apply");
  }
  Scalar sum(0);
  for (int v = 0; v <= ell; ++v) {
    // Horner evaluation of q at v.
    Scalar q(0);
    const Scalar point(v);
    for (std::size_t t = n; t-- > 0;) q = q * point + coefficients[t];
    const Scalar weight(v % 2 == 0 ? binomial(ell, v) : -binomial(ell, v));
    sum += weight * q;
  }
  return sum;
}

Matrix column_reduce(const UniformSpec& spec) {
  const int k = spec.k();
  const int ell = spec.ell();
  if (k < ell + 1) throw std::domain_error("column reduction needs k >= ell+1; no column qualifies");
  for (int i = 0; i < k; ++i) {
    if (spec.ri(i) != Scalar(i + 1)) throw std::domain_error("column reduction is defined for r = (1, 2, ..., k)");
  }
  Matrix a = build_matrix(spec);
  for (int j = k; j >= ell + 1; --j) {
    std::vector<std::pair<std::size_t, Scalar>> terms;
    terms.reserve(static_cast<std::size_t>(ell + 1));
    for (int v = 0; v <= ell; ++v) {
      const BigInt c = binomial(ell, v);
      terms.emplace_back(static_cast<std::size_t>(j - ell + v), Scalar((ell + v) % 2 == 0 ? c : -c));
    }
    a = column_combination(a, static_cast<std::size_t>(j), terms);
  }
  return a;
}

namespace {

// Hypotheses that certify regularity without a determinant: rational data,
// strictly positive r, pairwise x_i y_j != x_j y_i, and positive ratios
// y_i/x_i -- where at most one x_i or y_i may vanish (its partner is then
// forced nonzero by the cross-product condition).
bool positivity_certificate(const UniformSpec& spec) {
  const int k = spec.k();
  for (int i = 0; i < k; ++i) {
    if (!spec.xi(i).is_real() || !spec.yi(i).is_real() || !spec.ri(i).is_real()) return false;
    if (spec.ri(i).re().sign() <= 0) return false;
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if ((spec.xi(i) * spec.yi(j) - spec.xi(j) * spec.yi(i)).is_zero()) return false;
    }
  }
  int zeros = 0;
  for (int i = 0; i < k; ++i) {
    zeros += spec.xi(i).is_zero() ? 1 : 0;
    zeros += spec.yi(i).is_zero() ? 1 : 0;
  }
  if (zeros > 1) return false;
  for (int i = 0; i < k; ++i) {
    if (spec.xi(i).is_zero() || spec.yi(i).is_zero()) continue;
    if (spec.xi(i).re().sign() * spec.yi(i).re().sign() <= 0) return false;
  }
  return true;
}

}  // namespace

RegularityVerdict classify_regularity(const UniformSpec& spec) {
  if (spec.k() >= spec.ell() + 2) {
    return RegularityVerdict{Regularity::SingularBySize, std::nullopt, "size bound: k >= ell+2"};
  }
  if (positivity_certificate(spec)) {
    return RegularityVerdict{Regularity::RegularByPositivity, std::nullopt, "positivity certificate"};
  }
  Scalar witness = det(build_matrix(spec));
  const bool regular = !witness.is_zero();
  return RegularityVerdict{regular ? Regularity::RegularByDeterminant : Regularity::SingularByDeterminant,
                           std::move(witness), "determinant oracle"};
}

}  // namespace upm

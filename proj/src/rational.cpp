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

#include "upm/rational.hpp"

#include <cctype>
#include <ostream>

namespace upm {

BigInt binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: n must be non-negative");
  if (k < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: n must be non-negative");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational Rational::pow(unsigned long e) const {
  // num/den stay coprime under powers, so no re-canonicalization is needed.
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  Rational r;
  r.v_ = mpq_class(n, d);
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  std::size_t num_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_begin) fail();
  BigInt num(std::string(text.substr(0, pos)), 10);
  if (pos == text.size()) return Rational(num);
  if (text[pos] != '/') fail();
  ++pos;
  std::size_t den_begin = pos;
  if (pos >= text.size() || text[pos] < '1' || text[pos] > '9') fail();
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) fail();
  BigInt den(std::string(text.substr(den_begin)), 10);
  return Rational(num, den);
}

std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    s += '/';
    s += v_.get_den().get_str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  if (norm.is_zero()) throw std::domain_error("scalar division by zero");
  Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
  Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar Scalar::pow(unsigned long e) const {
  Scalar base = *this;
  Scalar acc(1);
  while (e > 0) {
    if (e & 1UL) acc *= base;
    e >>= 1UL;
    if (e > 0) base *= base;
  }
  return acc;
}

std::string Scalar::str() const {
  if (is_real()) return re_.str();
  return "{\"re\":\"" + re_.str() + "\",\"im\":\"" + im_.str() + "\"}";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace upm

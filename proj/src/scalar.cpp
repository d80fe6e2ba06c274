// Copyright 2026 The permwit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "permwit/scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace permwit {

namespace {

// n = k^2 * m with m square-free for all square factors built from primes
// <= 10^6; a perfect-square remainder is extracted whole.
void extract_square(mpz_class& n, mpz_class& k) {
  k = 1;
  if (n <= 1) return;
  for (mpz_class d = 2; d <= 1000000 && d * d <= n; ++d) {
    mpz_class dd = d * d;
    while (mpz_divisible_p(n.get_mpz_t(), dd.get_mpz_t())) {
      n /= dd;
      k *= d;
    }
  }
  if (n > 1 && mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    k *= r;
    n = 1;
  }
}

}  // namespace

ExactScalar ExactScalar::rational(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return ExactScalar(q);
}

ExactScalar ExactScalar::sqrt_rational(const mpq_class& r) {
  return from_parts(mpq_class(1), mpq_class(0), r);
}

ExactScalar ExactScalar::from_parts(mpq_class re, mpq_class im, const mpq_class& root) {
  if (root < 0) throw std::domain_error("negative radicand");
  if (root == 0 || (re == 0 && im == 0)) return ExactScalar(mpq_class(0), mpq_class(0));
  // sqrt(p/q) = sqrt(p*q)/q
  mpz_class p = root.get_num();
  mpz_class q = root.get_den();
  mpz_class n = p * q;
  mpz_class k;
  extract_square(n, k);
  mpq_class factor(k, q);
  factor.canonicalize();
  ExactScalar out;
  out.re_ = re * factor;
  out.im_ = im * factor;
  out.root_ = n;
  out.canonicalize_zero();
  return out;
}

ExactScalar ExactScalar::conj() const {
  ExactScalar out = *this;
  out.im_ = -out.im_;
  return out;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  out.re_ = -out.re_;
  out.im_ = -out.im_;
  return out;
}

ExactScalar ExactScalar::operator*(const ExactScalar& rhs) const {
  if (is_zero() || rhs.is_zero()) return ExactScalar();
  ExactScalar out;
  out.re_ = re_ * rhs.re_ - im_ * rhs.im_;
  out.im_ = re_ * rhs.im_ + im_ * rhs.re_;
  // both roots square-free: root_a*root_b = g^2 * (root_a/g)*(root_b/g)
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), root_.get_mpz_t(), rhs.root_.get_mpz_t());
  out.root_ = (root_ / g) * (rhs.root_ / g);
  if (g != 1) {
    out.re_ *= g;
    out.im_ *= g;
  }
  out.canonicalize_zero();
  return out;
}

ExactScalar ExactScalar::operator/(const ExactScalar& rhs) const {
  if (rhs.is_zero()) throw std::domain_error("division by zero scalar");
  // 1/(g*sqrt(m)) = conj(g)*sqrt(m)/(|g|^2 * m)
  mpq_class denom = (rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_) * rhs.root_;
  ExactScalar inv;
  inv.re_ = rhs.re_ / denom;
  inv.im_ = -rhs.im_ / denom;
  inv.root_ = rhs.root_;
  return *this * inv;
}

mpq_class ExactScalar::abs_sq() const {
  return (re_ * re_ + im_ * im_) * root_;
}

std::optional<ExactScalar> ExactScalar::add(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.root_ != b.root_) return std::nullopt;
  ExactScalar out;
  out.re_ = a.re_ + b.re_;
  out.im_ = a.im_ + b.im_;
  out.root_ = a.root_;
  out.canonicalize_zero();
  return out;
}

std::complex<double> ExactScalar::to_complex() const {
  double s = std::sqrt(root_.get_d());
  return {re_.get_d() * s, im_.get_d() * s};
}

std::string ExactScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (im_ == 0) {
    os << re_.get_str();
  } else if (re_ == 0) {
    os << im_.get_str() << "i";
  } else {
    os << "(" << re_.get_str() << (im_ > 0 ? "+" : "") << im_.get_str() << "i)";
  }
  if (root_ != 1) os << "*sqrt(" << root_.get_str() << ")";
  return os.str();
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  if (exact_ && rhs.exact_) {
    if (auto sum = ExactScalar::add(ex_, rhs.ex_)) return Scalar(*sum);
  }
  return approx(to_complex() + rhs.to_complex());
}

Scalar Scalar::operator*(const Scalar& rhs) const {
  if (exact_ && rhs.exact_) return Scalar(ex_ * rhs.ex_);
  return approx(to_complex() * rhs.to_complex());
}

Scalar Scalar::operator/(const Scalar& rhs) const {
  if (exact_ && rhs.exact_) return Scalar(ex_ / rhs.ex_);
  return approx(to_complex() / rhs.to_complex());
}

Scalar Scalar::operator-() const {
  if (exact_) return Scalar(-ex_);
  return approx(-ap_);
}

Scalar Scalar::conj() const {
  if (exact_) return Scalar(ex_.conj());
  return approx(std::conj(ap_));
}

Scalar Scalar::abs_sq() const {
  if (exact_) return Scalar(ExactScalar(ex_.abs_sq()));
  return approx(std::norm(ap_));
}

mpq_class Scalar::rational_value() const {
  if (!exact_ || !ex_.is_rational())
    throw std::logic_error("rational_value on a non-rational scalar");
  return ex_.real_part();
}

std::string Scalar::to_string() const {
  if (exact_) return ex_.to_string();
  std::ostringstream os;
  os << "~(" << ap_.real();
  if (ap_.imag() != 0.0) os << (ap_.imag() > 0 ? "+" : "") << ap_.imag() << "i";
  os << ")";
  return os.str();
}

ZeroClass classify_norm(const Scalar& norm_sq) {
  if (norm_sq.exact()) {
    return norm_sq.exact_value().is_zero() ? ZeroClass::Zero : ZeroClass::NonZero;
  }
  double v = std::abs(norm_sq.to_complex().real());
  if (v < kNormZeroBand) return ZeroClass::Zero;
  if (v < kNormAmbiguousBand) return ZeroClass::Ambiguous;
  return ZeroClass::NonZero;
}

std::string zero_class_name(ZeroClass z) {
  switch (z) {
    case ZeroClass::Zero: return "zero";
    case ZeroClass::Ambiguous: return "ambiguous";
    case ZeroClass::NonZero: return "nonzero";
  }
  return "?";
}

}  // namespace permwit

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

#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>

namespace permwit {

/// Exact complex amplitude of the form (re + i*im) * sqrt(root):
/// re, im rational, root a positive square-free integer.
///
/// This tower is closed under multiplication, conjugation, division and
/// absolute square; addition is closed exactly when both operands carry the
/// same root (or one of them is zero). That covers every amplitude used by
/// the state and witness libraries, where each state carries a single global
/// 1/sqrt(integer) normalization or per-term sqrt(lambda) factors that only
/// ever meet their own kind.
///
/// Canonical form: zero is (0, 0, root=1); the root of a product of two
/// square-free integers is reduced with a single gcd, so no factoring happens
/// after construction. Square-free extraction at construction uses trial
/// division up to 10^6 followed by a perfect-square check on the remainder;
/// inputs whose square factors hide behind larger primes keep a non-square-free
/// root, which can only make additions degrade sooner, never produce a wrong
/// value.
class ExactScalar {
 public:
  ExactScalar() : root_(1) {}
  explicit ExactScalar(mpq_class re) : re_(std::move(re)), root_(1) { canonicalize_zero(); }
  ExactScalar(mpq_class re, mpq_class im)
      : re_(std::move(re)), im_(std::move(im)), root_(1) { canonicalize_zero(); }

  /// sqrt(r) for a nonnegative rational r. Throws std::domain_error for r < 0.
  static ExactScalar sqrt_rational(const mpq_class& r);
  /// (re + i*im) * sqrt(root) with root an arbitrary nonnegative rational;
  /// normalizes to canonical form.
  static ExactScalar from_parts(mpq_class re, mpq_class im, const mpq_class& root);
  static ExactScalar integer(long v) { return ExactScalar(mpq_class(v)); }
  static ExactScalar rational(long num, long den);

  const mpq_class& real_part() const { return re_; }
  const mpq_class& imag_part() const { return im_; }
  const mpz_class& root() const { return root_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_rational() const { return root_ == 1 && im_ == 0; }

  ExactScalar conj() const;
  ExactScalar operator-() const;
  ExactScalar operator*(const ExactScalar& rhs) const;
  /// Division by a nonzero scalar; always exact.
  ExactScalar operator/(const ExactScalar& rhs) const;
  /// Exact |a|^2 = (re^2 + im^2) * root, always a plain rational.
  mpq_class abs_sq() const;

  /// Exact sum, or nullopt when the radicals are incompatible.
  static std::optional<ExactScalar> add(const ExactScalar& a, const ExactScalar& b);

  std::complex<double> to_complex() const;
  /// Human-readable form, e.g. "1/2", "-2/3*sqrt(6)", "(1/2+1/3i)".
  std::string to_string() const;

  bool operator==(const ExactScalar& rhs) const {
    return re_ == rhs.re_ && im_ == rhs.im_ && root_ == rhs.root_;
  }

 private:
  void canonicalize_zero() {
    if (re_ == 0 && im_ == 0) root_ = 1;
  }

  mpq_class re_;
  mpq_class im_;
  mpz_class root_;  // >= 1, square-free in canonical form
};

/// A scalar that is either exact or a flagged double-precision approximation.
/// The flag is monotone: any operation with an inexact operand, and any
/// addition across incompatible radicals, yields an inexact result.
class Scalar {
 public:
  Scalar() : exact_(true) {}
  Scalar(ExactScalar v) : exact_(true), ex_(std::move(v)) {}  // NOLINT(runtime/explicit)
  static Scalar approx(std::complex<double> v) {
    Scalar s;
    s.exact_ = false;
    s.ap_ = v;
    return s;
  }
  static Scalar integer(long v) { return Scalar(ExactScalar::integer(v)); }
  static Scalar rational(long num, long den) { return Scalar(ExactScalar::rational(num, den)); }

  bool exact() const { return exact_; }
  const ExactScalar& exact_value() const { return ex_; }
  std::complex<double> to_complex() const { return exact_ ? ex_.to_complex() : ap_; }

  /// True for the exact zero, and for a float value that is identically 0.0
  /// (used only for pruning stored terms; zero *verdicts* on the float path go
  /// through classify_norm below).
  bool is_zero() const {
    return exact_ ? ex_.is_zero() : (ap_.real() == 0.0 && ap_.imag() == 0.0);
  }

  Scalar operator+(const Scalar& rhs) const;
  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;
  Scalar operator-() const;
  Scalar conj() const;
  /// |v|^2; exact (a plain rational) whenever v is exact.
  Scalar abs_sq() const;

  /// Exact rational value; requires exact(), zero imaginary part, root 1.
  mpq_class rational_value() const;

  bool operator==(const Scalar& rhs) const {
    if (exact_ != rhs.exact_) return false;
    return exact_ ? ex_ == rhs.ex_ : ap_ == rhs.ap_;
  }

  std::string to_string() const;

 private:
  bool exact_;
  ExactScalar ex_;
  std::complex<double> ap_{0.0, 0.0};
};

/// Verdict classes for a squared-norm value against the float guard band.
enum class ZeroClass { Zero, Ambiguous, NonZero };

inline constexpr double kNormZeroBand = 1e-24;       // below: zero
inline constexpr double kNormAmbiguousBand = 1e-12;  // below: ambiguous, reported

/// Classifies a squared norm. Exact values are decided exactly; float values
/// fall in the guard bands above.
ZeroClass classify_norm(const Scalar& norm_sq);

std::string zero_class_name(ZeroClass z);

}  // namespace permwit

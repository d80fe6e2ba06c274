#include <doctest.h>

#include <cmath>

#include "permwit/scalar.hpp"

using namespace permwit;

namespace {
Scalar sqrtq(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(ExactScalar::sqrt_rational(q));
}
}  // namespace

TEST_CASE("additive inverse cancels exactly") {
  Scalar a = Scalar::rational(1, 2);
  Scalar b = Scalar::rational(-1, 2);
  Scalar sum = a + b;
  CHECK(sum.exact());
  CHECK(sum.is_zero());
  CHECK(sum.exact_value().root() == 1);  // zero has the canonical root
}

TEST_CASE("common radical adds exactly") {
  Scalar a = Scalar::rational(1, 2) * sqrtq(2, 1);
  Scalar b = Scalar::rational(1, 3) * sqrtq(2, 1);
  Scalar sum = a + b;
  REQUIRE(sum.exact());
  CHECK(sum.exact_value().real_part() == mpq_class(5, 6));
  CHECK(sum.exact_value().root() == 2);
}

TEST_CASE("incompatible radicals degrade to a flagged float") {
  Scalar sum = sqrtq(2, 1) + sqrtq(3, 1);
  CHECK_FALSE(sum.exact());
  CHECK(sum.to_complex().real() == doctest::Approx(std::sqrt(2.0) + std::sqrt(3.0)));
}

TEST_CASE("abs_sq examples") {
  CHECK(sqrtq(1, 6).abs_sq().rational_value() == mpq_class(1, 6));
  Scalar half_one_plus_i(ExactScalar(mpq_class(1, 2), mpq_class(1, 2)));
  CHECK(half_one_plus_i.abs_sq().rational_value() == mpq_class(1, 2));
  Scalar v = Scalar::rational(1, 4) * sqrtq(1, 2);
  CHECK(v.abs_sq().rational_value() == mpq_class(1, 32));
}

TEST_CASE("abs_sq of random gaussian rationals is p^2 + q^2") {
  for (int t = 0; t < 50; ++t) {
    mpq_class p(t * 7 - 40, t + 3), q(11 - t, 2 * t + 1);
    p.canonicalize();
    q.canonicalize();
    CHECK(Scalar(ExactScalar(p, q)).abs_sq().rational_value() == p * p + q * q);
  }
}

TEST_CASE("sqrt normalization extracts perfect squares") {
  const long square_free[] = {1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15};
  for (long k = 1; k <= 12; ++k) {
    for (long m : square_free) {
      ExactScalar v = ExactScalar::sqrt_rational(mpq_class(k * k * m));
      CHECK(v.root() == m);
      CHECK(v.real_part() == mpq_class(k));
    }
  }
  // rational radicands move the denominator into the gaussian part
  ExactScalar v = ExactScalar::sqrt_rational(mpq_class(1, 6));
  CHECK(v.root() == 6);
  CHECK(v.real_part() == mpq_class(1, 6));
}

TEST_CASE("multiplication closes on square-free roots via gcd") {
  Scalar a = sqrtq(6, 1);
  Scalar b = sqrtq(10, 1);
  Scalar p = a * b;  // sqrt(60) = 2 sqrt(15)
  REQUIRE(p.exact());
  CHECK(p.exact_value().root() == 15);
  CHECK(p.exact_value().real_part() == 2);
}

TEST_CASE("division is exact and inverts multiplication") {
  Scalar values[] = {Scalar::rational(3, 4) * sqrtq(5, 1),
                     Scalar(ExactScalar(mpq_class(2, 7), mpq_class(-1, 3))),
                     Scalar::rational(-2, 9) * sqrtq(1, 2)};
  for (const Scalar& a : values) {
    for (const Scalar& b : values) {
      Scalar back = (a / b) * b;
      CHECK(back.exact());
      CHECK(back == a);
    }
  }
}

TEST_CASE("inexactness is monotone") {
  Scalar tainted = sqrtq(2, 1) + sqrtq(3, 1);
  REQUIRE_FALSE(tainted.exact());
  CHECK_FALSE((tainted * Scalar::integer(0)).exact());
  CHECK_FALSE((tainted + Scalar::integer(1)).exact());
  CHECK_FALSE(tainted.conj().exact());
  CHECK_FALSE(tainted.abs_sq().exact());
}

TEST_CASE("norm guard bands") {
  CHECK(classify_norm(Scalar()) == ZeroClass::Zero);
  CHECK(classify_norm(Scalar::rational(1, 1000000)) == ZeroClass::NonZero);
  CHECK(classify_norm(Scalar::approx(1e-30)) == ZeroClass::Zero);
  CHECK(classify_norm(Scalar::approx(1e-18)) == ZeroClass::Ambiguous);
  CHECK(classify_norm(Scalar::approx(1e-6)) == ZeroClass::NonZero);
}

TEST_CASE("conjugation and to_string") {
  ExactScalar v(mpq_class(1, 2), mpq_class(1, 3));
  CHECK(v.conj().imag_part() == mpq_class(-1, 3));
  CHECK(ExactScalar::sqrt_rational(mpq_class(3)).to_string() == "1*sqrt(3)");
  CHECK(ExactScalar().to_string() == "0");
}

#include <doctest.h>

#include "mskit/scalar.hpp"

using namespace mskit;

TEST_CASE("rational arithmetic normalizes and compares exactly") {
  Rational a(1, 2), b(1, 3);
  CHECK((a + b) == Rational(5, 6));
  CHECK((a - b) == Rational(1, 6));
  CHECK((a * b) == Rational(1, 6));
  CHECK((a / b) == Rational(3, 2));
  CHECK(Rational(-4, -8) == Rational(1, 2));
  CHECK(Rational(4, -8) == Rational(-1, 2));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(-7, 3).floor() == -3);
  CHECK(Rational(7, 3).floor() == 2);
  CHECK(Rational(6, 3).floor() == 2);
  CHECK(Rational(1, 3).str() == "1/3");
  CHECK(Rational(-2).str() == "-2");
}

TEST_CASE("rational division by zero and overflow throw") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  Rational huge(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(huge * huge, std::overflow_error);
}

TEST_CASE("scalar parsing") {
  CHECK(Scalar::parse("3/5").rat() == Rational(3, 5));
  CHECK(Scalar::parse("-1/2").rat() == Rational(-1, 2));
  CHECK(Scalar::parse("7").rat() == Rational(7));
  CHECK(Scalar::parse("inf").is_inf());
  CHECK(Scalar::parse("0.25").is_real());
  CHECK(Scalar::parse("0.25").to_double() == doctest::Approx(0.25));
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Scalar::parse("abc"), std::exception);
}

TEST_CASE("rational scalars compare without tolerance, reals with it") {
  Scalar exact = Scalar::ratio(1, 3);
  Scalar close(1.0 / 3.0 + 1e-12);
  bool fuzzy = false;
  CHECK(Scalar::compare(exact, exact, &fuzzy) == Ord::Equal);
  CHECK_FALSE(fuzzy);
  CHECK(Scalar::compare(close, exact, &fuzzy) == Ord::Equal);
  CHECK(fuzzy);
  Scalar off(1.0 / 3.0 + 1e-6);
  CHECK(Scalar::compare(off, exact) == Ord::Greater);
  // Exact rationals distinguish arbitrarily close values.
  CHECK(Scalar::compare(Scalar::ratio(1000000000, 3000000001), exact) == Ord::Less);
}

TEST_CASE("scalar infinity arithmetic") {
  Scalar inf = Scalar::infinity();
  CHECK(inf.is_inf());
  CHECK((Scalar(1) / inf).is_zero());
  CHECK(inf > Scalar(1000000));
  CHECK(Scalar::min(inf, Scalar(2)) == Scalar(2));
  CHECK(inf.reciprocal().is_zero());
}

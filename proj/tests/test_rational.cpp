#include <doctest.h>

#include "brouwer1d/rational.hpp"
#include "test_support.hpp"

using namespace brouwer1d;
using brouwer1d::testing::Rng;

namespace {

// Rebuilding from the stored parts must not change anything.
bool is_canonical(const Rational& r) {
  Rational again(r.numerator(), r.denominator());
  return again.numerator() == r.numerator() && again.denominator() == r.denominator() &&
         r.denominator() > 0;
}

}  // namespace

TEST_CASE("normalize") {
  Rational half(2, 4);
  CHECK(half.numerator() == 1);
  CHECK(half.denominator() == 2);

  Rational neg(3, -6);
  CHECK(neg.numerator() == -1);
  CHECK(neg.denominator() == 2);

  Rational zero(0, 7);
  CHECK(zero.numerator() == 0);
  CHECK(zero.denominator() == 1);

  CHECK_THROWS_AS(Rational(1, 0), InvalidInput);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(7, 5) * Rational(7, 5) == Rational(49, 25));
  CHECK(Rational(1, 2) - Rational(3, 4) == Rational(-1, 4));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), ArithmeticError);

  Rational x(3, 5);
  x /= x;
  CHECK(x == Rational(1));
}

TEST_CASE("cmp") {
  CHECK(cmp(Rational(1, 2), Rational(2, 3)) == Ordering::less);
  CHECK(cmp(Rational(3, 6), Rational(1, 2)) == Ordering::equal);
  CHECK(cmp(Rational(-1, 2), Rational(-2, 3)) == Ordering::greater);
  CHECK(Rational(-1, 2) > Rational(-2, 3));
}

TEST_CASE("cmp_sqrt2") {
  CHECK(cmp_sqrt2(Rational(7, 5)) == Sqrt2Side::below);
  CHECK(cmp_sqrt2(Rational(3, 2)) == Sqrt2Side::above);
  CHECK(cmp_sqrt2(Rational(1)) == Sqrt2Side::below);
  // Convergents of sqrt(2) alternate sides and get very close.
  CHECK(cmp_sqrt2(Rational(BigInt("665857"), BigInt("470832"))) == Sqrt2Side::above);
  CHECK(cmp_sqrt2(Rational(BigInt("1393"), BigInt("985"))) == Sqrt2Side::below);
  CHECK_THROWS_AS(cmp_sqrt2(Rational(0)), InvalidInput);
  CHECK_THROWS_AS(cmp_sqrt2(Rational(-3, 2)), InvalidInput);
}

TEST_CASE("literal parsing") {
  CHECK(Rational::parse("-3/7") == Rational(-3, 7));
  CHECK(Rational::parse("2") == Rational(2));
  CHECK(Rational::parse("+6/4") == Rational(3, 2));
  CHECK(Rational::parse("123456789012345678901234567890").numerator() ==
        BigInt("123456789012345678901234567890"));
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1 /2", " 1", "1.5", "--1", "1/-2", "x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), InvalidInput);
  }
  CHECK(Rational(-3, 7).to_string() == "-3/7");
  CHECK(Rational(4, 2).to_string() == "2");
}

TEST_CASE("decimal rendering truncates toward zero") {
  CHECK(Rational(1, 3).to_decimal(12) == "0.333333333333");
  CHECK(Rational(2, 3).to_decimal(4) == "0.6666");
  CHECK(Rational(-2, 3).to_decimal(4) == "-0.6666");
  CHECK(Rational(-1, 3000).to_decimal(3) == "-0.000");
  CHECK(Rational(7, 2).to_decimal(0) == "3");
  CHECK(Rational(-5, 4).to_decimal(2) == "-1.25");
}

TEST_CASE("floor") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(4).floor() == 4);
}

TEST_CASE("field axioms and canonical form on random triples") {
  Rng rng(20261016);
  for (int trial = 0; trial < 2000; ++trial) {
    const Rational a = brouwer1d::testing::random_rational(rng);
    const Rational b = brouwer1d::testing::random_rational(rng);
    const Rational c = brouwer1d::testing::random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Rational(0));
    if (!a.is_zero()) CHECK(a * (Rational(1) / a) == Rational(1));
    for (const Rational& r : {a + b, a - b, a * b, b.is_zero() ? a : a / b}) {
      CHECK(is_canonical(r));
    }
  }
}

TEST_CASE("total order on random triples") {
  Rng rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const Rational a = brouwer1d::testing::random_rational(rng, 20, 20);
    const Rational b = brouwer1d::testing::random_rational(rng, 20, 20);
    const Rational c = brouwer1d::testing::random_rational(rng, 20, 20);
    if (a <= b && b <= a) CHECK(a == b);
    if (a <= b && b <= c) CHECK(a <= c);
    CHECK(((a < b) + (a == b) + (a > b)) == 1);
    CHECK((cmp(a, b) == Ordering::less) == (a < b));
  }
}

TEST_CASE("cmp_sqrt2 agrees with squaring") {
  Rng rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const Rational x = brouwer1d::testing::random_positive(rng, 5000, 3000);
    CHECK((cmp_sqrt2(x) == Sqrt2Side::below) == (cmp(x * x, Rational(2)) == Ordering::less));
  }
}

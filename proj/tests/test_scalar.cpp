#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wdtangent/scalar.hpp"

using namespace wdt;

TEST_CASE("rational construction and canonical form") {
  Scalar a(Rational(6, 4));
  CHECK(a == Scalar(Rational(3, 2)));
  CHECK(a.is_rational());
  CHECK(a.d_tag() == 1);
  CHECK(Scalar(0).is_zero());
}

TEST_CASE("surd arithmetic stays in the tagged field") {
  Scalar r = Scalar::surd(0, 1, 2);  // sqrt(2)
  CHECK((r * r) == Scalar(2));
  CHECK((r * r).is_rational());  // collapses back to d = 1
  Scalar x = Scalar::surd(Rational(1, 2), Rational(3), 2);
  Scalar y = Scalar::surd(Rational(-1), Rational(1, 3), 2);
  CHECK((x + y).d_tag() == 2);
  CHECK((x * y).d_tag() == 2);
  CHECK((x - x).is_zero());
}

TEST_CASE("mixing distinct d-tags is an error") {
  Scalar r2 = Scalar::surd(0, 1, 2);
  Scalar r3 = Scalar::surd(0, 1, 3);
  CHECK_THROWS_AS(r2 + r3, std::invalid_argument);
  CHECK_THROWS_AS(r2 * r3, std::invalid_argument);
  CHECK_NOTHROW(r2 + Scalar(5));  // rationals embed everywhere
}

TEST_CASE("d-tag must be squarefree") {
  CHECK_THROWS_AS(Scalar::surd(0, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::surd(0, 1, 12), std::invalid_argument);
}

TEST_CASE("field axioms on randomized inputs") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  auto rand_scalar = [&](long d) {
    return Scalar::surd(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), d);
  };
  for (int t = 0; t < 200; ++t) {
    Scalar x = rand_scalar(5), y = rand_scalar(5), z = rand_scalar(5);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
  }
}

TEST_CASE("sqrt_power") {
  CHECK(sqrt_power(2, 2) == Scalar(2));
  CHECK(sqrt_power(2, 1) == Scalar::surd(0, 1, 2));
  CHECK(sqrt_power(3, 3) == Scalar::surd(0, 3, 3));
  CHECK_THROWS_AS(sqrt_power(6, 1), std::invalid_argument);
  for (long p : {2L, 3L, 5L, 7L})
    for (long f = 1; f <= 6; ++f) {
      Scalar s = sqrt_power(p, f);
      CHECK(s * s == Scalar(Rational(p)).pow(f));
    }
}

TEST_CASE("scalar integer powers including negative") {
  Scalar s = Scalar::surd(0, 1, 2);
  CHECK(s.pow(4) == Scalar(4));
  CHECK(s.pow(-2) == Scalar(Rational(1, 2)));
  CHECK(Scalar(Rational(3, 2)).pow(-1) == Scalar(Rational(2, 3)));
  CHECK(Scalar(7).pow(0) == Scalar(1));
}

TEST_CASE("cyclotomic_bound") {
  CHECK(cyclotomic_bound(1) == 2);
  CHECK(cyclotomic_bound(3) == 12);
  CHECK(cyclotomic_bound(4) == 120);
  long prev = 0;
  for (long g = 1; g <= 12; ++g) {
    long b = cyclotomic_bound(g);
    CHECK(b >= prev);  // monotone
    prev = b;
  }
}

TEST_CASE("scalar string roundtrip") {
  auto rt = [](const Scalar& s, long d) {
    return Scalar::from_string(s.to_string(), d) == s;
  };
  CHECK(rt(Scalar(5), 1));
  CHECK(rt(Scalar(Rational(-7, 3)), 1));
  CHECK(rt(Scalar::surd(Rational(1, 2), Rational(3, 4), 2), 2));
  CHECK(rt(Scalar::surd(Rational(-1), Rational(-2, 5), 3), 3));
  CHECK(rt(Scalar::surd(0, 1, 2), 2));
  CHECK(rt(Scalar::surd(0, -1, 2), 2));
  CHECK(Scalar::from_string("1/2+3/4*r", 2) ==
        Scalar::surd(Rational(1, 2), Rational(3, 4), 2));
  CHECK(Scalar::from_string("-r", 7) == Scalar::surd(0, -1, 7));
  CHECK(Scalar::from_string(" 2 / 4 ", 1) == Scalar(Rational(1, 2)));
  CHECK_THROWS_AS(Scalar::from_string("", 1), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::from_string("x", 1), std::invalid_argument);
}

TEST_CASE("poly arithmetic, gcd, unity detection") {
  Poly x2p1({Scalar(1), Scalar(1), Scalar(1)});  // X^2 + X + 1
  CHECK(gcd_with_unity(x2p1, 12) == x2p1.monic());
  Poly xm1({Scalar(-1), Scalar(1)});
  CHECK(gcd_with_unity(xm1, 2) == xm1.monic());
  Poly xm2({Scalar(-2), Scalar(1)});
  CHECK(gcd_with_unity(xm2, 120).degree() == 0);
  CHECK_THROWS_AS(gcd_with_unity(Poly(), 2), std::invalid_argument);

  Poly prod = x2p1 * xm2;
  CHECK(prod.degree() == 3);
  CHECK(poly_gcd(prod, x2p1) == x2p1.monic());
  CHECK(prod.rem(x2p1).is_zero());
  CHECK(prod.eval(Scalar(2)).is_zero());
}

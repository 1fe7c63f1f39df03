#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "liecx/rational.hpp"

using liecx::Rational;

TEST_CASE("canonical form and string round trip") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(6, 3).str() == "2");

  CHECK(Rational::parse("3/4")->str() == "3/4");
  CHECK(Rational::parse("-3/4")->str() == "-3/4");
  CHECK(Rational::parse("12").value() == Rational(12));
  CHECK(Rational::parse("6/4")->str() == "3/2");
  CHECK(!Rational::parse(""));
  CHECK(!Rational::parse("1/0"));
  CHECK(!Rational::parse("a/b"));
  CHECK(!Rational::parse("1.5"));
  CHECK(!Rational::parse("1/-2"));
}

TEST_CASE("arithmetic") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b).str() == "1/2");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/18");
  CHECK((a / b).str() == "2");
  CHECK((-a).str() == "-1/3");
  CHECK(a > b);
  CHECK_THROWS_AS(a / Rational(0), liecx::InvalidInput);
}

TEST_CASE("continued-fraction rounding recovers simple rationals") {
  CHECK(Rational::from_double(1.0 / 3.0, 100).value() == Rational(1, 3));
  CHECK(Rational::from_double(-2.5, 10).value() == Rational(-5, 2));
  CHECK(Rational::from_double(0.0, 10).value() == Rational(0));
  // best approximation of pi below denominator 1000
  CHECK(Rational::from_double(M_PI, 1000).value() == Rational(355, 113));
  // values a hair away from an integer snap back to it
  CHECK(Rational::from_double(1.0 - 6.9e-9, 1000000).value() == Rational(1));
  CHECK(!Rational::from_double(std::nan(""), 10));
  CHECK(!Rational::from_double(INFINITY, 10));
}

TEST_CASE("continued-fraction rounding is the nearest rational (brute force)") {
  // oracle: enumerate every p/q with q <= max_den around x
  auto brute = [](double x, long max_den) {
    double best = 1e300;
    long bp = 0, bq = 1;
    for (long q = 1; q <= max_den; ++q) {
      long p = std::lround(x * q);
      double diff = std::abs(x - double(p) / double(q));
      if (diff < best - 1e-18) {
        best = diff;
        bp = p;
        bq = q;
      }
    }
    return Rational(bp, bq);
  };
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    double x = -8.0 + 16.0 * ((rng() >> 11) * 0x1.0p-53);
    long max_den = 1 + static_cast<long>(rng() % 40);
    Rational got = Rational::from_double(x, max_den).value();
    Rational want = brute(x, max_den);
    CHECK(std::abs(got.to_double() - x) <= std::abs(want.to_double() - x) + 1e-15);
    CHECK(got.den() <= max_den);
  }
}

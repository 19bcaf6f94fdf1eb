#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heatframe/rational.hpp"

using namespace heatframe;

TEST_CASE("bigint basics") {
  CHECK(BigInt(0).is_zero());
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-1).to_string() == "-1");
  CHECK(BigInt(1234567890123456789LL).to_string() == "1234567890123456789");
  CHECK((BigInt(2) + BigInt(-5)).to_string() == "-3");
  CHECK((BigInt(-7) * BigInt(-6)).to_string() == "42");
  CHECK(BigInt::from_string("-00042").to_longlong() == -42);
}

TEST_CASE("bigint multi-limb arithmetic") {
  // 2^64 * 2^64 = 2^128
  BigInt p64 = BigInt::from_string("18446744073709551616");
  BigInt p128 = p64 * p64;
  CHECK(p128.to_string() == "340282366920938463463374607431768211456");
  CHECK((p128 / p64) == p64);
  CHECK((p128 % p64).is_zero());
  CHECK((p128 - BigInt(1)).to_string() == "340282366920938463463374607431768211455");

  BigInt q, r;
  BigInt::divmod(p128 + BigInt(12345), p64, q, r);
  CHECK(q == p64);
  CHECK(r == BigInt(12345));
}

TEST_CASE("bigint divmod sign and magnitude invariants") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long long> d(-1000000, 1000000);
  for (int i = 0; i < 2000; ++i) {
    BigInt a = BigInt(d(rng)) * BigInt(d(rng)) + BigInt(d(rng));
    BigInt b = BigInt(d(rng));
    if (b.is_zero()) continue;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    if (!r.is_zero()) CHECK(r.is_negative() == a.is_negative());
  }
}

TEST_CASE("gcd") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(0), BigInt(-5)) == BigInt(5));
  CHECK(BigInt::gcd(BigInt(17), BigInt(13)) == BigInt(1));
}

TEST_CASE("rational normal form") {
  CHECK(Rational(2, 4).to_string() == "1/2");
  CHECK(Rational(-2, -4).to_string() == "1/2");
  CHECK(Rational(2, -4).to_string() == "-1/2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational(0, 5).den().is_one());
  CHECK(Rational::from_string("-4/6") == Rational(-2, 3));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational field axioms, randomized") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 30);
  auto rnd = [&] { return Rational(num(rng), den(rng)); };
  for (int i = 0; i < 2000; ++i) {
    Rational a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    CHECK(Rational::from_string(a.to_string()) == a);
  }
}

TEST_CASE("rational comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 7).is_one());
}

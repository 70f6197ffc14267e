#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "fibsum/qsqrt5.hpp"
#include "fibsum/rational.hpp"
#include "fibsum/rng.hpp"

using namespace fibsum;

namespace {

Rational random_rational(SplitMix64& rng) {
  return Rational(rng.uniform(-20, 20), rng.uniform(1, 20));
}

QSqrt5 random_element(SplitMix64& rng) {
  return {random_rational(rng), random_rational(rng)};
}

bool canonical(const Rational& x) {
  if (x.den() <= 0) return false;
  Int g;
  mpz_gcd(g.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return g == 1;
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 6) / Rational(1, 2) == Rational(1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7).str() == "0/1");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(7).str() == "7/1");
}

TEST_CASE("rational identity and inverse cases") {
  SplitMix64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    Rational x = random_rational(rng);
    CHECK(x + Rational(0) == x);
    CHECK(x * Rational(1) == x);
    CHECK(x - x == Rational(0));
    if (!x.is_zero()) CHECK(x / x == Rational(1));
  }
}

TEST_CASE("rational results stay canonical") {
  SplitMix64 rng(7);
  for (int i = 0; i < 20000; ++i) {
    Rational x = random_rational(rng);
    Rational y = random_rational(rng);
    CHECK(canonical(x + y));
    CHECK(canonical(x - y));
    CHECK(canonical(x * y));
    if (!y.is_zero()) CHECK(canonical(x / y));
  }
}

TEST_CASE("rational division by zero is an error") {
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);
  CHECK_THROWS_AS(rational_pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("integer power helpers") {
  CHECK(int_pow(Int(3), 4) == 81);
  CHECK(int_pow(Int(-2), 3) == -8);
  CHECK(int_pow(Int(0), 0) == 1);
  CHECK_THROWS_AS(int_pow(Int(2), -1), std::domain_error);
  CHECK(parity_sign(0) == 1);
  CHECK(parity_sign(-3) == -1);
  CHECK(parity_sign(-4) == 1);
  CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(rational_pow(Rational(-1, 2), 3) == Rational(-1, 8));
}

TEST_CASE("alpha and beta satisfy the characteristic relations") {
  CHECK(alpha() == QSqrt5(Rational(1, 2), Rational(1, 2)));
  CHECK(beta() == QSqrt5(Rational(1, 2), Rational(-1, 2)));
  CHECK(alpha() + beta() == QSqrt5(Rational(1)));
  CHECK(alpha() * beta() == QSqrt5(Rational(-1)));
  CHECK(alpha() - beta() == sqrt5());
  // alpha^2 = alpha + 1
  CHECK(pow(alpha(), 2) == QSqrt5(Rational(3, 2), Rational(1, 2)));
  CHECK(pow(alpha(), 1) == alpha());
  CHECK(pow(alpha(), 0) == QSqrt5(Rational(1)));
  CHECK(pow(alpha(), -1) == -beta());  // 1/alpha = -beta
}

TEST_CASE("conjugation kills the sqrt5 coefficient") {
  SplitMix64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    QSqrt5 x = random_element(rng);
    QSqrt5 prod = x * x.conj();
    CHECK(prod.b == Rational(0));
    CHECK(prod.a == x.norm());
  }
}

TEST_CASE("field laws on random elements") {
  SplitMix64 rng(123);
  for (int i = 0; i < 10000; ++i) {
    QSqrt5 x = random_element(rng);
    QSqrt5 y = random_element(rng);
    QSqrt5 z = random_element(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x * x.inverse() == QSqrt5(Rational(1)));
  }
}

TEST_CASE("power addition law") {
  SplitMix64 rng(99);
  for (int i = 0; i < 1500; ++i) {
    QSqrt5 x = random_element(rng);
    if (x.is_zero()) continue;
    long long m = rng.uniform(-64, 64);
    long long n = rng.uniform(-64, 64);
    CHECK(pow(x, m + n) == pow(x, m) * pow(x, n));
  }
}

TEST_CASE("negative power of a non-invertible element is an error") {
  QSqrt5 zero;
  CHECK_THROWS_AS(pow(zero, -1), std::domain_error);
  CHECK_THROWS_AS(zero.inverse(), std::domain_error);
  CHECK(pow(zero, 2) == zero);
  CHECK(pow(zero, 0) == QSqrt5(Rational(1)));
}

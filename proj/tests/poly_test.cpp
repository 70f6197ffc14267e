#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "fibsum/poly.hpp"
#include "fibsum/rng.hpp"

using namespace fibsum;

namespace {

Poly one_plus_x() { return Poly(Rational(1)) + Poly::monomial(1, Rational(1)); }

Poly random_poly(SplitMix64& rng, long long max_degree) {
  Poly p;
  long long degree = rng.uniform(0, max_degree);
  for (long long i = 0; i <= degree; ++i)
    p = p + Poly::monomial(static_cast<std::size_t>(i), Rational(rng.uniform(-9, 9), rng.uniform(1, 9)));
  return p;
}

}  // namespace

TEST_CASE("canonical form and basic algebra") {
  Poly zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(Poly(Rational(0)).is_zero());

  Poly p = one_plus_x();
  CHECK(p + zero == p);
  CHECK(p - p == zero);
  CHECK(p * zero == zero);

  Poly square = p * p;  // 1 + 2x + x^2
  CHECK(square.degree() == 2);
  CHECK(square.coeff(0) == Rational(1));
  CHECK(square.coeff(1) == Rational(2));
  CHECK(square.coeff(2) == Rational(1));
  CHECK(square == p.pow(2));

  CHECK(p.scale(Rational(1, 2)).coeff(0) == Rational(1, 2));
  CHECK(p.scale(Rational(1, 2)).coeff(1) == Rational(1, 2));
  CHECK(Poly::monomial(1, Rational(1)).pow(3) == Poly::monomial(3, Rational(1)));
  CHECK(p.pow(0) == Poly(Rational(1)));
}

TEST_CASE("cancellation strips trailing zeros") {
  Poly x2 = Poly::monomial(2, Rational(1));
  Poly p = x2 + one_plus_x();
  Poly q = p - x2;
  CHECK(q.degree() == 1);
  CHECK(q == one_plus_x());
}

TEST_CASE("evaluation matches expansion") {
  Poly p = one_plus_x().pow(5);
  Rational x(3, 7);
  CHECK(p.eval(x) == rational_pow(Rational(10, 7), 5));
  CHECK(Poly().eval(x) == Rational(0));
}

TEST_CASE("multiplication is commutative and associative on random triples") {
  SplitMix64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    Poly a = random_poly(rng, 16);
    Poly b = random_poly(rng, 16);
    Poly c = random_poly(rng, 16);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("identity sides at n = 0 reduce to the hand-expanded forms") {
  CHECK(poly_identity_sum(PolyIdentity::dat1, 0) == Poly::monomial(1, Rational(1)));
  CHECK(poly_identity_closed(PolyIdentity::dat1, 0) == Poly::monomial(1, Rational(1)));
  CHECK(poly_identity_sum(PolyIdentity::dat3, 0) == Poly::monomial(2, Rational(1, 2)));
  CHECK(poly_identity_closed(PolyIdentity::dat3, 0) == Poly::monomial(2, Rational(1, 2)));
  CHECK(poly_identity_sum(PolyIdentity::rel4, 0) == Poly(Rational(1, 2)));
  CHECK(poly_identity_closed(PolyIdentity::rel4, 0) == Poly(Rational(1, 2)));
}

TEST_CASE("all four identities hold as whole polynomials up to n = 64") {
  for (auto which : {PolyIdentity::dat1, PolyIdentity::dat2, PolyIdentity::dat3,
                     PolyIdentity::rel4}) {
    for (long long n = 0; n <= 64; ++n) CHECK(check_dattoli(which, n));
  }
}

TEST_CASE("scalar substitution agrees with the polynomial verdict") {
  SplitMix64 rng(77);
  for (auto which : {PolyIdentity::dat1, PolyIdentity::dat2, PolyIdentity::dat3,
                     PolyIdentity::rel4}) {
    for (int i = 0; i < 40; ++i) {
      long long n = rng.uniform(0, 32);
      Rational x0(rng.uniform(-50, 50), rng.uniform(1, 50));
      bool equal_as_polys = check_dattoli(which, n);
      CHECK(equal_as_polys);
      CHECK(poly_identity_sum(which, n).eval(x0) == poly_identity_closed(which, n).eval(x0));
    }
  }
}

TEST_CASE("n bound is enforced") {
  CHECK_THROWS_AS(check_dattoli(PolyIdentity::dat1, -1), std::domain_error);
  CHECK_THROWS_AS(check_dattoli(PolyIdentity::dat2, kMaxPolyIdentityN + 1), std::domain_error);
  CHECK(check_dattoli(PolyIdentity::dat1, 0));
}

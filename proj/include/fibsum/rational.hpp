#pragma once

/**
 * @file rational.hpp
 * @brief Exact signed rational arithmetic on arbitrary-precision integers.
 *
 * Every value flowing through the identity evaluators is a `Rational`.
 * Invariants, enforced on construction and preserved by every operation:
 *
 *  - denominator is strictly positive (sign lives in the numerator),
 *  - gcd(|num|, den) == 1, with zero represented as 0/1,
 *  - no operation ever rounds; division by zero throws.
 *
 * Canonical form makes equality a structural comparison, which the whole
 * verifier relies on. GMP supplies the digit arithmetic underneath; there is
 * no floating-point type anywhere in this project.
 */

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace fibsum {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

/// Builds an Int from a machine integer (gmpxx has no long long overloads).
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

/// (-1)^e for an exponent of either sign, reduced by parity.
inline int parity_sign(long long e) { return e % 2 == 0 ? 1 : -1; }

/// base^e for e >= 0. A negative exponent here is a transcription bug.
inline Int int_pow(const Int& base, long long e) {
  if (e < 0) throw std::domain_error("int_pow: negative exponent " + std::to_string(e));
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(const Int& n) : v_(n) {}
  Rational(long long n) : v_(make_int(n)) {}

  Rational(const Int& num, const Int& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(long long num, long long den) : Rational(make_int(num), make_int(den)) {}

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }

  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.v_), Canonical{}); }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.v_ + y.v_), Canonical{});
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.v_ - y.v_), Canonical{});
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.v_ * y.v_), Canonical{});
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(x.v_ / y.v_), Canonical{});
  }

  Rational& operator+=(const Rational& x) { v_ += x.v_; return *this; }
  Rational& operator-=(const Rational& x) { v_ -= x.v_; return *this; }
  Rational& operator*=(const Rational& x) { v_ *= x.v_; return *this; }
  Rational& operator/=(const Rational& x) { return *this = *this / x; }

  friend bool operator==(const Rational& x, const Rational& y) { return mpq_equal(x.v_.get_mpq_t(), y.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) { return mpq_cmp(x.v_.get_mpq_t(), y.v_.get_mpq_t()) < 0; }

  /// Canonical "num/den" rendering, e.g. "-3/2", "0/1", "7/1".
  std::string str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

 private:
  // mpq_class arithmetic keeps results canonical as long as the operands are.
  struct Canonical {};
  Rational(mpq_class v, Canonical) : v_(std::move(v)) {}

  mpq_class v_;
};

/// base^e with any signed e; negative exponents invert exactly (base != 0).
inline Rational rational_pow(const Rational& base, long long e) {
  if (e < 0) {
    if (base.is_zero()) throw std::domain_error("rational_pow: negative power of zero");
    return Rational(int_pow(base.den(), -e), int_pow(base.num(), -e));
  }
  return Rational(int_pow(base.num(), e), int_pow(base.den(), e));
}

}  // namespace fibsum

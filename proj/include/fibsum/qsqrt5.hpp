#pragma once

/**
 * @file qsqrt5.hpp
 * @brief Exact arithmetic in the quadratic field Q(sqrt 5).
 *
 * An element is a + b*sqrt(5) with rational a, b, stored canonically, so
 * equality is structural. The field houses the golden section
 * alpha = (1+sqrt5)/2 and its conjugate beta = (1-sqrt5)/2 = -1/alpha, whose
 * exact integer powers drive the Binet-form and lemma checks.
 */

#include <stdexcept>

#include "fibsum/rational.hpp"

namespace fibsum {

struct QSqrt5 {
  Rational a;  ///< rational part
  Rational b;  ///< coefficient of sqrt(5)

  QSqrt5() = default;
  QSqrt5(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}
  explicit QSqrt5(const Rational& r) : a(r), b(0) {}

  QSqrt5 conj() const { return {a, -b}; }

  /// x * conj(x); rational because the sqrt(5) coefficient cancels.
  Rational norm() const { return a * a - Rational(5) * b * b; }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool invertible() const { return !norm().is_zero(); }

  QSqrt5 inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("QSqrt5: element is not invertible");
    return {a / n, -b / n};
  }

  friend QSqrt5 operator-(const QSqrt5& x) { return {-x.a, -x.b}; }
  friend QSqrt5 operator+(const QSqrt5& x, const QSqrt5& y) { return {x.a + y.a, x.b + y.b}; }
  friend QSqrt5 operator-(const QSqrt5& x, const QSqrt5& y) { return {x.a - y.a, x.b - y.b}; }

  // (a+b*sqrt5)(c+d*sqrt5) = (ac+5bd) + (ad+bc)*sqrt5
  friend QSqrt5 operator*(const QSqrt5& x, const QSqrt5& y) {
    return {x.a * y.a + Rational(5) * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend QSqrt5 operator/(const QSqrt5& x, const QSqrt5& y) { return x * y.inverse(); }

  friend bool operator==(const QSqrt5& x, const QSqrt5& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const QSqrt5& x, const QSqrt5& y) { return !(x == y); }

  friend std::ostream& operator<<(std::ostream& os, const QSqrt5& x) {
    return os << x.a << " + " << x.b << "*sqrt5";
  }
};

inline QSqrt5 alpha() { return {Rational(1, 2), Rational(1, 2)}; }
inline QSqrt5 beta() { return {Rational(1, 2), Rational(-1, 2)}; }
inline QSqrt5 sqrt5() { return {Rational(0), Rational(1)}; }

/// base^e by square-and-multiply; e < 0 uses the exact inverse.
inline QSqrt5 pow(const QSqrt5& base, long long e) {
  if (e < 0) return pow(base.inverse(), -e);
  QSqrt5 acc(Rational(1));
  QSqrt5 sq = base;
  for (unsigned long long m = static_cast<unsigned long long>(e); m != 0; m >>= 1) {
    if (m & 1) acc = acc * sq;
    if (m > 1) sq = sq * sq;
  }
  return acc;
}

}  // namespace fibsum

#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over Rational, plus the four
 *        binomial-transform identities verified as exact polynomial
 *        equalities in x for each fixed n.
 *
 * Canonical form strips trailing zero coefficients; the zero polynomial is
 * the empty coefficient vector, so equality is plain coefficient comparison.
 * Degrees stay tiny (<= n+2), hence the dense representation.
 */

#include <cstddef>
#include <vector>

#include "fibsum/rational.hpp"

namespace fibsum {

class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational constant);

  /// c * x^degree
  static Poly monomial(std::size_t degree, Rational c);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1 by convention.
  long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
  /// Coefficient of x^i (zero beyond the degree).
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  Poly scale(const Rational& c) const;
  Poly pow(unsigned long long e) const;
  Rational eval(const Rational& x) const;

  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend bool operator==(const Poly& p, const Poly& q) { return p.coeffs_ == q.coeffs_; }
  friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

 private:
  void strip();

  std::vector<Rational> coeffs_;  // coeffs_[i] multiplies x^i
};

/// The four verified polynomial identities. `sum` is the binomial sum side,
/// `closed` the printed right-hand side (for rel4 that is a second sum).
enum class PolyIdentity { dat1, dat2, dat3, rel4 };

inline constexpr long long kMaxPolyIdentityN = 256;

Poly poly_identity_sum(PolyIdentity which, long long n);
Poly poly_identity_closed(PolyIdentity which, long long n);

/// Exact whole-polynomial equality of the two sides; 0 <= n <= 256.
bool check_dattoli(PolyIdentity which, long long n);

}  // namespace fibsum

#include "fibsum/poly.hpp"

#include <stdexcept>
#include <string>

#include "fibsum/sequences.hpp"

namespace fibsum {

Poly::Poly(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly Poly::monomial(std::size_t degree, Rational c) {
  Poly p;
  if (!c.is_zero()) {
    p.coeffs_.assign(degree + 1, Rational(0));
    p.coeffs_[degree] = std::move(c);
  }
  return p;
}

void Poly::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly operator+(const Poly& p, const Poly& q) {
  Poly r;
  r.coeffs_.resize(std::max(p.coeffs_.size(), q.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) r.coeffs_[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) r.coeffs_[i] += q.coeffs_[i];
  r.strip();
  return r;
}

Poly operator-(const Poly& p, const Poly& q) { return p + q.scale(Rational(-1)); }

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  Poly r;
  r.coeffs_.assign(p.coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
      r.coeffs_[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  r.strip();
  return r;
}

Poly Poly::scale(const Rational& c) const {
  if (c.is_zero()) return Poly();
  Poly r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& a : coeffs_) r.coeffs_.push_back(a * c);
  return r;  // c != 0 keeps the leading coefficient nonzero
}

Poly Poly::pow(unsigned long long e) const {
  Poly acc(Rational(1));
  Poly sq = *this;
  for (; e != 0; e >>= 1) {
    if (e & 1) acc = acc * sq;
    if (e > 1) sq = sq * sq;
  }
  return acc;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

namespace {

void require_identity_n(long long n) {
  if (n < 0 || n > kMaxPolyIdentityN)
    throw std::domain_error("polynomial identity: n out of range: " + std::to_string(n));
}

// (1+x)^j for j = 0..max, built incrementally.
std::vector<Poly> one_plus_x_powers(long long max) {
  Poly base = Poly(Rational(1)) + Poly::monomial(1, Rational(1));
  std::vector<Poly> pows;
  pows.reserve(static_cast<std::size_t>(max) + 1);
  pows.emplace_back(Rational(1));
  for (long long j = 1; j <= max; ++j) pows.push_back(pows.back() * base);
  return pows;
}

}  // namespace

Poly poly_identity_sum(PolyIdentity which, long long n) {
  require_identity_n(n);
  auto pows = one_plus_x_powers(n);
  Poly acc;
  for (long long k = 0; k <= n; ++k) {
    Int num = binomial(n, k) * parity_sign(k);
    long long shift = 0;
    long long den = 1;
    switch (which) {
      case PolyIdentity::dat1: shift = k + 1; den = k + 1; break;
      case PolyIdentity::dat2: shift = k + 2; den = k + 2; break;
      case PolyIdentity::dat3: shift = k + 2; den = (k + 1) * (k + 2); break;
      case PolyIdentity::rel4: shift = k;     den = k + 2; break;
    }
    acc = acc + Poly::monomial(static_cast<std::size_t>(shift), Rational(num, make_int(den)))
              * pows[static_cast<std::size_t>(n - k)];
  }
  return acc;
}

Poly poly_identity_closed(PolyIdentity which, long long n) {
  require_identity_n(n);
  Poly one(Rational(1));
  Poly x = Poly::monomial(1, Rational(1));
  Poly onepx = one + x;
  switch (which) {
    case PolyIdentity::dat1:
      return (onepx.pow(static_cast<unsigned long long>(n) + 1) - one).scale(Rational(1, n + 1));
    case PolyIdentity::dat2:
      return (onepx.pow(static_cast<unsigned long long>(n) + 2) - x.scale(Rational(n + 2)) - one)
          .scale(Rational(1, (n + 1) * (n + 2)));
    case PolyIdentity::dat3: {
      Poly pn1 = onepx.pow(static_cast<unsigned long long>(n) + 1);
      return (x.scale(Rational(n + 1)) * pn1 - pn1 + one).scale(Rational(1, (n + 1) * (n + 2)));
    }
    case PolyIdentity::rel4: {
      Poly acc;
      for (long long k = 0; k <= n; ++k)
        acc = acc + Poly::monomial(static_cast<std::size_t>(k),
                                   Rational(binomial(n, k), make_int((k + 1) * (k + 2))));
      return acc;
    }
  }
  throw std::logic_error("poly_identity_closed: unreachable");
}

bool check_dattoli(PolyIdentity which, long long n) {
  return poly_identity_sum(which, n) == poly_identity_closed(which, n);
}

}  // namespace fibsum

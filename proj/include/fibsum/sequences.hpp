#pragma once

/**
 * @file sequences.hpp
 * @brief Fibonacci and Lucas numbers over all integer indices, binomial
 *        coefficients, and the independent iterative oracles.
 *
 * fib/lucas run fast doubling on |n| and then apply the negative-index sign
 * rules F(-n) = (-1)^(n-1) F(n), L(-n) = (-1)^n L(n). The oracles iterate the
 * recurrence directly (forward, and backward for n < 0) and share no code
 * with the doubling kernel, so agreement between the two is evidence rather
 * than tautology.
 */

#include "fibsum/rational.hpp"

namespace fibsum {

/// Largest accepted |index| for fib/lucas.
inline constexpr long long kMaxSeqIndex = 1LL << 31;
/// The oracles walk the recurrence step by step; they refuse indices beyond this.
inline constexpr long long kMaxOracleIndex = 100000;

Int fib(long long n);
Int lucas(long long n);

Int fib_oracle(long long n);
Int lucas_oracle(long long n);

/// C(n, k) by the multiplicative formula, exact division at every step.
/// Requires n >= 0; returns 0 outside 0 <= k <= n so sums can iterate freely.
Int binomial(long long n, long long k);

/// Binet forms in Q(sqrt5): (alpha^n - beta^n)/(alpha - beta) == F(n) and
/// alpha^n + beta^n == L(n), compared exactly. |n| <= 500.
bool check_binet(long long n);

/// (-1)^s + alpha^(2s) == alpha^s L(s), and the beta twin. |s| <= 100.
bool check_lemma1(long long s);

/// The four conjugate shift identities, exactly in Q(sqrt5), |r|,|s| <= 50:
///   L(r+s) - L(r) alpha^s == -beta^r  F(s) sqrt5
///   L(r+s) - L(r) beta^s  ==  alpha^r F(s) sqrt5
///   F(r+s) - F(r) alpha^s ==  beta^r  F(s)
///   F(r+s) - F(r) beta^s  ==  alpha^r F(s)
bool check_lemma2(long long r, long long s);

namespace detail {
// Cache-bypassing kernels; used by the benchmark and by tests that prove the
// per-thread memo cache is invisible to results.
Int fib_uncached(long long n);
Int lucas_uncached(long long n);
}  // namespace detail

}  // namespace fibsum

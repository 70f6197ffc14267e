#include "fibsum/catalog.hpp"

#include <stdexcept>
#include <utility>

#include "fibsum/sequences.hpp"

namespace fibsum {

namespace {

using P = ParamTuple;
using PS = ParamSpace;

// Transcription shorthands, matching the printed notation as closely as the
// language allows: F/L are the sequences, C the binomial weight, pm(e) the
// sign (-1)^e, ip/rp integer and rational powers, over(x, d) the factor x/d.
Int F(long long i) { return fib(i); }
Int L(long long i) { return lucas(i); }
Int C(long long n, long long k) { return binomial(n, k); }
int pm(long long e) { return parity_sign(e); }
Int ip(const Int& base, long long e) { return int_pow(base, e); }
Rational rp(const Rational& base, long long e) { return rational_pow(base, e); }
Rational over(Int num, long long den) { return {std::move(num), make_int(den)}; }

void add2(std::vector<IdentityDescriptor>& v, std::string id, Family fam, std::string anchor,
          PS ps, Evaluator lhs, Evaluator rhs) {
  v.push_back({std::move(id), fam, std::move(anchor), ps, std::move(lhs), nullptr, std::move(rhs)});
}

void add3(std::vector<IdentityDescriptor>& v, std::string id, Family fam, std::string anchor,
          PS ps, Evaluator lhs, Evaluator mid, Evaluator rhs) {
  v.push_back({std::move(id), fam, std::move(anchor), ps, std::move(lhs), std::move(mid), std::move(rhs)});
}

std::vector<IdentityDescriptor> build_catalog() {
  std::vector<IdentityDescriptor> v;
  v.reserve(43);

  const PS only_n{};
  const PS uses_t{.uses_t = true};
  const PS uses_rst{.uses_r = true, .uses_s = true, .uses_t = true};
  const PS uses_st_even{.uses_s = true, .uses_t = true, .s_even = true};

  // sum C(n,k) (F_k+L_k)/(k+1) = (F_{2n+1}+L_{2n+1})/(n+1)
  add2(v, "INTRO-1", Family::both, "Introduction, motivating proposal, first identity", only_n,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k) acc += over(C(p.n, k) * (F(k) + L(k)), k + 1);
         return acc;
       },
       [](const P& p) { return over(F(2 * p.n + 1) + L(2 * p.n + 1), p.n + 1); });

  // sum C(n,k) (F_k+L_k)/((k+1)(k+2)) = (F_{2n+2}+L_{2n+2}-2)/((n+1)(n+2))
  add2(v, "INTRO-2", Family::both, "Introduction, motivating proposal, second identity", only_n,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * (F(k) + L(k)), (k + 1) * (k + 2));
         return acc;
       },
       [](const P& p) { return over(F(2 * p.n + 2) + L(2 * p.n + 2) - 2, (p.n + 1) * (p.n + 2)); });

  // sum C(n,k)/(k+1) (-1)^{s(k+1)+t} F_r^{k+1} F_s^{n-k} F_{rn-s(k+1)-rk-t}
  //   = ((-1)^{t+1} F_s^{n+1} F_{r(n+1)-t} - F_t F_{r+s}^{n+1}) / (n+1)
  add2(v, "THM1-F", Family::fib, "Theorem 1, Fibonacci form", uses_rst,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(p.s * (k + 1) + p.t) * ip(F(p.r), k + 1) *
                           ip(F(p.s), p.n - k) * F(p.r * p.n - p.s * (k + 1) - p.r * k - p.t),
                       k + 1);
         return acc;
       },
       [](const P& p) {
         return over(pm(p.t + 1) * ip(F(p.s), p.n + 1) * F(p.r * (p.n + 1) - p.t) -
                         F(p.t) * ip(F(p.r + p.s), p.n + 1),
                     p.n + 1);
       });

  // sum C(n,k)/(k+1) (-1)^{s(k+1)+1+t} F_r^{k+1} F_s^{n-k} L_{rn-s(k+1)-rk-t}
  //   = ((-1)^t F_s^{n+1} L_{r(n+1)-t} - L_t F_{r+s}^{n+1}) / (n+1)
  add2(v, "THM1-L", Family::lucas, "Theorem 1, Lucas form", uses_rst,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(p.s * (k + 1) + 1 + p.t) * ip(F(p.r), k + 1) *
                           ip(F(p.s), p.n - k) * L(p.r * p.n - p.s * (k + 1) - p.r * k - p.t),
                       k + 1);
         return acc;
       },
       [](const P& p) {
         return over(pm(p.t) * ip(F(p.s), p.n + 1) * L(p.r * (p.n + 1) - p.t) -
                         L(p.t) * ip(F(p.r + p.s), p.n + 1),
                     p.n + 1);
       });

  // sum C(n,k)/(k+1) (-1)^k F_{n-2k-1+t} = (F_{n+1+t} - F_t)/(n+1)
  add2(v, "COR1-F", Family::fib, "Corollary 1, Fibonacci form", uses_t,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * F(p.n - 2 * k - 1 + p.t), k + 1);
         return acc;
       },
       [](const P& p) { return over(F(p.n + 1 + p.t) - F(p.t), p.n + 1); });

  add2(v, "COR1-L", Family::lucas, "Corollary 1, Lucas form", uses_t,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * L(p.n - 2 * k - 1 + p.t), k + 1);
         return acc;
       },
       [](const P& p) { return over(L(p.n + 1 + p.t) - L(p.t), p.n + 1); });

  // sum C(n,k)/(k+1) (-1)^t F_{n-3k-2-t} = ((-1)^{t+1} F_{n+1-t} - F_t 2^{n+1})/(n+1)
  add2(v, "COR2-F", Family::fib, "Corollary 2, Fibonacci form", uses_t,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(p.t) * F(p.n - 3 * k - 2 - p.t), k + 1);
         return acc;
       },
       [](const P& p) {
         return over(pm(p.t + 1) * F(p.n + 1 - p.t) - F(p.t) * ip(Int(2), p.n + 1), p.n + 1);
       });

  add2(v, "COR2-L", Family::lucas, "Corollary 2, Lucas form", uses_t,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(p.t + 1) * L(p.n - 3 * k - 2 - p.t), k + 1);
         return acc;
       },
       [](const P& p) {
         return over(pm(p.t) * L(p.n + 1 - p.t) - L(p.t) * ip(Int(2), p.n + 1), p.n + 1);
       });

  // sum C(n,k)/(k+1) (-1)^k F_{2n-3k-1+t} = (F_{2n+2+t} - F_t 2^{n+1})/(n+1)
  add2(v, "COR3-F", Family::fib, "Corollary 3, Fibonacci form", uses_t,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * F(2 * p.n - 3 * k - 1 + p.t), k + 1);
         return acc;
       },
       [](const P& p) {
         return over(F(2 * p.n + 2 + p.t) - F(p.t) * ip(Int(2), p.n + 1), p.n + 1);
       });

  add2(v, "COR3-L", Family::lucas, "Corollary 3, Lucas form", uses_t,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * L(2 * p.n - 3 * k - 1 + p.t), k + 1);
         return acc;
       },
       [](const P& p) {
         return over(L(2 * p.n + 2 + p.t) - L(p.t) * ip(Int(2), p.n + 1), p.n + 1);
       });

  // sum C(n,k)/(k+1) (-1)^t F_{2n-4k-2-t} = ((-1)^{t+1} F_{2n+2-t} - F_t 3^{n+1})/(n+1)
  add2(v, "COR4-F", Family::fib, "Corollary 4, Fibonacci form", uses_t,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(p.t) * F(2 * p.n - 4 * k - 2 - p.t), k + 1);
         return acc;
       },
       [](const P& p) {
         return over(pm(p.t + 1) * F(2 * p.n + 2 - p.t) - F(p.t) * ip(Int(3), p.n + 1), p.n + 1);
       });

  add2(v, "COR4-L", Family::lucas, "Corollary 4, Lucas form", uses_t,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(p.t + 1) * L(2 * p.n - 4 * k - 2 - p.t), k + 1);
         return acc;
       },
       [](const P& p) {
         return over(pm(p.t) * L(2 * p.n + 2 - p.t) - L(p.t) * ip(Int(3), p.n + 1), p.n + 1);
       });

  // sum C(n,k)/(k+1) (-1)^k F_{2n-k+1+t} = (F_{2n+2+t} - F_t)/(n+1)
  add2(v, "COR5-F", Family::fib, "Corollary 5, Fibonacci form", uses_t,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * F(2 * p.n - k + 1 + p.t), k + 1);
         return acc;
       },
       [](const P& p) { return over(F(2 * p.n + 2 + p.t) - F(p.t), p.n + 1); });

  add2(v, "COR5-L", Family::lucas, "Corollary 5, Lucas form", uses_t,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * L(2 * p.n - k + 1 + p.t), k + 1);
         return acc;
       },
       [](const P& p) { return over(L(2 * p.n + 2 + p.t) - L(p.t), p.n + 1); });

  // sum C(n,k)/(k+1) (-1)^{n+k+1} 2^{n-k} F_{n+2k+3+t} = ((-2)^{n+1} F_{n+1+t} - F_t)/(n+1)
  add2(v, "COR6-F", Family::fib, "Corollary 6, Fibonacci form", uses_t,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(p.n + k + 1) * ip(Int(2), p.n - k) * F(p.n + 2 * k + 3 + p.t),
                       k + 1);
         return acc;
       },
       [](const P& p) {
         return over(ip(Int(-2), p.n + 1) * F(p.n + 1 + p.t) - F(p.t), p.n + 1);
       });

  add2(v, "COR6-L", Family::lucas, "Corollary 6, Lucas form", uses_t,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(p.n + k + 1) * ip(Int(2), p.n - k) * L(p.n + 2 * k + 3 + p.t),
                       k + 1);
         return acc;
       },
       [](const P& p) {
         return over(ip(Int(-2), p.n + 1) * L(p.n + 1 + p.t) - L(p.t), p.n + 1);
       });

  // sum C(n,k)/(k+1) (-1)^k 2^{n-k} F_{2n+k+3+t} = (2^{n+1} F_{2n+2+t} - F_t)/(n+1)
  add2(v, "COR7-F", Family::fib, "Corollary 7, Fibonacci form", uses_t,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * ip(Int(2), p.n - k) * F(2 * p.n + k + 3 + p.t), k + 1);
         return acc;
       },
       [](const P& p) {
         return over(ip(Int(2), p.n + 1) * F(2 * p.n + 2 + p.t) - F(p.t), p.n + 1);
       });

  add2(v, "COR7-L", Family::lucas, "Corollary 7, Lucas form", uses_t,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * ip(Int(2), p.n - k) * L(2 * p.n + k + 3 + p.t), k + 1);
         return acc;
       },
       [](const P& p) {
         return over(ip(Int(2), p.n + 1) * L(2 * p.n + 2 + p.t) - L(p.t), p.n + 1);
       });

  // sum C(n,k)/(k+1) (-1)^k 3^{n-k} F_{2(n+k+2)+t} = (3^{n+1} F_{2n+2+t} - F_t)/(n+1)
  add2(v, "COR8-F", Family::fib, "Corollary 8, Fibonacci form", uses_t,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * ip(Int(3), p.n - k) * F(2 * (p.n + k + 2) + p.t), k + 1);
         return acc;
       },
       [](const P& p) {
         return over(ip(Int(3), p.n + 1) * F(2 * p.n + 2 + p.t) - F(p.t), p.n + 1);
       });

  add2(v, "COR8-L", Family::lucas, "Corollary 8, Lucas form", uses_t,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * ip(Int(3), p.n - k) * L(2 * (p.n + k + 2) + p.t), k + 1);
         return acc;
       },
       [](const P& p) {
         return over(ip(Int(3), p.n + 1) * L(2 * p.n + 2 + p.t) - L(p.t), p.n + 1);
       });

  // s even: sum C(n,k)/(k+1) (-1)^k L_s^{n-k} F_{s(n+k+2)+t} = (L_s^{n+1} F_{s(n+1)+t} - F_t)/(n+1)
  add2(v, "THM2-F", Family::fib, "Theorem 2, Fibonacci form", uses_st_even,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * ip(L(p.s), p.n - k) * F(p.s * (p.n + k + 2) + p.t),
                       k + 1);
         return acc;
       },
       [](const P& p) {
         return over(ip(L(p.s), p.n + 1) * F(p.s * (p.n + 1) + p.t) - F(p.t), p.n + 1);
       });

  add2(v, "THM2-L", Family::lucas, "Theorem 2, Lucas form", uses_st_even,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * ip(L(p.s), p.n - k) * L(p.s * (p.n + k + 2) + p.t),
                       k + 1);
         return acc;
       },
       [](const P& p) {
         return over(ip(L(p.s), p.n + 1) * L(p.s * (p.n + 1) + p.t) - L(p.t), p.n + 1);
       });

  // sum C(n,k)/(k+1) (-1)^k F_{r+s}^{k+1} F_s^{n-k} F_{s(k+1)+(r+s)(n-k)-t}
  //   = (F_s^{n+1} F_{(r+s)(n+1)-t} + (-1)^{(s+1)(n+1)+t} F_t F_r^{n+1})/(n+1)
  add2(v, "THM3-F", Family::fib, "Theorem 3, Fibonacci form", uses_rst,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * ip(F(p.r + p.s), k + 1) * ip(F(p.s), p.n - k) *
                           F(p.s * (k + 1) + (p.r + p.s) * (p.n - k) - p.t),
                       k + 1);
         return acc;
       },
       [](const P& p) {
         return over(ip(F(p.s), p.n + 1) * F((p.r + p.s) * (p.n + 1) - p.t) +
                         pm((p.s + 1) * (p.n + 1) + p.t) * F(p.t) * ip(F(p.r), p.n + 1),
                     p.n + 1);
       });

  add2(v, "THM3-L", Family::lucas, "Theorem 3, Lucas form", uses_rst,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * ip(F(p.r + p.s), k + 1) * ip(F(p.s), p.n - k) *
                           L(p.s * (k + 1) + (p.r + p.s) * (p.n - k) - p.t),
                       k + 1);
         return acc;
       },
       [](const P& p) {
         return over(ip(F(p.s), p.n + 1) * L((p.r + p.s) * (p.n + 1) - p.t) +
                         pm((p.s + 1) * (p.n + 1) + p.t + 1) * L(p.t) * ip(F(p.r), p.n + 1),
                     p.n + 1);
       });

  // sum C(n,k)/(k+2) (-1)^{r(n-k)} F_r^{k+2} F_s^{n-k} F_{s(k+2)-r(n-k)+t}
  //   = ((-1)^{t+1} F_s^{n+2} F_{r(n+2)-t} - F_t F_{r+s}^{n+2})/((n+1)(n+2))
  //     + F_r F_{s+t} F_{r+s}^{n+1}/(n+1)
  add2(v, "THM4-F", Family::fib, "Theorem 4, Fibonacci form", uses_rst,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(p.r * (p.n - k)) * ip(F(p.r), k + 2) * ip(F(p.s), p.n - k) *
                           F(p.s * (k + 2) - p.r * (p.n - k) + p.t),
                       k + 2);
         return acc;
       },
       [](const P& p) {
         return over(pm(p.t + 1) * ip(F(p.s), p.n + 2) * F(p.r * (p.n + 2) - p.t) -
                         F(p.t) * ip(F(p.r + p.s), p.n + 2),
                     (p.n + 1) * (p.n + 2)) +
                over(F(p.r) * F(p.s + p.t) * ip(F(p.r + p.s), p.n + 1), p.n + 1);
       });

  add2(v, "THM4-L", Family::lucas, "Theorem 4, Lucas form", uses_rst,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(p.r * (p.n - k)) * ip(F(p.r), k + 2) * ip(F(p.s), p.n - k) *
                           L(p.s * (k + 2) - p.r * (p.n - k) + p.t),
                       k + 2);
         return acc;
       },
       [](const P& p) {
         return over(pm(p.t) * ip(F(p.s), p.n + 2) * L(p.r * (p.n + 2) - p.t) -
                         L(p.t) * ip(F(p.r + p.s), p.n + 2),
                     (p.n + 1) * (p.n + 2)) +
                over(F(p.r) * L(p.s + p.t) * ip(F(p.r + p.s), p.n + 1), p.n + 1);
       });

  // s even: sum C(n,k)/(k+2) (-1)^k L_s^{n-k} F_{2s(k+2)+s(n-k)+t}
  //   = (L_s^{n+2} F_{s(n+2)+t} - F_t)/((n+1)(n+2)) - F_{2s+t}/(n+1)
  add2(v, "THM5-F", Family::fib, "Theorem 5, Fibonacci form", uses_st_even,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * ip(L(p.s), p.n - k) *
                           F(2 * p.s * (k + 2) + p.s * (p.n - k) + p.t),
                       k + 2);
         return acc;
       },
       [](const P& p) {
         return over(ip(L(p.s), p.n + 2) * F(p.s * (p.n + 2) + p.t) - F(p.t),
                     (p.n + 1) * (p.n + 2)) -
                over(F(2 * p.s + p.t), p.n + 1);
       });

  add2(v, "THM5-L", Family::lucas, "Theorem 5, Lucas form", uses_st_even,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * ip(L(p.s), p.n - k) *
                           L(2 * p.s * (k + 2) + p.s * (p.n - k) + p.t),
                       k + 2);
         return acc;
       },
       [](const P& p) {
         return over(ip(L(p.s), p.n + 2) * L(p.s * (p.n + 2) + p.t) - L(p.t),
                     (p.n + 1) * (p.n + 2)) -
                over(L(2 * p.s + p.t), p.n + 1);
       });

  // sum C(n,k)/((k+1)(k+2)) (-1)^{r(n-k)} F_r^{k+2} F_s^{n-k} F_{s(k+2)-r(n-k)+t}
  //   = -((-1)^{t+1} F_s^{n+1} F_{r+s} F_{r(n+1)-t} - F_t F_{r+s}^{n+2})/((n+1)(n+2))
  //     + F_s^{n+1} F_r (-1)^{s+t} F_{r(n+1)-s-t}/(n+2)
  add2(v, "THM6-F", Family::fib, "Theorem 6, Fibonacci form", uses_rst,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(p.r * (p.n - k)) * ip(F(p.r), k + 2) * ip(F(p.s), p.n - k) *
                           F(p.s * (k + 2) - p.r * (p.n - k) + p.t),
                       (k + 1) * (k + 2));
         return acc;
       },
       [](const P& p) {
         return -over(pm(p.t + 1) * ip(F(p.s), p.n + 1) * F(p.r + p.s) * F(p.r * (p.n + 1) - p.t) -
                          F(p.t) * ip(F(p.r + p.s), p.n + 2),
                      (p.n + 1) * (p.n + 2)) +
                over(ip(F(p.s), p.n + 1) * F(p.r) * pm(p.s + p.t) * F(p.r * (p.n + 1) - p.s - p.t),
                     p.n + 2);
       });

  add2(v, "THM6-L", Family::lucas, "Theorem 6, Lucas form", uses_rst,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(p.r * (p.n - k)) * ip(F(p.r), k + 2) * ip(F(p.s), p.n - k) *
                           L(p.s * (k + 2) - p.r * (p.n - k) + p.t),
                       (k + 1) * (k + 2));
         return acc;
       },
       [](const P& p) {
         return -over(pm(p.t) * ip(F(p.s), p.n + 1) * F(p.r + p.s) * L(p.r * (p.n + 1) - p.t) -
                          L(p.t) * ip(F(p.r + p.s), p.n + 2),
                      (p.n + 1) * (p.n + 2)) +
                over(ip(F(p.s), p.n + 1) * F(p.r) * pm(p.s + p.t + 1) *
                         L(p.r * (p.n + 1) - p.s - p.t),
                     p.n + 2);
       });

  // s even: sum C(n,k)/((k+1)(k+2)) (-1)^k L_s^{n-k} F_{s(n+k+4)+t}
  //   = -(L_s^{n+1} F_{s(n+1)+t} - F_t)/((n+1)(n+2)) + L_s^{n+1} F_{s(n+3)+t}/(n+2)
  add2(v, "THM7-F", Family::fib, "Theorem 7, Fibonacci form", uses_st_even,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * ip(L(p.s), p.n - k) * F(p.s * (p.n + k + 4) + p.t),
                       (k + 1) * (k + 2));
         return acc;
       },
       [](const P& p) {
         return -over(ip(L(p.s), p.n + 1) * F(p.s * (p.n + 1) + p.t) - F(p.t),
                      (p.n + 1) * (p.n + 2)) +
                over(ip(L(p.s), p.n + 1) * F(p.s * (p.n + 3) + p.t), p.n + 2);
       });

  add2(v, "THM7-L", Family::lucas, "Theorem 7, Lucas form", uses_st_even,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * ip(L(p.s), p.n - k) * L(p.s * (p.n + k + 4) + p.t),
                       (k + 1) * (k + 2));
         return acc;
       },
       [](const P& p) {
         return -over(ip(L(p.s), p.n + 1) * L(p.s * (p.n + 1) + p.t) - L(p.t),
                      (p.n + 1) * (p.n + 2)) +
                over(ip(L(p.s), p.n + 1) * L(p.s * (p.n + 3) + p.t), p.n + 2);
       });

  // sum C(n,k) (-1)^k F_{2n-k}/(k+2) = sum C(n,k) F_k/((k+1)(k+2))
  add2(v, "SEC4-F", Family::fib, "Section 4 specialization, Fibonacci form", only_n,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * F(2 * p.n - k), k + 2);
         return acc;
       },
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k) acc += over(C(p.n, k) * F(k), (k + 1) * (k + 2));
         return acc;
       });

  add2(v, "SEC4-L", Family::lucas, "Section 4 specialization, Lucas form", only_n,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * L(2 * p.n - k), k + 2);
         return acc;
       },
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k) acc += over(C(p.n, k) * L(k), (k + 1) * (k + 2));
         return acc;
       });

  // sum C(n,k) (-1)^k (F_{2n-k}+L_{2n-k})/(k+2) = sum C(n,k) (F_k+L_k)/((k+1)(k+2))
  //   = (F_{2n+2}+L_{2n+2}-2)/((n+1)(n+2))
  add3(v, "SEC4-FL", Family::both, "Section 4 specialization, combined form", only_n,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * (F(2 * p.n - k) + L(2 * p.n - k)), k + 2);
         return acc;
       },
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * (F(k) + L(k)), (k + 1) * (k + 2));
         return acc;
       },
       [](const P& p) { return over(F(2 * p.n + 2) + L(2 * p.n + 2) - 2, (p.n + 1) * (p.n + 2)); });

  // r, r+s nonzero:
  // F_{r+s}^{-n} sum C(n,k)/(k+2) (-1)^{r(n-k)} F_r^k F_s^{n-k} F_{sk-r(n-k)+t}
  //   = sum C(n,k)/((k+1)(k+2)) (-1)^k (F_r/F_{r+s})^k F_{sk+t}
  //   = ((F_s/F_r)^2 (F_s/F_{r+s})^n (-1)^{t+1} F_{2s+r(n+2)-t}
  //      - (F_{r+s}/F_r)^2 (-1)^{t+1} F_{2s-t})/((n+1)(n+2))
  //     + (F_{r+s}/F_r) (-1)^{s+t+1} F_{s-t}/(n+1)
  {
    const PS rel1{.uses_r = true, .uses_s = true, .uses_t = true,
                  .r_nonzero = true, .r_plus_s_nonzero = true};
    add3(v, "REL1-F", Family::fib, "Sum relation theorem 1, Fibonacci form", rel1,
         [](const P& p) {
           Rational acc;
           for (long long k = 0; k <= p.n; ++k)
             acc += over(C(p.n, k) * pm(p.r * (p.n - k)) * ip(F(p.r), k) * ip(F(p.s), p.n - k) *
                             F(p.s * k - p.r * (p.n - k) + p.t),
                         k + 2);
           return rp(Rational(F(p.r + p.s)), -p.n) * acc;
         },
         [](const P& p) {
           Rational acc;
           for (long long k = 0; k <= p.n; ++k)
             acc += over(C(p.n, k) * pm(k), (k + 1) * (k + 2)) *
                    rp(Rational(F(p.r), F(p.r + p.s)), k) * Rational(F(p.s * k + p.t));
           return acc;
         },
         [](const P& p) {
           Rational fs_fr(F(p.s), F(p.r));
           Rational fs_frs(F(p.s), F(p.r + p.s));
           Rational frs_fr(F(p.r + p.s), F(p.r));
           return (rp(fs_fr, 2) * rp(fs_frs, p.n) *
                       Rational(pm(p.t + 1) * F(2 * p.s + p.r * (p.n + 2) - p.t)) -
                   rp(frs_fr, 2) * Rational(pm(p.t + 1) * F(2 * p.s - p.t))) /
                      Rational((p.n + 1) * (p.n + 2)) +
                  frs_fr * Rational(pm(p.s + p.t + 1) * F(p.s - p.t)) / Rational(p.n + 1);
         });

    add3(v, "REL1-L", Family::lucas, "Sum relation theorem 1, Lucas form", rel1,
         [](const P& p) {
           Rational acc;
           for (long long k = 0; k <= p.n; ++k)
             acc += over(C(p.n, k) * pm(p.r * (p.n - k)) * ip(F(p.r), k) * ip(F(p.s), p.n - k) *
                             L(p.s * k - p.r * (p.n - k) + p.t),
                         k + 2);
           return rp(Rational(F(p.r + p.s)), -p.n) * acc;
         },
         [](const P& p) {
           Rational acc;
           for (long long k = 0; k <= p.n; ++k)
             acc += over(C(p.n, k) * pm(k), (k + 1) * (k + 2)) *
                    rp(Rational(F(p.r), F(p.r + p.s)), k) * Rational(L(p.s * k + p.t));
           return acc;
         },
         [](const P& p) {
           Rational fs_fr(F(p.s), F(p.r));
           Rational fs_frs(F(p.s), F(p.r + p.s));
           Rational frs_fr(F(p.r + p.s), F(p.r));
           return (rp(fs_fr, 2) * rp(fs_frs, p.n) *
                       Rational(pm(p.t) * L(2 * p.s + p.r * (p.n + 2) - p.t)) -
                   rp(frs_fr, 2) * Rational(pm(p.t) * L(2 * p.s - p.t))) /
                      Rational((p.n + 1) * (p.n + 2)) +
                  frs_fr * Rational(pm(p.s + p.t) * L(p.s - p.t)) / Rational(p.n + 1);
         });
  }

  // sum C(n,k)/(k+2) (-1)^{k+1} F_{n-2k} = sum C(n,k) (-1)^k F_k/((k+1)(k+2))
  //   = (1 - F_{n+4})/((n+1)(n+2)) + 1/(n+1)
  add3(v, "REL1P-F", Family::fib, "Sum relation theorem 1, Fibonacci particular case", only_n,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k + 1) * F(p.n - 2 * k), k + 2);
         return acc;
       },
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * F(k), (k + 1) * (k + 2));
         return acc;
       },
       [](const P& p) {
         return over(1 - F(p.n + 4), (p.n + 1) * (p.n + 2)) + Rational(1, p.n + 1);
       });

  // sum C(n,k)/(k+2) (-1)^k L_{n-2k} = sum C(n,k) (-1)^k L_k/((k+1)(k+2))
  //   = (L_{n+4} - 3)/((n+1)(n+2)) - 1/(n+1)
  add3(v, "REL1P-L", Family::lucas, "Sum relation theorem 1, Lucas particular case", only_n,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * L(p.n - 2 * k), k + 2);
         return acc;
       },
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * L(k), (k + 1) * (k + 2));
         return acc;
       },
       [](const P& p) {
         return over(L(p.n + 4) - 3, (p.n + 1) * (p.n + 2)) - Rational(1, p.n + 1);
       });

  // s even: sum C(n,k)/(k+2) (-1)^k L_s^{n-k} F_{s(n+k)+t} = sum C(n,k) F_{2sk+t}/((k+1)(k+2))
  //   = (L_s^{n+2} F_{s(n-2)+t} + (-1)^t F_{4s-t})/((n+1)(n+2)) + (-1)^t F_{2s-t}/(n+1)
  add3(v, "REL2-F", Family::fib, "Sum relation theorem 2, Fibonacci form", uses_st_even,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * ip(L(p.s), p.n - k) * F(p.s * (p.n + k) + p.t), k + 2);
         return acc;
       },
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * F(2 * p.s * k + p.t), (k + 1) * (k + 2));
         return acc;
       },
       [](const P& p) {
         return over(ip(L(p.s), p.n + 2) * F(p.s * (p.n - 2) + p.t) + pm(p.t) * F(4 * p.s - p.t),
                     (p.n + 1) * (p.n + 2)) +
                over(pm(p.t) * F(2 * p.s - p.t), p.n + 1);
       });

  add3(v, "REL2-L", Family::lucas, "Sum relation theorem 2, Lucas form", uses_st_even,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * ip(L(p.s), p.n - k) * L(p.s * (p.n + k) + p.t), k + 2);
         return acc;
       },
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * L(2 * p.s * k + p.t), (k + 1) * (k + 2));
         return acc;
       },
       [](const P& p) {
         return over(ip(L(p.s), p.n + 2) * L(p.s * (p.n - 2) + p.t) - pm(p.t) * L(4 * p.s - p.t),
                     (p.n + 1) * (p.n + 2)) -
                over(pm(p.t) * L(2 * p.s - p.t), p.n + 1);
       });

  // sum C(n,k)/(k+2) (-1)^k 3^{n-k} F_{2(n+k)} = sum C(n,k) F_{4k}/((k+1)(k+2))
  //   = (3^{n+2} F_{2(n-2)} + 21)/((n+1)(n+2)) + 3/(n+1)
  add3(v, "REL2P-F", Family::fib, "Sum relation theorem 2, Fibonacci particular case", only_n,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * ip(Int(3), p.n - k) * F(2 * (p.n + k)), k + 2);
         return acc;
       },
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * F(4 * k), (k + 1) * (k + 2));
         return acc;
       },
       [](const P& p) {
         return over(ip(Int(3), p.n + 2) * F(2 * (p.n - 2)) + 21, (p.n + 1) * (p.n + 2)) +
                Rational(3, p.n + 1);
       });

  // sum C(n,k)/(k+2) (-1)^k 3^{n-k} L_{2(n+k)} = sum C(n,k) L_{4k}/((k+1)(k+2))
  //   = (3^{n+2} L_{2(n-2)} - 47)/((n+1)(n+2)) - 7/(n+1)
  add3(v, "REL2P-L", Family::lucas, "Sum relation theorem 2, Lucas particular case", only_n,
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * pm(k) * ip(Int(3), p.n - k) * L(2 * (p.n + k)), k + 2);
         return acc;
       },
       [](const P& p) {
         Rational acc;
         for (long long k = 0; k <= p.n; ++k)
           acc += over(C(p.n, k) * L(4 * k), (k + 1) * (k + 2));
         return acc;
       },
       [](const P& p) {
         return over(ip(Int(3), p.n + 2) * L(2 * (p.n - 2)) - 47, (p.n + 1) * (p.n + 2)) -
                Rational(7, p.n + 1);
       });

  return v;
}

}  // namespace

const std::vector<IdentityDescriptor>& catalog() {
  static const std::vector<IdentityDescriptor> entries = build_catalog();
  return entries;
}

const IdentityDescriptor* find_identity(std::string_view id) {
  for (const auto& d : catalog())
    if (d.id == id) return &d;
  return nullptr;
}

Rational eval_side(const IdentityDescriptor& desc, Side side, const ParamTuple& p) {
  if (auto v = desc.params.violation(p))
    throw std::domain_error(desc.id + ": inadmissible tuple: " + *v);
  switch (side) {
    case Side::lhs:
      return desc.lhs(p);
    case Side::mid:
      if (!desc.mid) throw std::invalid_argument(desc.id + ": identity has no middle expression");
      return desc.mid(p);
    case Side::rhs:
      return desc.rhs(p);
  }
  throw std::logic_error("eval_side: unreachable side");
}

}  // namespace fibsum

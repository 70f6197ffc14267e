// Acceptance suite: drives the shipped CLI and the library against the full
// verification workload and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "fibsum/catalog.hpp"
#include "fibsum/poly.hpp"
#include "fibsum/sequences.hpp"
#include "fibsum/verifier.hpp"
#include "support/mutants.hpp"
#include "support/subprocess.hpp"

using fibsum::testing::run_cmd;
using nlohmann::json;

namespace {

const std::string kBin = FIBSUM_BIN;

int g_failed = 0;

void report(int index, const char* name, bool ok, const std::string& detail) {
  if (!ok) ++g_failed;
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", index, name, detail.c_str());
  std::fflush(stdout);
}

long long ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

// 1. Full catalog verification over the default grid, through the CLI.
void criterion_full_catalog() {
  auto start = std::chrono::steady_clock::now();
  auto res = run_cmd(kBin + " verify --all --format json");
  long long elapsed = ms_since(start);

  bool ok = res.exit_code == 0 && elapsed <= 120000;
  std::size_t report_count = 0;
  std::uint64_t failure_count = 0;
  try {
    json reports = json::parse(res.out);
    report_count = reports.size();
    for (const auto& rep : reports) failure_count += rep["failures"].size();
    ok = ok && report_count >= fibsum::catalog().size() && failure_count == 0;
  } catch (...) {
    ok = false;
  }
  report(1, "full catalog verification on the default grid", ok,
         std::to_string(report_count) + " reports, " + std::to_string(failure_count) +
             " failures, exit " + std::to_string(res.exit_code) + ", " +
             std::to_string(elapsed) + " ms (limit 120000)");
}

// 2. The four polynomial identities for all n <= 64, exact equality.
void criterion_polynomials() {
  auto start = std::chrono::steady_clock::now();
  int checked = 0;
  bool ok = true;
  for (auto which : {fibsum::PolyIdentity::dat1, fibsum::PolyIdentity::dat2,
                     fibsum::PolyIdentity::dat3, fibsum::PolyIdentity::rel4}) {
    for (long long n = 0; n <= 64; ++n) {
      ok = fibsum::check_dattoli(which, n) && ok;
      ++checked;
    }
  }
  long long elapsed = ms_since(start);
  ok = ok && elapsed <= 10000;
  report(2, "polynomial identities up to n = 64", ok,
         std::to_string(checked) + " checks, " + std::to_string(elapsed) + " ms (limit 10000)");
}

// 3. Kernels vs the iterative oracle, plus the negative-index sign rules.
void criterion_kernel_oracle() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (long long n = -2000; n <= 2000; ++n) {
    ok = ok && fibsum::fib(n) == fibsum::fib_oracle(n);
    ok = ok && fibsum::lucas(n) == fibsum::lucas_oracle(n);
  }
  for (long long n = 0; n <= 2000; ++n) {
    ok = ok && fibsum::fib(-n) == fibsum::parity_sign(n - 1) * fibsum::fib(n);
    ok = ok && fibsum::lucas(-n) == fibsum::parity_sign(n) * fibsum::lucas(n);
  }
  long long elapsed = ms_since(start);
  ok = ok && elapsed <= 5000;
  report(3, "kernel oracle equivalence on [-2000, 2000]", ok,
         std::to_string(elapsed) + " ms (limit 5000)");
}

// 4. Field-level checks: Binet sweep and the two lemmas.
void criterion_field_lemmas() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (long long n = -500; n <= 500; ++n) ok = ok && fibsum::check_binet(n);
  for (long long s = -100; s <= 100; ++s) ok = ok && fibsum::check_lemma1(s);
  for (long long r = -50; r <= 50; ++r)
    for (long long s = -50; s <= 50; ++s) ok = ok && fibsum::check_lemma2(r, s);
  long long elapsed = ms_since(start);
  ok = ok && elapsed <= 30000;
  report(4, "Binet and lemma sweeps in Q(sqrt5)", ok,
         std::to_string(elapsed) + " ms (limit 30000)");
}

// 5. Theorem 2 at s = 2 reproduces Corollary 8 pointwise.
void criterion_remark() {
  bool ok = true;
  for (const char* pair : {"F", "L"}) {
    const auto& thm2 = *fibsum::find_identity(std::string("THM2-") + pair);
    const auto& cor8 = *fibsum::find_identity(std::string("COR8-") + pair);
    for (long long n = 0; n <= 24 && ok; ++n) {
      for (long long t = -6; t <= 6 && ok; ++t) {
        fibsum::ParamTuple with_s{n, 0, 2, t};
        fibsum::ParamTuple plain{n, 0, 0, t};
        ok = ok && thm2.lhs(with_s) == cor8.lhs(plain);
        ok = ok && thm2.rhs(with_s) == cor8.rhs(plain);
      }
    }
  }
  report(5, "Theorem 2 at s=2 reproduces Corollary 8", ok,
         "n <= 24, |t| <= 6, both families, both sides");
}

// 6. The printed particular-case constants, against direct summation.
void criterion_particular_constants() {
  const auto& rel2p_f = *fibsum::find_identity("REL2P-F");
  const auto& rel2p_l = *fibsum::find_identity("REL2P-L");
  bool ok = fibsum::eval_side(rel2p_f, fibsum::Side::rhs, {0, 0, 0, 0}) == fibsum::Rational(0);
  for (long long n = 0; n <= 30; ++n) {
    fibsum::ParamTuple p{n, 0, 0, 0};
    for (const auto* desc : {&rel2p_f, &rel2p_l}) {
      fibsum::Rational lhs = desc->lhs(p);
      ok = ok && lhs == desc->mid(p) && lhs == desc->rhs(p);
    }
  }
  report(6, "particular-case constants hold for n <= 30", ok,
         "constants 21/3 and 47/7, chains checked by direct summation");
}

// 7. Every documented single-token mutant is caught on the default grid.
void criterion_mutation_sensitivity() {
  auto mutants = fibsum::testing::mutant_catalog();
  bool ok = mutants.size() >= 5;
  std::string detail;
  for (const auto& mutant : mutants) {
    auto rep = fibsum::verify_grid(mutant, fibsum::GridSpec{});
    bool caught = !rep.failures.empty();
    ok = ok && caught;
    if (!detail.empty()) detail += ", ";
    detail += mutant.id + (caught ? ":caught" : ":MISSED");
  }
  report(7, "mutation sensitivity", ok, detail);
}

// 8. Byte determinism: worker count and repeated seeded runs.
void criterion_determinism() {
  auto jobs1 = run_cmd(kBin + " verify --all --format json --jobs 1");
  auto jobs8 = run_cmd(kBin + " verify --all --format json --jobs 8");
  bool jobs_ok = jobs1.exit_code == 0 && jobs8.exit_code == 0 && jobs1.out == jobs8.out;

  auto seeded_a = run_cmd(kBin + " verify --seed 1 --samples 500");
  auto seeded_b = run_cmd(kBin + " verify --seed 1 --samples 500");
  bool seed_ok = seeded_a.exit_code == 0 && seeded_b.exit_code == 0 && seeded_a.out == seeded_b.out;

  report(8, "byte-identical reports across jobs and repeated seeds", jobs_ok && seed_ok,
         std::string("jobs ") + (jobs_ok ? "ok" : "differ") + ", seeded runs " +
             (seed_ok ? "ok" : "differ"));
}

}  // namespace

int main() {
  criterion_full_catalog();
  criterion_polynomials();
  criterion_kernel_oracle();
  criterion_field_lemmas();
  criterion_remark();
  criterion_particular_constants();
  criterion_mutation_sensitivity();
  criterion_determinism();

  if (g_failed == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failed);
  return 1;
}

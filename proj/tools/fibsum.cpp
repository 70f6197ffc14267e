// fibsum: exact verification CLI for the binomial Fibonacci/Lucas identity
// catalog. Exit codes: 0 all checks clean, 1 at least one failed identity
// check, 2 usage or argument error.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibsum/catalog.hpp"
#include "fibsum/poly.hpp"
#include "fibsum/report.hpp"
#include "fibsum/sequences.hpp"
#include "fibsum/verifier.hpp"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

fibsum::IntRange parse_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos)
    throw std::invalid_argument("malformed range '" + text + "' (expected lo..hi)");
  fibsum::IntRange range;
  std::size_t used = 0;
  range.lo = std::stoll(text.substr(0, pos), &used);
  if (used != pos) throw std::invalid_argument("malformed range '" + text + "'");
  std::string hi = text.substr(pos + 2);
  range.hi = std::stoll(hi, &used);
  if (used != hi.size()) throw std::invalid_argument("malformed range '" + text + "'");
  if (range.lo > range.hi) throw std::invalid_argument("empty range '" + text + "'");
  return range;
}

const char* family_str(fibsum::Family family) {
  switch (family) {
    case fibsum::Family::fib: return "F";
    case fibsum::Family::lucas: return "L";
    case fibsum::Family::both: return "F+L";
  }
  return "?";
}

fibsum::ReportFormat parse_format(const std::string& name) {
  if (name == "human") return fibsum::ReportFormat::human;
  if (name == "tsv") return fibsum::ReportFormat::tsv;
  return fibsum::ReportFormat::json;
}

int cmd_list() {
  for (const auto& desc : fibsum::catalog()) {
    std::printf("%-10s %-4s %-24s %s\n", desc.id.c_str(), family_str(desc.family),
                desc.params.flags().c_str(), desc.anchor.c_str());
  }
  return kExitClean;
}

struct VerifyOptions {
  bool all = false;
  std::string id;
  std::string n = "0..24", r = "-6..6", s = "-6..6", t = "-6..6";
  std::optional<std::uint64_t> seed;
  std::uint64_t samples = 500;
  std::string format = "json";
  unsigned jobs = 0;
};

int cmd_verify(const VerifyOptions& opt) {
  const fibsum::IdentityDescriptor* single = nullptr;
  if (!opt.all && !opt.id.empty()) {
    single = fibsum::find_identity(opt.id);
    if (!single) {
      std::cerr << "unknown identity id: " << opt.id << "\n";
      return kExitUsage;
    }
  }

  fibsum::GridSpec grid{parse_range(opt.n), parse_range(opt.r), parse_range(opt.s),
                        parse_range(opt.t)};
  grid.validate();
  std::optional<fibsum::RandomSpec> random;
  if (opt.seed) {
    random = fibsum::RandomSpec{*opt.seed, opt.samples, 40};
    random->validate();
  }

  std::vector<fibsum::VerificationReport> reports;
  if (single) {
    reports.push_back(fibsum::verify_grid(*single, grid, opt.jobs));
    if (random) reports.push_back(fibsum::verify_random(*single, *random, opt.jobs));
  } else {
    reports = fibsum::verify_all(grid, random, opt.jobs);
  }

  std::cout << fibsum::render_reports(reports, parse_format(opt.format));
  return fibsum::report_exit_code(reports);
}

int cmd_poly(const std::string& id, long long n_max) {
  if (n_max < 0 || n_max > fibsum::kMaxPolyIdentityN) {
    std::cerr << "--n-max must be in [0, " << fibsum::kMaxPolyIdentityN << "]\n";
    return kExitUsage;
  }
  fibsum::PolyIdentity which = fibsum::PolyIdentity::dat1;
  if (id == "dat2") which = fibsum::PolyIdentity::dat2;
  if (id == "dat3") which = fibsum::PolyIdentity::dat3;
  if (id == "rel4") which = fibsum::PolyIdentity::rel4;
  bool all_ok = true;
  for (long long n = 0; n <= n_max; ++n) {
    bool ok = fibsum::check_dattoli(which, n);
    all_ok = all_ok && ok;
    std::printf("%s n=%lld: %s\n", id.c_str(), n, ok ? "pass" : "FAIL");
  }
  return all_ok ? kExitClean : kExitFailures;
}

int cmd_eval(const std::string& seq, long long index) {
  if (index > fibsum::kMaxSeqIndex || index < -fibsum::kMaxSeqIndex) {
    std::cerr << "--index must satisfy |index| <= 2^31\n";
    return kExitUsage;
  }
  fibsum::Int value = seq == "lucas" ? fibsum::lucas(index) : fibsum::fib(index);
  std::cout << value.get_str() << "\n";
  return kExitClean;
}

template <typename Fn>
long long time_us(Fn&& run) {
  long long best = -1;
  for (int rep = 0; rep < 3; ++rep) {
    auto start = std::chrono::steady_clock::now();
    fibsum::Int value = run();
    auto elapsed = std::chrono::steady_clock::now() - start;
    volatile std::size_t sink = mpz_sizeinbase(value.get_mpz_t(), 2);
    (void)sink;
    long long us = std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count();
    if (best < 0 || us < best) best = us;
  }
  return best;
}

int cmd_bench() {
  std::printf("%-8s %14s %16s %16s %18s\n", "index", "fib_fast_us", "fib_oracle_us",
              "lucas_fast_us", "lucas_oracle_us");
  for (long long index : {1000LL, 10000LL, 100000LL}) {
    long long fib_fast = time_us([index] { return fibsum::detail::fib_uncached(index); });
    long long fib_iter = time_us([index] { return fibsum::fib_oracle(index); });
    long long lucas_fast = time_us([index] { return fibsum::detail::lucas_uncached(index); });
    long long lucas_iter = time_us([index] { return fibsum::lucas_oracle(index); });
    std::printf("%-8lld %14lld %16lld %16lld %18lld\n", index, fib_fast, fib_iter, lucas_fast,
                lucas_iter);
  }
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of binomial Fibonacci/Lucas sum identities"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "list the identity catalog");

  VerifyOptions vopt;
  auto* verify_cmd = app.add_subcommand("verify", "verify identities over a parameter grid");
  auto* all_opt = verify_cmd->add_flag("--all", vopt.all, "whole catalog plus auxiliary sweeps");
  auto* id_opt = verify_cmd->add_option("--id", vopt.id, "single identity id (see `list`)");
  all_opt->excludes(id_opt);
  verify_cmd->add_option("--n", vopt.n, "n range as lo..hi (default 0..24)");
  verify_cmd->add_option("--r", vopt.r, "r range as lo..hi (default -6..6)");
  verify_cmd->add_option("--s", vopt.s, "s range as lo..hi (default -6..6)");
  verify_cmd->add_option("--t", vopt.t, "t range as lo..hi (default -6..6)");
  std::uint64_t seed_value = 0;
  auto* seed_opt = verify_cmd->add_option("--seed", seed_value, "enable seeded random sampling");
  verify_cmd->add_option("--samples", vopt.samples, "random samples per identity (default 500)")
      ->needs(seed_opt);
  verify_cmd->add_option("--format", vopt.format, "json|tsv|human (default json)")
      ->check(CLI::IsMember({"json", "tsv", "human"}));
  verify_cmd->add_option("--jobs", vopt.jobs, "worker threads (default: hardware)");

  std::string poly_id;
  long long poly_n_max = 0;
  auto* poly_cmd = app.add_subcommand("poly", "check the polynomial identities");
  poly_cmd->add_option("--id", poly_id, "dat1|dat2|dat3|rel4")
      ->required()
      ->check(CLI::IsMember({"dat1", "dat2", "dat3", "rel4"}));
  poly_cmd->add_option("--n-max", poly_n_max, "check all n in [0, N]")->required();

  std::string eval_seq;
  long long eval_index = 0;
  auto* eval_cmd = app.add_subcommand("eval", "print F(n) or L(n) exactly");
  eval_cmd->add_option("--seq", eval_seq, "fib|lucas")
      ->required()
      ->check(CLI::IsMember({"fib", "lucas"}));
  eval_cmd->add_option("--index", eval_index, "sequence index (any sign)")->required();

  auto* bench_cmd = app.add_subcommand("bench", "time fast doubling vs the iterative oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*list_cmd) return cmd_list();
    if (*verify_cmd) {
      if (seed_opt->count() > 0) vopt.seed = seed_value;
      return cmd_verify(vopt);
    }
    if (*poly_cmd) return cmd_poly(poly_id, poly_n_max);
    if (*eval_cmd) return cmd_eval(eval_seq, eval_index);
    if (*bench_cmd) return cmd_bench();
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

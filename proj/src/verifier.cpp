#include "fibsum/verifier.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <thread>

#include "fibsum/poly.hpp"
#include "fibsum/rng.hpp"
#include "fibsum/sequences.hpp"

namespace fibsum {

void GridSpec::validate() const {
  for (const auto* range : {&n, &r, &s, &t})
    if (range->lo > range->hi) throw std::invalid_argument("grid: empty range");
  if (n.lo < 0) throw std::invalid_argument("grid: n range must start at 0 or above");
}

void RandomSpec::validate() const {
  if (samples == 0) throw std::invalid_argument("random spec: samples must be positive");
  if (magnitude < 1) throw std::invalid_argument("random spec: magnitude must be >= 1");
}

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::microseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
}

struct EvalOutcome {
  std::uint64_t tested = 0;
  std::uint64_t skipped = 0;
  std::vector<Failure> failures;
};

// Canonical (n, r, s, t) enumeration of the box projected onto the
// parameters the descriptor uses; unused slots stay 0.
std::vector<ParamTuple> grid_tuples(const ParamSpace& ps, const GridSpec& g) {
  const IntRange rr = ps.uses_r ? g.r : IntRange{0, 0};
  const IntRange rs = ps.uses_s ? g.s : IntRange{0, 0};
  const IntRange rt = ps.uses_t ? g.t : IntRange{0, 0};
  std::vector<ParamTuple> tuples;
  unsigned __int128 cardinality = 1;
  for (long long extent : {g.n.size(), rr.size(), rs.size(), rt.size()})
    cardinality *= static_cast<unsigned __int128>(extent);
  tuples.reserve(static_cast<std::size_t>(
      std::min<unsigned __int128>(cardinality, 1u << 22)));
  for (long long n = g.n.lo; n <= g.n.hi; ++n)
    for (long long r = rr.lo; r <= rr.hi; ++r)
      for (long long s = rs.lo; s <= rs.hi; ++s)
        for (long long t = rt.lo; t <= rt.hi; ++t) tuples.push_back({n, r, s, t});
  return tuples;
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Strided fan-out over tuples. Per-worker results are merged by summing the
// counters and sorting the pooled failures, so the outcome is identical for
// any worker count. An evaluator throwing on an admissible tuple is an
// internal bug: it aborts with the message rather than surfacing as a result.
EvalOutcome evaluate_tuples(const IdentityDescriptor& desc,
                            const std::vector<ParamTuple>& tuples, unsigned jobs) {
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(tuples.size(), 1)));
  std::vector<EvalOutcome> parts(workers);

  auto run = [&](unsigned w) {
    EvalOutcome& out = parts[w];
    for (std::size_t i = w; i < tuples.size(); i += workers) {
      const ParamTuple& p = tuples[i];
      if (!desc.params.admissible(p)) {
        ++out.skipped;
        continue;
      }
      try {
        Rational lhs = desc.lhs(p);
        Rational rhs = desc.rhs(p);
        std::optional<Rational> mid;
        bool ok = lhs == rhs;
        if (desc.mid) {
          mid = desc.mid(p);
          ok = ok && *mid == lhs;
        }
        ++out.tested;
        if (!ok) out.failures.push_back({p, std::move(lhs), std::move(mid), std::move(rhs)});
      } catch (const std::exception& e) {
        std::fprintf(stderr, "fatal: evaluator error on admissible tuple (%s): %s\n",
                     desc.id.c_str(), e.what());
        std::abort();
      }
    }
  };

  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& th : threads) th.join();
  }

  EvalOutcome merged;
  for (auto& part : parts) {
    merged.tested += part.tested;
    merged.skipped += part.skipped;
    merged.failures.insert(merged.failures.end(),
                           std::make_move_iterator(part.failures.begin()),
                           std::make_move_iterator(part.failures.end()));
  }
  std::sort(merged.failures.begin(), merged.failures.end(),
            [](const Failure& a, const Failure& b) { return a.tuple < b.tuple; });
  return merged;
}

VerificationReport make_report(std::string id, GridSpec grid, std::optional<std::uint64_t> seed,
                               EvalOutcome outcome, Clock::time_point start) {
  VerificationReport rep;
  rep.identity_id = std::move(id);
  rep.grid = grid;
  rep.seed = seed;
  rep.tuples_tested = outcome.tested;
  rep.tuples_skipped = outcome.skipped;
  rep.failures = std::move(outcome.failures);
  rep.wall_time = since(start);
  return rep;
}

}  // namespace

VerificationReport verify_grid(const IdentityDescriptor& desc, const GridSpec& grid,
                               unsigned jobs) {
  grid.validate();
  auto start = Clock::now();
  EvalOutcome outcome = evaluate_tuples(desc, grid_tuples(desc.params, grid), jobs);
  return make_report(desc.id, grid, std::nullopt, std::move(outcome), start);
}

VerificationReport verify_random(const IdentityDescriptor& desc, const RandomSpec& spec,
                                 unsigned jobs) {
  spec.validate();
  auto start = Clock::now();
  const long long m = spec.magnitude;

  bool exists = false;
  if (desc.params.n_min <= m) {
    const long long n0 = std::max<long long>(desc.params.n_min, 0);
    for (long long r = -m; r <= m && !exists; ++r)
      for (long long s = -m; s <= m && !exists; ++s)
        exists = desc.params.admissible({n0, r, s, 0});
  }
  if (!exists)
    throw std::domain_error(desc.id + ": no admissible tuple in the sampling box (magnitude " +
                            std::to_string(m) + ")");

  // One attempt draws the used slots in (n, r, s, t) order; inadmissible
  // attempts are rejected and counted, keeping accepted tuples uniform over
  // the admissible subset of the box.
  SplitMix64 rng(spec.seed);
  std::vector<ParamTuple> tuples;
  tuples.reserve(spec.samples);
  std::uint64_t rejected = 0;
  const std::uint64_t rejection_cap = 10000 * spec.samples + 1000000;
  while (tuples.size() < spec.samples) {
    ParamTuple p;
    p.n = rng.uniform(0, m);
    if (desc.params.uses_r) p.r = rng.uniform(-m, m);
    if (desc.params.uses_s) p.s = rng.uniform(-m, m);
    if (desc.params.uses_t) p.t = rng.uniform(-m, m);
    if (!desc.params.admissible(p)) {
      if (++rejected > rejection_cap)
        throw std::runtime_error(desc.id + ": sampling rejection cap exceeded");
      continue;
    }
    tuples.push_back(p);
  }

  EvalOutcome outcome = evaluate_tuples(desc, tuples, jobs);
  outcome.skipped = rejected;
  GridSpec box{{0, m}, {-m, m}, {-m, m}, {-m, m}};
  return make_report(desc.id, box, spec.seed, std::move(outcome), start);
}

namespace {

// The non-catalog sweeps reuse VerificationReport. Boolean checks record a
// failed case with sides 0/1; value comparisons record the differing pair.
// Swept indices that may run negative live in the r/s slots.

VerificationReport sweep_boolean(std::string id, GridSpec box,
                                 const std::vector<ParamTuple>& cases,
                                 bool (*check)(const ParamTuple&)) {
  auto start = Clock::now();
  EvalOutcome outcome;
  for (const auto& p : cases) {
    ++outcome.tested;
    if (!check(p)) outcome.failures.push_back({p, Rational(0), std::nullopt, Rational(1)});
  }
  return make_report(std::move(id), box, std::nullopt, std::move(outcome), start);
}

VerificationReport sweep_binet() {
  std::vector<ParamTuple> cases;
  for (long long i = -500; i <= 500; ++i) cases.push_back({0, i, 0, 0});
  return sweep_boolean("CHECK-BINET", GridSpec{{0, 0}, {-500, 500}, {0, 0}, {0, 0}}, cases,
                       [](const ParamTuple& p) { return check_binet(p.r); });
}

VerificationReport sweep_lemma1() {
  std::vector<ParamTuple> cases;
  for (long long s = -100; s <= 100; ++s) cases.push_back({0, 0, s, 0});
  return sweep_boolean("CHECK-LEMMA1", GridSpec{{0, 0}, {0, 0}, {-100, 100}, {0, 0}}, cases,
                       [](const ParamTuple& p) { return check_lemma1(p.s); });
}

VerificationReport sweep_lemma2() {
  std::vector<ParamTuple> cases;
  for (long long r = -50; r <= 50; ++r)
    for (long long s = -50; s <= 50; ++s) cases.push_back({0, r, s, 0});
  return sweep_boolean("CHECK-LEMMA2", GridSpec{{0, 0}, {-50, 50}, {-50, 50}, {0, 0}}, cases,
                       [](const ParamTuple& p) { return check_lemma2(p.r, p.s); });
}

template <PolyIdentity Which>
VerificationReport sweep_poly(std::string id) {
  std::vector<ParamTuple> cases;
  for (long long n = 0; n <= 64; ++n) cases.push_back({n, 0, 0, 0});
  return sweep_boolean(std::move(id), GridSpec{{0, 64}, {0, 0}, {0, 0}, {0, 0}}, cases,
                       [](const ParamTuple& p) { return check_dattoli(Which, p.n); });
}

// Theorem 2 at s = 2 must reproduce Corollary 8 pointwise, per family.
VerificationReport sweep_remark(const char* id, const char* thm2_id, const char* cor8_id) {
  auto start = Clock::now();
  const IdentityDescriptor& thm2 = *find_identity(thm2_id);
  const IdentityDescriptor& cor8 = *find_identity(cor8_id);
  EvalOutcome outcome;
  for (long long n = 0; n <= 24; ++n) {
    for (long long t = -6; t <= 6; ++t) {
      ParamTuple with_s{n, 0, 2, t};
      ParamTuple plain{n, 0, 0, t};
      ++outcome.tested;
      Rational lhs_a = thm2.lhs(with_s), lhs_b = cor8.lhs(plain);
      if (lhs_a != lhs_b) {
        outcome.failures.push_back({with_s, lhs_a, std::nullopt, lhs_b});
        continue;
      }
      Rational rhs_a = thm2.rhs(with_s), rhs_b = cor8.rhs(plain);
      if (rhs_a != rhs_b) outcome.failures.push_back({with_s, rhs_a, std::nullopt, rhs_b});
    }
  }
  return make_report(id, GridSpec{{0, 24}, {0, 0}, {2, 2}, {-6, 6}}, std::nullopt,
                     std::move(outcome), start);
}

// The combined Section 4 entry must equal the sum of its two single-family
// entries, expression by expression.
VerificationReport sweep_combined_additivity(const IntRange& n_range) {
  auto start = Clock::now();
  const IdentityDescriptor& fl = *find_identity("SEC4-FL");
  const IdentityDescriptor& f = *find_identity("SEC4-F");
  const IdentityDescriptor& l = *find_identity("SEC4-L");
  EvalOutcome outcome;
  for (long long n = n_range.lo; n <= n_range.hi; ++n) {
    ParamTuple p{n, 0, 0, 0};
    ++outcome.tested;
    Rational lhs_sum = f.lhs(p) + l.lhs(p);
    Rational fl_lhs = fl.lhs(p);
    if (fl_lhs != lhs_sum) {
      outcome.failures.push_back({p, fl_lhs, std::nullopt, lhs_sum});
      continue;
    }
    Rational rhs_sum = f.rhs(p) + l.rhs(p);
    Rational fl_mid = fl.mid(p);
    if (fl_mid != rhs_sum) outcome.failures.push_back({p, fl_mid, std::nullopt, rhs_sum});
  }
  return make_report("CHECK-SEC4-SUM", GridSpec{n_range, {0, 0}, {0, 0}, {0, 0}}, std::nullopt,
                     std::move(outcome), start);
}

}  // namespace

std::vector<VerificationReport> verify_all(const GridSpec& grid,
                                           const std::optional<RandomSpec>& random,
                                           unsigned jobs) {
  grid.validate();
  if (random) random->validate();

  std::vector<VerificationReport> reports;
  for (const auto& desc : catalog()) {
    reports.push_back(verify_grid(desc, grid, jobs));
    if (random) reports.push_back(verify_random(desc, *random, jobs));
  }

  reports.push_back(sweep_binet());
  reports.push_back(sweep_lemma1());
  reports.push_back(sweep_lemma2());
  reports.push_back(sweep_poly<PolyIdentity::dat1>("CHECK-DAT1"));
  reports.push_back(sweep_poly<PolyIdentity::dat2>("CHECK-DAT2"));
  reports.push_back(sweep_poly<PolyIdentity::dat3>("CHECK-DAT3"));
  reports.push_back(sweep_poly<PolyIdentity::rel4>("CHECK-REL4"));
  reports.push_back(sweep_remark("CHECK-REMARK-F", "THM2-F", "COR8-F"));
  reports.push_back(sweep_remark("CHECK-REMARK-L", "THM2-L", "COR8-L"));
  reports.push_back(sweep_combined_additivity(grid.n));
  return reports;
}

}  // namespace fibsum

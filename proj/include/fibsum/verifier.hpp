#pragma once

/**
 * @file verifier.hpp
 * @brief Exhaustive grid verification and seeded randomized verification of
 *        catalog identities, with deterministic reports.
 *
 * Evaluation fans out over worker threads within one identity; results are
 * merged in canonical tuple order, so a report never depends on worker count
 * or scheduling. Failures are sorted lexicographically by (n, r, s, t), so
 * the first entry is the minimal counterexample.
 */

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibsum/catalog.hpp"
#include "fibsum/rational.hpp"

namespace fibsum {

struct IntRange {
  long long lo = 0;
  long long hi = 0;
  long long size() const { return hi - lo + 1; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Verification box. Unused parameters of an identity stay pinned at 0, so
/// grid cardinality is the product over the ranges of the used ones only.
struct GridSpec {
  IntRange n{0, 24};
  IntRange r{-6, 6};
  IntRange s{-6, 6};
  IntRange t{-6, 6};

  void validate() const;  // throws std::invalid_argument on a bad box
  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Seeded sampling box: n in [0, magnitude], r/s/t in [-magnitude, magnitude].
struct RandomSpec {
  std::uint64_t seed = 0;
  std::uint64_t samples = 500;
  long long magnitude = 40;

  void validate() const;
};

struct Failure {
  ParamTuple tuple;
  Rational lhs;
  std::optional<Rational> mid;
  Rational rhs;
};

struct VerificationReport {
  std::string identity_id;
  GridSpec grid;
  std::optional<std::uint64_t> seed;  // set for randomized runs only
  std::uint64_t tuples_tested = 0;
  std::uint64_t tuples_skipped = 0;   // constraint-inadmissible (grid) or rejected draws (random)
  std::vector<Failure> failures;      // sorted by tuple; front() is the minimal counterexample
  std::chrono::microseconds wall_time{0};

  bool clean() const { return failures.empty(); }
};

/// jobs == 0 picks the available hardware parallelism.
VerificationReport verify_grid(const IdentityDescriptor& desc, const GridSpec& grid,
                               unsigned jobs = 0);

/// Draws `samples` admissible tuples uniformly (SplitMix64 + rejection) and
/// checks each; identical (seed, spec, catalog) gives an identical report.
/// Throws if no admissible tuple exists in the box.
VerificationReport verify_random(const IdentityDescriptor& desc, const RandomSpec& spec,
                                 unsigned jobs = 0);

/// Whole-catalog verification plus the non-catalog sweeps: the Binet-form
/// sweep, the two lemma sweeps, the four polynomial identities, the
/// Theorem 2 (s=2) vs Corollary 8 equivalence, and the combined-form
/// additivity check. Reports come back in catalog order, sweeps last.
std::vector<VerificationReport> verify_all(const GridSpec& grid,
                                           const std::optional<RandomSpec>& random = std::nullopt,
                                           unsigned jobs = 0);

}  // namespace fibsum

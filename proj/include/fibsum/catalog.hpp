#pragma once

/**
 * @file catalog.hpp
 * @brief The registry of binomial Fibonacci/Lucas sum identities.
 *
 * Each entry carries two (for printed chains, three) independently
 * transcribed exact evaluators. The transcriptions follow the printed
 * statements token for token, with no algebraic simplification, so that
 * agreement between sides audits the statement rather than the transcriber.
 */

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibsum/rational.hpp"

namespace fibsum {

enum class Family { fib, lucas, both };

/// Parameter tuple; slots a descriptor does not use stay pinned to 0.
/// Ordering is lexicographic by (n, r, s, t), the counterexample order.
struct ParamTuple {
  long long n = 0;
  long long r = 0;
  long long s = 0;
  long long t = 0;
  friend auto operator<=>(const ParamTuple&, const ParamTuple&) = default;
};

struct ParamSpace {
  bool uses_r = false;
  bool uses_s = false;
  bool uses_t = false;
  bool s_even = false;           ///< admissible only for even s
  bool r_nonzero = false;        ///< admissible only for r != 0
  bool r_plus_s_nonzero = false; ///< admissible only for r + s != 0 (divisor F(r+s))
  long long n_min = 0;

  bool admissible(const ParamTuple& p) const { return !violation(p); }

  /// Description of the first violated constraint, or nullopt if admissible.
  std::optional<std::string> violation(const ParamTuple& p) const {
    if (p.n < n_min) return "n < " + std::to_string(n_min);
    if (s_even && p.s % 2 != 0) return "s must be even";
    if (r_nonzero && p.r == 0) return "r must be nonzero";
    if (r_plus_s_nonzero && p.r + p.s == 0) return "r+s must be nonzero";
    return std::nullopt;
  }

  /// Short flag list for listings, e.g. "s even; r nonzero". "-" if free.
  std::string flags() const {
    std::string out;
    auto add = [&out](const char* f) {
      if (!out.empty()) out += "; ";
      out += f;
    };
    if (s_even) add("s even");
    if (r_nonzero) add("r nonzero");
    if (r_plus_s_nonzero) add("r+s nonzero");
    return out.empty() ? "-" : out;
  }
};

enum class Side { lhs, mid, rhs };

using Evaluator = std::function<Rational(const ParamTuple&)>;

struct IdentityDescriptor {
  std::string id;       ///< stable key, e.g. "THM1-F"
  Family family;
  std::string anchor;   ///< human-readable citation of the displayed equation
  ParamSpace params;
  Evaluator lhs;
  Evaluator mid;        ///< set only for printed three-expression chains
  Evaluator rhs;

  bool three_way() const { return static_cast<bool>(mid); }
};

/// The full fixed catalog, deterministic order, unique ids.
const std::vector<IdentityDescriptor>& catalog();

/// Lookup by id; nullptr when unknown.
const IdentityDescriptor* find_identity(std::string_view id);

/// Evaluates one side on an admissible tuple. Throws std::domain_error naming
/// the violated constraint on inadmissible tuples, std::invalid_argument for
/// Side::mid on a two-way entry.
Rational eval_side(const IdentityDescriptor& desc, Side side, const ParamTuple& p);

}  // namespace fibsum

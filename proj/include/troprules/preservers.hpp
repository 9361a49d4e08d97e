#ifndef TROPRULES_PRESERVERS_HPP
#define TROPRULES_PRESERVERS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "troprules/central.hpp"
#include "troprules/multiplier.hpp"
#include "troprules/polynomial.hpp"

namespace troprules {

enum class TrialKind { tropical, central };

struct TrialResult {
  enum class Outcome { pass, violation, undecided };
  Outcome outcome = Outcome::pass;
  std::optional<std::size_t> violating_index;
  std::string detail;

  bool passed() const { return outcome == Outcome::pass; }
  bool violated() const { return outcome == Outcome::violation; }
};

// Checks that every tropical (resp. certified central) index of p is again a
// tropical (resp. certified central) index of T_lambda[p]. Central mode
// propagates undecided verdicts instead of reporting them as violations.
TrialResult index_preserver_trial(const MultiplierSeq& lam,
                                  const Polynomial& p, TrialKind kind);

// Lambda-2 membership: 4 lambda_1^2 >= lambda_0 lambda_2 (length 3).
bool lambda2_member(const MultiplierSeq& lam);

// Sufficient condition for Lambda-4+ membership: the explicit five-inequality
// system, the two quartic-surd inequalities decided by exact bracketing
// (length 5).
bool lambda4_member(const MultiplierSeq& lam);

struct SPowerResult {
  Rational s_star;                       // smallest tested s with no violation
  std::optional<Rational> largest_failing_s;
  std::optional<Polynomial> failing_witness;
  long trials_per_s = 0;
  std::uint64_t seed = 0;
  long degree = 0;
};

// Empirical search for the scaling power s making lambda^s pass the
// real-vs-essential-root comparison on random polynomials: doubling to find
// a clean s, then bisection against the largest failing one. Falsification
// evidence only, reproducible from (seed, trials).
SPowerResult s_power_search(const MultiplierSeq& base, long degree,
                            long trials, std::uint64_t seed);

// Shared comparison: do the essential tropical counts of tr^lam dominate the
// nonzero real root counts (with multiplicity, per sign)?
bool essential_counts_dominate(const Polynomial& p, const MultiplierSeq& lam);

}  // namespace troprules

#endif

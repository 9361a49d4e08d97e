#ifndef TROPRULES_WITNESSES_HPP
#define TROPRULES_WITNESSES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "troprules/multiplier.hpp"
#include "troprules/polynomial.hpp"
#include "troprules/sturm.hpp"
#include "troprules/tropical.hpp"

namespace troprules {

// Degree-100 polynomial with 4 simple negative roots, constant and leading
// coefficients exactly 1, all other coefficients in [0, 1). Built from the
// recursion Q1 = x+1, Q_{k+1} = Q_k (x^n + 1) with n the smallest odd
// integer above deg Q_k, substituted x -> x^5, perturbed along powers of
// (x+1) to split three simple roots off the quadruple root at -1, then
// rescaled by an exact 100th power so the normalization stays rational.
Polynomial build_R();

struct CounterexampleRecord {
  Polynomial polynomial;
  std::vector<LogValue> lam_log_entries;
  RootCount real_roots;
  long tropical_root_count = 0;
  long essential_positive = 0;
  long essential_negative = 0;
  long essential_total = 0;
  // construction provenance
  long k = 0;
  long degree = 0;
  Rational delta;
  std::string note;

  bool preserver_violated() const {
    return real_roots.nonzero_total() > essential_total;
  }
};

// P = delta (x^d + 1) + x^k R with delta halved until Sturm certifies four
// simple negative roots; the lambda-tropicalization keeps at most three
// tropical roots, so lambda cannot be a degree-d preserver. Default lambda
// is the flat all-ones sequence.
CounterexampleRecord build_counterexample(
    long k, long d, std::optional<MultiplierSeq> lam = std::nullopt,
    std::optional<Rational> delta = std::nullopt);

struct FuzzViolation {
  std::uint64_t trial = 0;
  Polynomial polynomial;
  long real_positive = 0;
  long real_negative = 0;
  long essential_positive = 0;
  long essential_negative = 0;
};

struct FuzzReport {
  long degree = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  std::vector<FuzzViolation> violations;
};

// Compares nonzero real root counts (with multiplicity, per sign) against
// essential tropical counts of tr^lambda on random polynomials. Violations
// are re-verified from scratch before being reported.
FuzzReport conjecture_fuzz(long degree, long trials, std::uint64_t seed,
                           std::optional<MultiplierSeq> lam = std::nullopt);

}  // namespace troprules

#endif

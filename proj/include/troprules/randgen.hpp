#ifndef TROPRULES_RANDGEN_HPP
#define TROPRULES_RANDGEN_HPP

#include <cstdint>
#include <random>

#include "troprules/multiplier.hpp"
#include "troprules/polynomial.hpp"

namespace troprules {

// Deterministic per-trial stream: trial i of a run seeded with s draws from
// an engine seeded by mix(s, i), so trials are reproducible and independent
// of evaluation order.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t index)
      : eng_(mix_seed(seed, index)) {}

  std::uint64_t bits() { return eng_(); }
  long uniform(long lo, long hi) {  // inclusive
    return std::uniform_int_distribution<long>(lo, hi)(eng_);
  }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0, 1)(eng_) < p;
  }

 private:
  std::mt19937_64 eng_;
};

// Coefficient magnitude with log spanning roughly [-30, 30]: an odd 21-bit
// mantissa times a power of two. Unit-scale coefficients never exercise hull
// diversity, so the spread matters more than the shape.
Rational random_magnitude(TrialRng& rng);

// Degree-d polynomial, leading coefficient nonzero: 70% dense with random
// signs, 20% sparse support, 10% engineered near-double-root (square of a
// random factor times random factors).
Polynomial random_polynomial(TrialRng& rng, long degree);

// Positive rational sequences for preserver trials.
MultiplierSeq random_log_concave_sequence(TrialRng& rng, long degree,
                                          bool strict = false);
MultiplierSeq random_positive_sequence(TrialRng& rng, long degree);
// A random sequence guaranteed to violate log-concavity somewhere.
MultiplierSeq random_non_log_concave_sequence(TrialRng& rng, long degree);

}  // namespace troprules

#endif

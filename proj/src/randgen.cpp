#include "troprules/randgen.hpp"

#include <vector>

namespace troprules {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rational random_magnitude(TrialRng& rng) {
  long e = rng.uniform(-43, 43);
  long mantissa = rng.uniform(1 << 20, (1 << 21) - 1) | 1;
  return Rational(mantissa) * dyadic(e - 20);
}

namespace {

Rational random_signed_coeff(TrialRng& rng) {
  Rational m = random_magnitude(rng);
  return rng.chance(0.5) ? m : -m;
}

Polynomial random_dense(TrialRng& rng, long degree) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = random_signed_coeff(rng);
  return Polynomial(std::move(c));
}

Polynomial random_sparse(TrialRng& rng, long degree) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
  c[static_cast<std::size_t>(degree)] = random_signed_coeff(rng);
  for (long k = 0; k < degree; ++k)
    if (rng.chance(0.5)) c[static_cast<std::size_t>(k)] = random_signed_coeff(rng);
  return Polynomial(std::move(c));
}

Polynomial random_near_double_root(TrialRng& rng, long degree) {
  // square of a random linear or quadratic factor, padded by random factors
  long base_deg = (degree >= 4 && rng.chance(0.5)) ? 2 : 1;
  std::vector<Rational> base(static_cast<std::size_t>(base_deg) + 1);
  for (auto& v : base) v = random_signed_coeff(rng);
  Polynomial p = Polynomial(base) * Polynomial(base);
  while (p.degree() + 2 <= degree) {
    Polynomial q({random_signed_coeff(rng), random_signed_coeff(rng),
                  random_signed_coeff(rng)});
    p = p * q;
  }
  while (p.degree() + 1 <= degree) {
    Polynomial q({random_signed_coeff(rng), random_signed_coeff(rng)});
    p = p * q;
  }
  return p;
}

}  // namespace

Polynomial random_polynomial(TrialRng& rng, long degree) {
  if (degree < 1) return Polynomial({random_signed_coeff(rng)});
  long roll = rng.uniform(0, 99);
  if (degree >= 2 && roll < 10) return random_near_double_root(rng, degree);
  if (roll < 30) return random_sparse(rng, degree);
  return random_dense(rng, degree);
}

MultiplierSeq random_log_concave_sequence(TrialRng& rng, long degree,
                                          bool strict) {
  // lambda_k / lambda_{k-1} non-increasing <=> log-concave
  std::vector<Rational> ratios;
  for (long k = 0; k < degree; ++k) ratios.push_back(random_magnitude(rng));
  std::sort(ratios.begin(), ratios.end(),
            [](const Rational& a, const Rational& b) { return a > b; });
  if (strict) {
    // enforce strictly decreasing ratios
    for (std::size_t i = 1; i < ratios.size(); ++i)
      if (ratios[i] >= ratios[i - 1]) ratios[i] = ratios[i - 1] * frac(7, 8);
  }
  std::vector<Rational> vals{random_magnitude(rng)};
  for (const auto& r : ratios) vals.push_back(vals.back() * r);
  return MultiplierSeq::from_rationals(vals);
}

MultiplierSeq random_positive_sequence(TrialRng& rng, long degree) {
  std::vector<Rational> vals;
  for (long k = 0; k <= degree; ++k) vals.push_back(random_magnitude(rng));
  return MultiplierSeq::from_rationals(vals);
}

MultiplierSeq random_non_log_concave_sequence(TrialRng& rng, long degree) {
  if (degree < 2)
    throw std::invalid_argument("need degree >= 2 to violate log-concavity");
  for (;;) {
    MultiplierSeq s = random_positive_sequence(rng, degree);
    if (!is_log_concave(s)) return s;
    // force a violation at a random interior index
    auto vals = *s.rational_values();
    std::size_t k = static_cast<std::size_t>(rng.uniform(1, degree - 1));
    vals[k] = vals[k] / (Rational(2) + abs(vals[k - 1]) + abs(vals[k + 1]));
    MultiplierSeq forced = MultiplierSeq::from_rationals(vals);
    if (!is_log_concave(forced)) return forced;
  }
}

}  // namespace troprules

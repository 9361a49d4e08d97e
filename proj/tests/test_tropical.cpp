#include <doctest.h>

#include <random>

#include "troprules/multiplier.hpp"
#include "troprules/polynomial.hpp"
#include "troprules/sturm.hpp"
#include "troprules/tropical.hpp"

using namespace troprules;

namespace {

// Brute-force dominance oracle for tropical indices: k qualifies iff the
// constraints k*xi + L_k >= i*xi + L_i admit a common xi, i.e. the largest
// lower crossover does not exceed the smallest upper crossover. Tests the
// dominance definition directly, no hull walking.
bool dominance_oracle_is_index(const std::vector<std::optional<LogValue>>& pts,
                               std::size_t k) {
  if (!pts[k]) return false;
  std::optional<LogValue> lo, hi;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i == k || !pts[i]) continue;
    // (k - i) xi >= L_i - L_k
    Rational gap(static_cast<long>(k) - static_cast<long>(i));
    LogValue bound = (*pts[i] - *pts[k]) * (Rational(1) / gap);
    if (k > i) {
      if (!lo || LogValue::cmp(bound, *lo) == Ordering::greater) lo = bound;
    } else {
      if (!hi || LogValue::cmp(bound, *hi) == Ordering::less) hi = bound;
    }
  }
  if (!lo || !hi) return true;  // one-sided constraints always feasible
  return LogValue::cmp(*lo, *hi) != Ordering::greater;
}

std::vector<std::size_t> oracle_indices(
    const std::vector<std::optional<LogValue>>& pts) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < pts.size(); ++k)
    if (pts[k] && dominance_oracle_is_index(pts, k)) out.push_back(k);
  return out;
}

Polynomial P(std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("tropicalize worked examples") {
  TropicalPolynomial t = tropicalize(P({1, 0, 1}));
  CHECK(t.has_term(0));
  CHECK_FALSE(t.has_term(1));
  CHECK(t.has_term(2));
  CHECK(t.logcoefs()[0]->is_zero());

  // 1 + x + x^2/4 under dagger: logcoefs (0, -1, ln(1/4) - 4)
  Polynomial p({Rational(1), Rational(1), frac(1, 4)});
  TropicalPolynomial td = tropicalize(p, MultiplierSeq::dagger(2));
  CHECK(*td.logcoefs()[0] == LogValue());
  CHECK(*td.logcoefs()[1] == LogValue(Rational(-1)));
  CHECK(*td.logcoefs()[2] ==
        LogValue(Rational(-4)) + LogValue::ln(frac(1, 4)));

  TropicalPolynomial t3 = tropicalize(P({0, 3}));
  CHECK_FALSE(t3.has_term(0));
  CHECK(*t3.logcoefs()[1] == LogValue::ln(Rational(3)));
}

TEST_CASE("tropical indices on the section-1 examples") {
  CHECK(tropical_indices(tropicalize(P({1, 0, 1}))) ==
        std::vector<std::size_t>{0, 2});
  // midpoint strictly below the chord: ln 8 / 2 > 0
  CHECK(tropical_indices(tropicalize(P({1, 1, 8}))) ==
        std::vector<std::size_t>{0, 2});
  Polynomial p({Rational(1), Rational(1), frac(1, 4)});
  CHECK(tropical_indices(tropicalize(p, MultiplierSeq::dagger(2))) ==
        std::vector<std::size_t>{0, 1, 2});
  // collinear points are boundary points
  CHECK(tropical_indices(tropicalize(P({1, 1, 1}))) ==
        std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("tropical roots and classification on the worked examples") {
  // 1 + x^2: one simple non-essential root at xi = 0
  TropicalAnalysis a1 = tropical_roots(tropicalize(P({1, 0, 1})));
  REQUIRE(a1.roots.size() == 1);
  CHECK(a1.roots[0].xi.is_zero());
  CHECK(a1.roots[0].multiplicity == 1);
  CHECK(a1.roots[0].cls() == RootClass::non_essential);
  CHECK(a1.essential_total == 0);

  // 1 - x^2: one positive-negative root, essential total 2
  TropicalAnalysis a2 = tropical_roots(tropicalize(P({1, 0, -1})));
  REQUIRE(a2.roots.size() == 1);
  CHECK(a2.roots[0].cls() == RootClass::positive_negative);
  CHECK(a2.essential_total == 2);
  CHECK(a2.essential_positive == 1);
  CHECK(a2.essential_negative == 1);

  // 1 + x + x^2/4 under dagger: two simple roots, both negative class
  Polynomial p({Rational(1), Rational(1), frac(1, 4)});
  TropicalAnalysis a3 = tropical_roots(tropicalize(p, MultiplierSeq::dagger(2)));
  REQUIRE(a3.roots.size() == 2);
  CHECK(a3.roots[0].cls() == RootClass::negative);
  CHECK(a3.roots[1].cls() == RootClass::negative);
  CHECK(a3.essential_negative == 2);
  CHECK(a3.essential_positive == 0);
  CHECK(a3.roots[0].xi == LogValue(Rational(1)));
  CHECK(a3.roots[1].xi == LogValue(Rational(3)) + LogValue::ln(Rational(4)));
}

TEST_CASE("collinear run merges into one root with summed multiplicity") {
  TropicalAnalysis an = tropical_roots(tropicalize(P({1, 1, 1})));
  REQUIRE(an.roots.size() == 1);
  CHECK(an.roots[0].multiplicity == 2);
  CHECK(an.roots[0].xi.is_zero());
  // signs (+,+,+), both gaps odd with equal signs: negative class twice
  CHECK(an.essential_negative == 2);
}

TEST_CASE("hull agrees with the dominance oracle on random polynomials") {
  std::mt19937_64 eng(31);
  std::uniform_int_distribution<long> degd(1, 15);
  std::uniform_int_distribution<long> expo(-43, 43);
  std::uniform_int_distribution<long> mant(1, 1 << 20);
  std::uniform_int_distribution<int> zero(0, 4);
  for (int trial = 0; trial < 2000; ++trial) {
    long d = degd(eng);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
    for (auto& v : c)
      if (zero(eng) != 0) v = Rational(mant(eng)) * dyadic(expo(eng));
    if (sgn(c.back()) == 0) c.back() = Rational(mant(eng)) * dyadic(expo(eng));
    Polynomial p(std::move(c));
    TropicalPolynomial t = tropicalize(p);
    CHECK(tropical_indices(t) == oracle_indices(t.logcoefs()));
  }
}

TEST_CASE("multiplicity sum and descartes consistency invariants") {
  std::mt19937_64 eng(37);
  std::uniform_int_distribution<long> degd(1, 10);
  std::uniform_int_distribution<long> coefd(-60, 60);
  for (int trial = 0; trial < 3000; ++trial) {
    long d = degd(eng);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = Rational(coefd(eng));
    if (sgn(c.back()) == 0) c.back() = Rational(1);
    Polynomial p(std::move(c));
    TropicalPolynomial t = tropicalize(p);
    TropicalAnalysis an = tropical_roots(t);
    CHECK(an.multiplicity_sum() ==
          static_cast<long>(an.indices.size()) - 1);
    CHECK(an.essential_total <= p.degree());
    auto [dp, dn] = descartes_counts(p);
    CHECK(an.essential_positive <= dp);
    CHECK(an.essential_negative <= dn);
  }
}

TEST_CASE("multiplier sequence basics") {
  MultiplierSeq dag = MultiplierSeq::dagger(4);
  CHECK(dag.log_entry(0) == LogValue());
  CHECK(dag.log_entry(1) == LogValue(Rational(-1)));
  CHECK(dag.log_entry(4) == LogValue(Rational(-16)));
  CHECK(is_log_concave(dag));

  CHECK(is_log_concave(
      MultiplierSeq::from_rationals({Rational(1), Rational(1), Rational(1)})));
  CHECK_FALSE(is_log_concave(
      MultiplierSeq::from_rationals({Rational(1), Rational(1), Rational(3)})));

  CHECK(truncation_tropically_real_rooted(
      MultiplierSeq::from_rationals({Rational(1), Rational(1), Rational(1)})));
  CHECK_FALSE(truncation_tropically_real_rooted(
      MultiplierSeq::from_rationals({Rational(1), Rational(1), Rational(3)})));
  CHECK(truncation_tropically_real_rooted(MultiplierSeq::from_rationals(
      {Rational(1), Rational(3), Rational(3), Rational(1)})));
}

TEST_CASE("two_delta evaluates to the documented value at d = 4") {
  // 4 ln 144 + 5 ln 4 + ln 4 = 28.1970193...
  DyadicInterval d = two_delta(4).approx(48);
  Rational target = frac(2819702, 100000);
  CHECK(abs(d.midpoint() - target) <= frac(1, 100000));
  CHECK(d.width() < frac(1, 1000000));
}

TEST_CASE("delta sequence gaps strictly exceed two_delta") {
  for (long d = 1; d <= 6; ++d) {
    MultiplierSeq lam = MultiplierSeq::delta(d);
    LogValue bound = two_delta(d);
    for (long k = 1; k < d; ++k) {
      LogValue gap = lam.log_entry(static_cast<std::size_t>(k)) * Rational(2) -
                     lam.log_entry(static_cast<std::size_t>(k - 1)) -
                     lam.log_entry(static_cast<std::size_t>(k + 1));
      CHECK(LogValue::cmp(gap, bound) == Ordering::greater);
      // gaps are all equal by construction: 2 * Delta_d * strictness
      LogValue expected = bound * MultiplierSeq::default_strictness();
      CHECK(gap == expected);
    }
  }
}

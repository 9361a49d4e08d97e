#include <doctest.h>

#include <random>

#include "troprules/central.hpp"
#include "troprules/sturm.hpp"

using namespace troprules;

namespace {

Polynomial P(std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Rational evaluate_rest(const Polynomial& p, std::size_t k, const Rational& x) {
  Rational acc(0);
  Rational xp(1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i != k) acc += abs(p.coeffs()[i]) * xp;
    xp *= x;
  }
  return acc;
}

Rational term_at(const Polynomial& p, std::size_t k, const Rational& x) {
  return abs(p.coeff(k)) * pow_rational(x, static_cast<long>(k));
}

}  // namespace

TEST_CASE("trinomial with the doubled middle is centrally tangent at 1") {
  // x + 2x^2 + x^3, k = 2: equality 2 >= 1 + 1 at x = 1
  auto v = central_index_check(P({0, 1, 2, 1}), 2);
  CHECK(v.status == CentralStatus::certified_yes);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == 1);
}

TEST_CASE("middle of 1 + x + x^2 is not central") {
  auto v = central_index_check(P({1, 1, 1}), 1);
  CHECK(v.status == CentralStatus::certified_no);
}

TEST_CASE("dominant middle coefficient is central with a verified witness") {
  auto v = central_index_check(P({1, 100, 1}), 1);
  CHECK(v.status == CentralStatus::certified_yes);
  REQUIRE(v.witness.has_value());
  Polynomial p = P({1, 100, 1});
  CHECK(term_at(p, 1, *v.witness) >= evaluate_rest(p, 1, *v.witness));
}

TEST_CASE("boundary indices are always central") {
  Polynomial p = P({7, -3, 5});
  auto v0 = central_index_check(p, 0);
  auto v2 = central_index_check(p, 2);
  CHECK(v0.status == CentralStatus::certified_yes);
  CHECK(v2.status == CentralStatus::certified_yes);
  CHECK(term_at(p, 0, *v0.witness) >= evaluate_rest(p, 0, *v0.witness));
  CHECK(term_at(p, 2, *v2.witness) >= evaluate_rest(p, 2, *v2.witness));
}

TEST_CASE("sign independence worked examples") {
  // (1 + x)^2 is sign-independently real-rooted
  CHECK(sign_independently_real_rooted(P({1, 2, 1})).verdict ==
        CentralStatus::certified_yes);
  // 1 + x + x^2 is not
  CHECK(sign_independently_real_rooted(P({1, 1, 1})).verdict ==
        CentralStatus::certified_no);
  // (1 + x)^3 is real-rooted but NOT sign-independently so: flipping the
  // linear coefficient gives 1 - 3x + 3x^2 + x^3 with negative discriminant,
  // and indeed index 1 is not central (max of 3y - 1 - 3y^2 - y^3 is < 0)
  CHECK(sign_independently_real_rooted(P({1, 3, 3, 1})).verdict ==
        CentralStatus::certified_no);
  {
    RootCount rc = sturm_count(P({1, -3, 3, 1}), CountMode::with_multiplicity);
    CHECK(rc.positive + rc.negative == 1);
  }
  // a strongly log-concave profile is
  CHECK(sign_independently_real_rooted(P({1, 10, 10, 1})).verdict ==
        CentralStatus::certified_yes);
  CHECK_THROWS_AS(sign_independently_real_rooted(P({1, 0, 1})),
                  std::invalid_argument);
}

TEST_CASE("proposition equivalence against brute-force sign flips") {
  std::mt19937_64 eng(41);
  std::uniform_int_distribution<long> degd(2, 6);
  std::uniform_int_distribution<long> expo(-8, 8);
  std::uniform_int_distribution<long> mant(1, 9);
  long tested = 0;
  for (int trial = 0; trial < 300; ++trial) {
    long d = degd(eng);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = Rational(mant(eng)) * dyadic(expo(eng));
    Polynomial p(std::move(c));
    auto res = sign_independently_real_rooted(p);
    if (res.verdict == CentralStatus::undecided) continue;
    ++tested;
    // brute force: all sign flips real-rooted by Sturm?
    bool all_real_rooted = true;
    for (long mask = 0; mask < (1L << (d + 1)); ++mask) {
      std::vector<Rational> fc(p.coeffs());
      for (long b = 0; b <= d; ++b)
        if ((mask >> b) & 1) fc[static_cast<std::size_t>(b)] = -fc[static_cast<std::size_t>(b)];
      Polynomial flipped(std::move(fc));
      RootCount rc = sturm_count(flipped, CountMode::with_multiplicity);
      if (rc.positive + rc.negative + rc.zero_multiplicity != d) {
        all_real_rooted = false;
        break;
      }
    }
    bool claimed = res.verdict == CentralStatus::certified_yes;
    CHECK(claimed == all_real_rooted);
  }
  CHECK(tested >= 250);
}

TEST_CASE("slopes promotion worked examples") {
  // 1 + 100x + x^2 at x = 1: tropical roots at +-ln 100, both > ln 3 away
  auto [k1, ok1] = slopes_central_promotion(P({1, 100, 1}), Rational(1));
  CHECK(k1 == 1);
  CHECK(ok1);
  // 1 + x^2 at x = 1: the tropical root sits at 0
  CHECK_THROWS_AS(slopes_central_promotion(P({1, 0, 1}), Rational(1)),
                  std::invalid_argument);
  // 1 + x at x = 100
  auto [k2, ok2] = slopes_central_promotion(P({1, 1}), Rational(100));
  CHECK(k2 == 1);
  CHECK(ok2);
}

TEST_CASE("promotion is sound on random clear points") {
  std::mt19937_64 eng(43);
  std::uniform_int_distribution<long> degd(1, 8);
  std::uniform_int_distribution<long> expo(-20, 20);
  std::uniform_int_distribution<long> mant(1, 1000);
  std::uniform_int_distribution<long> xe(-25, 25);
  long promoted = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    long d = degd(eng);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = Rational(mant(eng)) * dyadic(expo(eng));
    Polynomial p(std::move(c));
    Rational x = dyadic(xe(eng));
    try {
      auto [k, ok] = slopes_central_promotion(p, x);
      CHECK(ok);  // a false here is a library defect by the lemma
      ++promoted;
    } catch (const std::invalid_argument&) {
      // x too close to a root; the precondition correctly rejected it
    }
  }
  CHECK(promoted > 500);
}

TEST_CASE("bracketed central check matches the exact path on rationals") {
  std::mt19937_64 eng(47);
  std::uniform_int_distribution<long> degd(2, 6);
  std::uniform_int_distribution<long> expo(-15, 15);
  std::uniform_int_distribution<long> mant(1, 99);
  for (int trial = 0; trial < 200; ++trial) {
    long d = degd(eng);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = Rational(mant(eng)) * dyadic(expo(eng));
    Polynomial p(c);
    std::vector<std::optional<LogValue>> log_abs;
    for (const auto& v : c) log_abs.emplace_back(LogValue::ln(abs(v)));
    for (std::size_t k = 0; k <= static_cast<std::size_t>(d); ++k) {
      auto exact = central_index_check(p, k);
      auto bracketed = central_index_check_bracketed(log_abs, k);
      if (exact.status == CentralStatus::undecided ||
          bracketed == CentralStatus::undecided)
        continue;  // tangency-adjacent cases may stay open in brackets
      CHECK(exact.status == bracketed);
    }
  }
}

#include <doctest.h>

#include <random>

#include "troprules/polynomial.hpp"
#include "troprules/sturm.hpp"

using namespace troprules;

namespace {

Polynomial P(std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

// Independent root isolator: Descartes/bisection (Vincent-Collins-Akritas)
// on (0, 1) after mapping, entirely separate from the Sturm path.
long descartes_variations_01(const Polynomial& p) {
  // variations of (1+x)^d * p(1/(1+x)) = sum_j a_j (1+x)^(d-j):
  // root count bound on (0, 1), exact when 0 or 1
  long d = p.degree();
  std::vector<Rational> out(static_cast<std::size_t>(d) + 1, Rational(0));
  std::vector<Rational> binrow{Rational(1)};
  for (long e = 0; e <= d; ++e) {  // e = d - j, power of (1+x)
    const Rational& a = p.coeff(static_cast<std::size_t>(d - e));
    if (sgn(a) != 0)
      for (long t = 0; t <= e; ++t)
        out[static_cast<std::size_t>(t)] += a * binrow[static_cast<std::size_t>(t)];
    binrow.push_back(Rational(0));
    for (long t = e + 1; t >= 1; --t)
      binrow[static_cast<std::size_t>(t)] += binrow[static_cast<std::size_t>(t - 1)];
  }
  long var = 0;
  int last = 0;
  for (const auto& c : out) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

// distinct roots of squarefree p in the open interval (lo, hi)
long vca_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
  // map (0, 1) onto (lo, hi): shifted(x) = p(lo + (hi - lo) x)
  Polynomial shifted;
  {
    Polynomial acc;
    Polynomial lin({lo, hi - lo});
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
      acc = acc * lin + Polynomial::constant(*it);
    shifted = acc;
  }
  long v = descartes_variations_01(shifted);
  if (v == 0) return 0;
  if (v == 1) return 1;
  Rational mid = (lo + hi) / 2;
  long at_mid = sgn(p(mid)) == 0 ? 1 : 0;
  return vca_count(p, lo, mid) + at_mid + vca_count(p, mid, hi);
}

long vca_positive(const Polynomial& p) {
  Polynomial s = squarefree_part(p.shift_down(p.valuation()));
  if (s.degree() < 1) return 0;
  Rational bound = cauchy_root_bound(s);
  long at_bound = sgn(s(bound)) == 0 ? 1 : 0;  // cannot happen, roots < bound
  return vca_count(s, Rational(0), bound) + at_bound;
}

long vca_negative(const Polynomial& p) { return vca_positive(p.reflect()); }

Polynomial random_poly(std::mt19937_64& eng, long maxdeg) {
  std::uniform_int_distribution<long> degd(1, maxdeg);
  std::uniform_int_distribution<long> coefd(-40, 40);
  long d = degd(eng);
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = Rational(coefd(eng));
  if (sgn(c.back()) == 0) c.back() = Rational(1);
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("sturm_count on factored examples") {
  // x^3 - x = x(x-1)(x+1)
  RootCount rc = sturm_count(P({0, -1, 0, 1}));
  CHECK(rc.positive == 1);
  CHECK(rc.negative == 1);
  CHECK(rc.zero_multiplicity == 1);

  // 1 + x + x^2/4 = (1 + x/2)^2: double root at -2
  RootCount rc2 = sturm_count(
      Polynomial({Rational(1), Rational(1), frac(1, 4)}),
      CountMode::with_multiplicity);
  CHECK(rc2.negative == 2);
  CHECK(rc2.positive == 0);
  RootCount rc2d = sturm_count(
      Polynomial({Rational(1), Rational(1), frac(1, 4)}), CountMode::distinct);
  CHECK(rc2d.negative == 1);

  // 1 + x + x^2: no real roots
  RootCount rc3 = sturm_count(P({1, 1, 1}));
  CHECK(rc3.positive == 0);
  CHECK(rc3.negative == 0);

  CHECK_THROWS_AS(sturm_count(Polynomial()), std::domain_error);
}

TEST_CASE("interval counts") {
  CHECK(sturm_count_interval(P({-2, 0, 1}), Rational(1), Rational(2)) == 1);
  CHECK(sturm_count_interval(P({1, 0, 1}), Rational(-10), Rational(10)) == 0);
  // (x+1)(x+2)(x+3) on (-4, 0)
  Polynomial p = P({1, 1}) * P({2, 1}) * P({3, 1});
  CHECK(sturm_count_interval(p, Rational(-4), Rational(0)) == 3);
  // endpoint roots are excluded by deflation
  CHECK(sturm_count_interval(p, Rational(-3), Rational(0)) == 2);
  CHECK(sturm_count_interval(p, Rational(-3), Rational(-1)) == 1);
}

TEST_CASE("squarefree decomposition") {
  Polynomial p = P({1, 1}) * P({1, 1}) * P({-2, 0, 1});
  auto dec = squarefree_decomposition(p);
  long total = 0;
  for (const auto& [f, m] : dec) total += m * f.degree();
  CHECK(total == p.degree());
  bool saw_double = false;
  for (const auto& [f, m] : dec)
    if (m == 2 && f.degree() == 1) saw_double = true;
  CHECK(saw_double);
}

TEST_CASE("generalized Rolle inequality on random triples") {
  std::mt19937_64 eng(101);
  std::uniform_int_distribution<long> kd(0, 6);
  std::uniform_int_distribution<long> bd(1, 12);
  long checked = 0;
  for (int i = 0; i < 2000; ++i) {
    Polynomial p = random_poly(eng, 8);
    long lo_n = bd(eng), width = bd(eng);
    Rational lo(lo_n), hi(lo_n + width);
    std::size_t k = static_cast<std::size_t>(kd(eng));
    Polynomial lk = rolle_operator(p, k);
    if (lk.is_zero()) continue;
    long roots_p = sturm_count_interval(p, lo, hi);
    long roots_lk = sturm_count_interval(lk, lo, hi);
    CHECK(roots_lk >= roots_p - 1);
    ++checked;
  }
  CHECK(checked > 1500);
}

TEST_CASE("descartes bound dominates and matches parity") {
  std::mt19937_64 eng(103);
  for (int i = 0; i < 2000; ++i) {
    Polynomial p = random_poly(eng, 10);
    Polynomial q = p.shift_down(p.valuation());
    auto [pos_bound, neg_bound] = descartes_counts(q);
    RootCount rc = sturm_count(q, CountMode::with_multiplicity);
    CHECK(rc.positive <= pos_bound);
    CHECK((pos_bound - rc.positive) % 2 == 0);
    CHECK(rc.negative <= neg_bound);
    CHECK((neg_bound - rc.negative) % 2 == 0);
  }
}

TEST_CASE("sturm agrees with the Descartes-bisection isolator") {
  std::mt19937_64 eng(107);
  for (int i = 0; i < 2000; ++i) {
    Polynomial p = random_poly(eng, 12);
    RootCount rc = sturm_count(p, CountMode::distinct);
    CHECK(rc.positive == vca_positive(p));
    CHECK(rc.negative == vca_negative(p));
  }
}

TEST_CASE("rolle count check from the worked example") {
  // p = x^2 - 4 has one root in (1, 3); L_0(p) = 2x^2 has none; 0 >= 1 - 1
  Polynomial p = P({-4, 0, 1});
  CHECK(sturm_count_interval(p, Rational(1), Rational(3)) == 1);
  Polynomial l0 = rolle_operator(p, 0);
  CHECK(sturm_count_interval(l0, Rational(1), Rational(3)) == 0);
}

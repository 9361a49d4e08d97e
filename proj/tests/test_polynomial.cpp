#include <doctest.h>

#include "troprules/polynomial.hpp"

using namespace troprules;

namespace {
Polynomial P(std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}
}  // namespace

TEST_CASE("parser handles the inline syntax") {
  CHECK(parse_polynomial("1 - x^2") == P({1, 0, -1}));
  CHECK(parse_polynomial("x + 2x^2 + x^3") == P({0, 1, 2, 1}));
  CHECK(parse_polynomial("1 + x + x^2/ 1") == P({1, 1, 1}));
  CHECK(parse_polynomial("1 + x + x^2/4") ==
        Polynomial({Rational(1), Rational(1), frac(1, 4)}));
  CHECK(parse_polynomial("3/2 x^3 - 7") ==
        Polynomial({Rational(-7), Rational(0), Rational(0), frac(3, 2)}));
  CHECK(parse_polynomial("0.25x") == Polynomial({Rational(0), frac(1, 4)}));
  CHECK(parse_polynomial("2*x^2") == P({0, 0, 2}));
  CHECK(parse_polynomial("-x") == P({0, -1}));
  CHECK_THROWS_AS(parse_polynomial("1 + $"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
}

TEST_CASE("coefficient-level transforms") {
  Polynomial p = parse_polynomial("1 + 2x + 3x^2");
  CHECK(p.reflect() == parse_polynomial("1 - 2x + 3x^2"));
  CHECK(p.substitute_power(2) == parse_polynomial("1 + 2x^2 + 3x^4"));
  CHECK(p.scale_arg(Rational(2)) == parse_polynomial("1 + 4x + 12x^2"));
  CHECK(p.mul_power(2) == parse_polynomial("x^2 + 2x^3 + 3x^4"));
  CHECK(P({0, 0, 5, 1}).valuation() == 2);
  CHECK(P({0, 0, 5, 1}).shift_down(2) == P({5, 1}));
}

TEST_CASE("multiplication reproduces the tower step") {
  // (x+1)(x^3+1) = 1 + x + x^3 + x^4
  CHECK(P({1, 1}) * P({1, 0, 0, 1}) == P({1, 1, 0, 1, 1}));
  CHECK(parse_polynomial("1 - x").reflect() == parse_polynomial("1 + x"));
  Polynomial sub = parse_polynomial("1 + x").substitute_power(2);
  CHECK(sub == parse_polynomial("1 + x^2"));
}

TEST_CASE("division") {
  Polynomial prod = P({1, 1}) * P({-2, 0, 1});
  CHECK(prod.divide_exact(P({1, 1})) == P({-2, 0, 1}));
  auto [q, r] = Polynomial::div_rem(P({1, 0, 0, 1}), P({1, 1}));
  CHECK(r.is_zero());
  CHECK(q == P({1, -1, 1}));
}

TEST_CASE("rolle operator") {
  // L_1(1 + x + x^2) = -1 + x^2
  CHECK(rolle_operator(P({1, 1, 1}), 1) == P({-1, 0, 1}));
  // L_0(1 + x + x^2) = x + 2x^2
  CHECK(rolle_operator(P({1, 1, 1}), 0) == P({0, 1, 2}));
  // degree drops only when k equals the degree
  CHECK(rolle_operator(P({1, 1, 1}), 2).degree() == 1);
  CHECK(rolle_operator(P({1, 1, 1}), 1).degree() == 2);
}

TEST_CASE("rolle operator commutes with reflection") {
  // L_k(p(-x))(x) = (L_k p)(-x) coefficientwise
  for (std::size_t k = 0; k <= 3; ++k) {
    Polynomial p = P({3, -2, 5, 7});
    Polynomial lhs = rolle_operator(p.reflect(), k);
    Polynomial rhs = rolle_operator(p, k).reflect();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("descartes counts") {
  CHECK(descartes_counts(parse_polynomial("1 - x")) == std::pair<long, long>{1, 0});
  CHECK(descartes_counts(parse_polynomial("1 - x^2")) == std::pair<long, long>{1, 1});
  CHECK(descartes_counts(parse_polynomial("1 + x + x^2")) ==
        std::pair<long, long>{0, 2});
  CHECK_THROWS_AS(descartes_counts(Polynomial()), std::domain_error);
}

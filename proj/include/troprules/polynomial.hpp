#ifndef TROPRULES_POLYNOMIAL_HPP
#define TROPRULES_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "troprules/rational.hpp"

namespace troprules {

// Dense univariate polynomial over Q, coefficients indexed 0..degree.
// Leading coefficient nonzero unless the polynomial is identically zero
// (represented by an empty coefficient vector).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(Rational v) { return Polynomial({std::move(v)}); }
  static Polynomial monomial(std::size_t exp, Rational coef);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational(0);
  }
  const Rational& leading() const { return c_.back(); }

  // smallest exponent with nonzero coefficient (0 for the zero polynomial)
  std::size_t valuation() const;

  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  Polynomial reflect() const;                       // p(-x)
  Polynomial substitute_power(std::size_t n) const; // p(x^n)
  Polynomial scale_arg(const Rational& c) const;    // p(c*x)
  Polynomial mul_power(std::size_t k) const;        // x^k * p(x)
  Polynomial shift_down(std::size_t k) const;       // p / x^k, requires valuation >= k

  // exact division; throws if not divisible
  Polynomial divide_exact(const Polynomial& divisor) const;
  static std::pair<Polynomial, Polynomial> div_rem(const Polynomial& a,
                                                   const Polynomial& b);

  std::string to_string() const;

 private:
  std::vector<Rational> c_;
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
};

// L_k: the weighted derivative sending sum a_j x^j to sum (j-k) a_j x^j,
// equivalently x^(k+1) * (x^-k * p)'.
Polynomial rolle_operator(const Polynomial& p, std::size_t k);

// Descartes sign-variation bounds: (variations of {a_k}, variations of
// {(-1)^k a_k}), zeros skipped.
std::pair<long, long> descartes_counts(const Polynomial& p);

// Parses the CLI inline syntax: rational/decimal coefficients, ^ powers,
// implicit multiplication, e.g. "1 - x^2", "3/2 x^3 + 0.25x - 7".
Polynomial parse_polynomial(const std::string& text);

}  // namespace troprules

#endif

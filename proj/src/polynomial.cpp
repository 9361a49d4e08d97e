#include "troprules/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace troprules {

Polynomial Polynomial::monomial(std::size_t exp, Rational coef) {
  if (sgn(coef) == 0) return Polynomial();
  std::vector<Rational> c(exp + 1, Rational(0));
  c[exp] = std::move(coef);
  return Polynomial(std::move(c));
}

std::size_t Polynomial::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return i;
  return 0;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> s(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) s[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) s[i] += o.c_[i];
  return Polynomial(std::move(s));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> s = c_;
  for (auto& v : s) v = -v;
  return Polynomial(std::move(s));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> s(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) s[i + j] += c_[i] * o.c_[j];
  }
  return Polynomial(std::move(s));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  if (sgn(s) == 0) return Polynomial();
  std::vector<Rational> out = c_;
  for (auto& v : out) v *= s;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::reflect() const {
  std::vector<Rational> out = c_;
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::substitute_power(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("substitute_power: n must be >= 1");
  if (is_zero()) return Polynomial();
  std::vector<Rational> out(n * (c_.size() - 1) + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * n] = c_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scale_arg(const Rational& c) const {
  std::vector<Rational> out = c_;
  Rational p(1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] *= p;
    p *= c;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::mul_power(std::size_t k) const {
  if (is_zero()) return Polynomial();
  std::vector<Rational> out(c_.size() + k, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shift_down(std::size_t k) const {
  if (k == 0) return *this;
  if (valuation() < k)
    throw std::invalid_argument("shift_down: valuation too small");
  std::vector<Rational> out(c_.begin() + static_cast<long>(k), c_.end());
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::div_rem(const Polynomial& a,
                                                      const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rational> rem = a.c_;
  long db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1,
                            Rational(0));
  for (long i = a.degree(); i >= db; --i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    if (sgn(rem[ui]) == 0) continue;
    Rational q = rem[ui] / b.leading();
    quo[static_cast<std::size_t>(i - db)] = q;
    for (long j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= q * b.c_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  auto [q, r] = div_rem(*this, divisor);
  if (!r.is_zero()) throw std::domain_error("divide_exact: not divisible");
  return q;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Rational v = c_[i];
    if (first) {
      if (sgn(v) < 0) os << "-";
    } else {
      os << (sgn(v) > 0 ? " + " : " - ");
    }
    Rational a = abs(v);
    if (i == 0 || a != 1) os << troprules::to_string(a);
    if (i > 0) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

Polynomial rolle_operator(const Polynomial& p, std::size_t k) {
  std::vector<Rational> out(p.coeffs());
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] *= Rational(static_cast<long>(j) - static_cast<long>(k));
  return Polynomial(std::move(out));
}

std::pair<long, long> descartes_counts(const Polynomial& p) {
  if (p.is_zero())
    throw std::domain_error("descartes_counts: zero polynomial");
  long pos = 0, neg = 0;
  int last_pos = 0, last_neg = 0;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    int s = sgn(p.coeffs()[k]);
    if (s == 0) continue;
    int sr = (k % 2 == 0) ? s : -s;
    if (last_pos != 0 && s != last_pos) ++pos;
    if (last_neg != 0 && sr != last_neg) ++neg;
    last_pos = s;
    last_neg = sr;
  }
  return {pos, neg};
}

namespace {

struct PolyParser {
  const std::string& s;
  std::size_t i = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool peek_is(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, i); }

  Rational parse_number() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'))
      ++i;
    // exponent part of scientific notation
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
      std::size_t save = i;
      std::size_t j = i + 1;
      if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
      if (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        i = j;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          ++i;
      } else {
        i = save;
      }
    }
    if (i == start) fail("expected number");
    std::string mant = s.substr(start, i - start);
    skip_ws();
    if (i < s.size() && s[i] == '/') {
      ++i;
      skip_ws();
      std::size_t dstart = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
      if (i == dstart) fail("expected denominator");
      mant += "/" + s.substr(dstart, i - dstart);
    }
    try {
      return rational_from_string(mant);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start + e.position);
    }
  }

  std::size_t parse_exponent() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("expected exponent");
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return static_cast<std::size_t>(std::stoul(s.substr(start, i - start)));
  }

  // coefficient? [*]? x [^ exponent]?  |  coefficient
  Polynomial parse_term() {
    skip_ws();
    Rational coef(1);
    bool have_coef = false;
    if (i < s.size() &&
        (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) {
      coef = parse_number();
      have_coef = true;
    }
    skip_ws();
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip_ws();
    }
    if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
      ++i;
      std::size_t exp = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        exp = parse_exponent();
      }
      skip_ws();
      if (i < s.size() && s[i] == '/') {  // "x^2/4" divides the coefficient
        ++i;
        skip_ws();
        std::size_t dstart = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          ++i;
        if (i == dstart) fail("expected denominator");
        Rational den = rational_from_string(s.substr(dstart, i - dstart));
        if (sgn(den) == 0) fail("zero denominator");
        coef /= den;
      }
      return Polynomial::monomial(exp, coef);
    }
    if (!have_coef) fail("expected term");
    return Polynomial::constant(coef);
  }

  Polynomial parse() {
    Polynomial acc;
    skip_ws();
    bool negate = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      negate = s[i] == '-';
      ++i;
    }
    for (;;) {
      Polynomial t = parse_term();
      acc = negate ? acc - t : acc + t;
      skip_ws();
      if (i >= s.size()) break;
      if (s[i] == '+') {
        negate = false;
        ++i;
      } else if (s[i] == '-') {
        negate = true;
        ++i;
      } else {
        fail("unexpected character");
      }
    }
    return acc;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
  PolyParser p(text);
  Polynomial out = p.parse();
  return out;
}

}  // namespace troprules

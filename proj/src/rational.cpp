#include "troprules/rational.hpp"

#include <cctype>
#include <sstream>

namespace troprules {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  std::size_t i = 0, n = text.size();
  while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t end = n;
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  if (i >= end) throw ParseError("empty number", i);
  std::string s = text.substr(i, end - i);

  bool negative = false;
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = (s[pos] == '-');
    ++pos;
  }
  std::string body = s.substr(pos);
  if (body.empty()) throw ParseError("missing digits", i + pos);

  auto slash = body.find('/');
  if (slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed fraction", i + pos);
    Rational q{Integer(num, 10), Integer(den, 10)};
    if (q.get_den() == 0) throw ParseError("zero denominator", i + pos + slash + 1);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  // decimal with optional exponent
  std::string mantissa = body;
  long exp10 = 0;
  auto epos = body.find_first_of("eE");
  if (epos != std::string::npos) {
    mantissa = body.substr(0, epos);
    std::string es = body.substr(epos + 1);
    if (es.empty()) throw ParseError("missing exponent", i + pos + epos);
    bool eneg = false;
    std::size_t ep = 0;
    if (es[0] == '+' || es[0] == '-') {
      eneg = es[0] == '-';
      ep = 1;
    }
    if (ep >= es.size() || !all_digits(es.substr(ep)))
      throw ParseError("malformed exponent", i + pos + epos + 1);
    exp10 = std::stol(es.substr(ep));
    if (eneg) exp10 = -exp10;
  }

  auto dot = mantissa.find('.');
  std::string digits;
  long frac_digits = 0;
  if (dot == std::string::npos) {
    digits = mantissa;
  } else {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    frac_digits = static_cast<long>(mantissa.size() - dot - 1);
  }
  if (!all_digits(digits)) throw ParseError("malformed number", i + pos);

  Rational q{Integer(digits, 10)};
  long e = exp10 - frac_digits;
  if (e > 0) {
    q *= Rational(pow_integer(Integer(10), static_cast<unsigned long>(e)));
  } else if (e < 0) {
    q /= Rational(pow_integer(Integer(10), static_cast<unsigned long>(-e)));
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q.get_num();
  if (q.get_den() != 1) os << '/' << q.get_den();
  return os.str();
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string decimal_string(const Rational& q, int digits) {
  Integer scale = pow_integer(Integer(10), static_cast<unsigned long>(digits));
  Rational scaled = q * Rational(scale);
  // round half away from zero
  Integer twice_num = 2 * scaled.get_num();
  Integer den = scaled.get_den();
  Integer rounded;
  if (sgn(scaled) >= 0) {
    rounded = (twice_num + den) / (2 * den);
  } else {
    rounded = (twice_num - den) / (2 * den);
  }
  bool neg = rounded < 0;
  Integer mag = abs(rounded);
  std::string body = mag.get_str();
  if (static_cast<int>(body.size()) <= digits)
    body.insert(0, std::string(digits + 1 - body.size(), '0'));
  std::string out = body.substr(0, body.size() - digits);
  if (digits > 0) out += "." + body.substr(body.size() - digits);
  return neg ? "-" + out : out;
}

namespace {

// 0 < lo <= hi assumed; continued-fraction descent.
Rational simplest_positive(const Rational& lo, const Rational& hi) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  Rational ceil_lo = (lo.get_den() == 1) ? lo : Rational(fl + 1);
  if (ceil_lo <= hi) return ceil_lo;
  Rational fr =
      simplest_positive(1 / (hi - Rational(fl)), 1 / (lo - Rational(fl)));
  return Rational(fl) + 1 / fr;
}

}  // namespace

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(hi) < 0) return -simplest_rational_in(-hi, -lo);
  return simplest_positive(lo, hi);
}

}  // namespace troprules

#ifndef TROPRULES_RATIONAL_HPP
#define TROPRULES_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace troprules {

// Arbitrary-precision arithmetic is backed by GMP. mpq_class already keeps
// values in lowest terms with a positive denominator, which is exactly the
// invariant we need for coefficients and log-domain scalars.
using Integer = mpz_class;
using Rational = mpq_class;

enum class Ordering { less, equal, greater };

inline Ordering ordering_of(int sign) {
  if (sign < 0) return Ordering::less;
  if (sign > 0) return Ordering::greater;
  return Ordering::equal;
}

inline Ordering flip(Ordering o) {
  if (o == Ordering::less) return Ordering::greater;
  if (o == Ordering::greater) return Ordering::less;
  return Ordering::equal;
}

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg), position(pos) {}
};

// Accepts "p", "p/q" and decimal strings such as "-1.25" or "3.5e-2".
// Decimals convert exactly (no rounding).
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

// Decimal rendering of q with the given number of fractional digits,
// round-to-nearest. Used only for human-readable report fields.
std::string decimal_string(const Rational& q, int digits);

inline Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  Rational out;
  if (exp > 0) {
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(),
               static_cast<unsigned long>(exp));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(),
               static_cast<unsigned long>(exp));
  } else {
    if (base == 0) throw std::domain_error("pow_rational: 0 to negative power");
    mpz_pow_ui(out.get_num_mpz_t(), base.get_den_mpz_t(),
               static_cast<unsigned long>(-exp));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_num_mpz_t(),
               static_cast<unsigned long>(-exp));
  }
  out.canonicalize();
  return out;
}

inline Integer pow_integer(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

// 2^exp for possibly negative exp.
inline Rational dyadic(long exp) { return pow_rational(Rational(2), exp); }

inline Rational frac(long num, long den) {
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

inline int sign_of(const Rational& q) { return sgn(q); }

// The simplest rational (smallest denominator, then smallest numerator) in
// the closed interval [lo, hi]; Stern-Brocot descent.
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

}  // namespace troprules

#endif

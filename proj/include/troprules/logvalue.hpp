#ifndef TROPRULES_LOGVALUE_HPP
#define TROPRULES_LOGVALUE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "troprules/interval.hpp"
#include "troprules/rational.hpp"

namespace troprules {

// Exact scalar of the form  q0 + sum_i c_i * ln(b_i)  with rational q0, c_i
// and integer bases b_i >= 2. Canonical form: bases pairwise coprime, none a
// perfect power, sorted ascending, all c_i nonzero. Under that normalization
// the value is zero iff the representation is syntactically zero: ln of
// multiplicatively independent integers cannot satisfy a rational relation,
// and a nonzero rational never equals a nonzero combination of logs.
//
// Equivalently this is the single-ln form q0 + q1*ln(r): q1 = 1/n with n the
// lcm of the coefficient denominators and r = prod b_i^(n*c_i), kept factored
// so the inner rational never has to be expanded.
class LogValue {
 public:
  struct Term {
    Integer base;     // >= 2
    Rational coeff;   // != 0
    bool operator==(const Term& o) const = default;
  };

  LogValue() = default;
  explicit LogValue(Rational affine) : affine_(std::move(affine)) {}
  explicit LogValue(long v) : affine_(Rational(v)) {}

  // ln(q) for q > 0.
  static LogValue ln(const Rational& q);
  // e * ln(q) for q > 0.
  static LogValue ln_pow(const Rational& q, const Rational& e);
  static LogValue from_parts(Rational affine, std::vector<Term> raw_terms);

  const Rational& affine() const { return affine_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty() && sgn(affine_) == 0; }
  bool is_rational() const { return terms_.empty(); }
  const Rational& rational_value() const {
    if (!is_rational())
      throw std::logic_error("LogValue: not a pure rational");
    return affine_;
  }

  LogValue operator+(const LogValue& o) const;
  LogValue operator-(const LogValue& o) const;
  LogValue operator-() const;
  LogValue operator*(const Rational& s) const;
  LogValue& operator+=(const LogValue& o) { return *this = *this + o; }
  LogValue& operator-=(const LogValue& o) { return *this = *this - o; }

  // Exact three-way comparison. Syntactic-zero differences decide instantly;
  // otherwise interval evaluation at doubling precision (start 64 bits) until
  // the sign is certain. Throws PrecisionExhausted at the configured cap.
  static Ordering cmp(const LogValue& a, const LogValue& b);
  int sign() const;  // cmp against zero

  bool operator==(const LogValue& o) const { return (*this - o).is_zero(); }
  bool operator<(const LogValue& o) const { return cmp(*this, o) == Ordering::less; }
  bool operator<=(const LogValue& o) const { return cmp(*this, o) != Ordering::greater; }
  bool operator>(const LogValue& o) const { return cmp(*this, o) == Ordering::greater; }
  bool operator>=(const LogValue& o) const { return cmp(*this, o) != Ordering::less; }

  // Enclosing dyadic interval of width <= 2^(1-bits) * max(1, |value|).
  DyadicInterval approx(long bits) const;
  // Raw enclosure at a given working precision (no width guarantee).
  Interval enclosure(mpfr_prec_t prec) const;
  double to_double() const;

  // e^value as an exact rational, when it is one (affine 0, integer coeffs).
  std::optional<Rational> exp_rational() const;

  // Single-ln view (affine, scale, arg); nullopt when expanding the arg
  // would exceed max_arg_bits.
  struct SingleLnForm {
    Rational affine;
    Rational scale;
    Rational arg;
  };
  std::optional<SingleLnForm> single_ln_form(long max_arg_bits = 1 << 16) const;

  std::string to_string() const;

 private:
  Rational affine_;
  std::vector<Term> terms_;
};

struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Comparison precision ladder cap in bits (default 2^20). An undecided
// comparison at the cap raises PrecisionExhausted instead of guessing.
long logvalue_precision_cap();
void set_logvalue_precision_cap(long bits);

inline LogValue logvalue_add(const LogValue& a, const LogValue& b) { return a + b; }
inline Ordering logvalue_cmp(const LogValue& a, const LogValue& b) {
  return LogValue::cmp(a, b);
}
DyadicInterval logvalue_approx(const LogValue& a, long bits);

}  // namespace troprules

#endif

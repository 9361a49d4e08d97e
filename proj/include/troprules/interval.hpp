#ifndef TROPRULES_INTERVAL_HPP
#define TROPRULES_INTERVAL_HPP

#include <mpfr.h>

#include <optional>
#include <utility>

#include "troprules/rational.hpp"

namespace troprules {

// Interval of exact dyadic rationals, the result type of every approximate
// evaluation. Invariant: lo <= hi and the represented value lies in [lo, hi].
struct DyadicInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  int sign() const {
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    return 0;  // undetermined, not necessarily zero
  }
  Rational midpoint() const { return (lo + hi) / 2; }
};

// Thin RAII wrapper around mpfr_t with directed-rounding endpoints.
// All operations widen outward, so enclosures stay rigorous.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  mpfr_prec_t precision() const { return prec_; }

  static Interval exact(const Rational& q, mpfr_prec_t prec);
  static Interval log_of(const Integer& n, mpfr_prec_t prec);       // n >= 1
  static Interval log_of(const Rational& q, mpfr_prec_t prec);      // q > 0
  static Interval exp_of(const Interval& x, mpfr_prec_t prec);
  // x^(num/den) for x with positive lower endpoint.
  static Interval pow_of(const Interval& x, const Rational& e, mpfr_prec_t prec);

  Interval& add(const Interval& other);
  Interval& add(const Rational& q);
  Interval& sub(const Interval& other);
  Interval& mul(const Rational& q);
  Interval& mul(const Interval& other);
  Interval& neg();

  bool contains_zero() const;
  int sign() const;  // +1 / -1 when certain, 0 when the interval straddles 0
  bool strictly_less_than(const Interval& other) const;
  bool strictly_greater_than(const Interval& other) const;
  bool upper_at_most(const Rational& q) const;      // hi <= q certainly
  bool lower_greater_than(const Rational& q) const; // lo > q certainly

  DyadicInterval to_dyadic() const;
  Rational width_upper() const;
  double midpoint_double() const;

 private:
  mpfr_t lo_;
  mpfr_t hi_;
  mpfr_prec_t prec_;
};

}  // namespace troprules

#endif

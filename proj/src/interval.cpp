#include "troprules/interval.hpp"

#include <stdexcept>

namespace troprules {

namespace {

Rational mpfr_to_rational(const mpfr_t x) {
  if (!mpfr_number_p(x)) throw std::overflow_error("interval endpoint overflow");
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, x);
  Rational out(q);
  mpq_clear(q);
  return out;
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.prec_);
    mpfr_set_prec(hi_, other.prec_);
    prec_ = other.prec_;
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  std::swap(prec_, other.prec_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact(const Rational& q, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_q(out.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, q.get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::log_of(const Integer& n, mpfr_prec_t prec) {
  if (sgn(n) <= 0) throw std::domain_error("log of non-positive integer");
  Interval out(prec);
  mpfr_set_z(out.lo_, n.get_mpz_t(), MPFR_RNDD);
  mpfr_log(out.lo_, out.lo_, MPFR_RNDD);
  mpfr_set_z(out.hi_, n.get_mpz_t(), MPFR_RNDU);
  mpfr_log(out.hi_, out.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::log_of(const Rational& q, mpfr_prec_t prec) {
  if (sgn(q) <= 0) throw std::domain_error("log of non-positive rational");
  Interval out(prec);
  mpfr_set_q(out.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_log(out.lo_, out.lo_, MPFR_RNDD);
  mpfr_set_q(out.hi_, q.get_mpq_t(), MPFR_RNDU);
  mpfr_log(out.hi_, out.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::exp_of(const Interval& x, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_exp(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::pow_of(const Interval& x, const Rational& e, mpfr_prec_t prec) {
  if (mpfr_sgn(x.lo_) <= 0)
    throw std::domain_error("pow_of requires a positive base interval");
  // x^e = exp(e * ln x); monotone in x for fixed sign of e
  Interval lnx(prec);
  mpfr_log(lnx.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(lnx.hi_, x.hi_, MPFR_RNDU);
  lnx.prec_ = prec;
  lnx.mul(e);
  return exp_of(lnx, prec);
}

Interval& Interval::add(const Interval& other) {
  mpfr_add(lo_, lo_, other.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::add(const Rational& q) {
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDD);
  mpfr_add(lo_, lo_, t, MPFR_RNDD);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDU);
  mpfr_add(hi_, hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return *this;
}

Interval& Interval::sub(const Interval& other) {
  mpfr_t nlo, nhi;
  mpfr_init2(nlo, prec_);
  mpfr_init2(nhi, prec_);
  mpfr_sub(nlo, lo_, other.hi_, MPFR_RNDD);
  mpfr_sub(nhi, hi_, other.lo_, MPFR_RNDU);
  mpfr_swap(lo_, nlo);
  mpfr_swap(hi_, nhi);
  mpfr_clear(nlo);
  mpfr_clear(nhi);
  return *this;
}

Interval& Interval::mul(const Rational& q) {
  int s = sgn(q);
  if (s == 0) {
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
    return *this;
  }
  if (s > 0) {
    mpfr_mul_q(lo_, lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi_, hi_, q.get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_mul_q(t, hi_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi_, lo_, q.get_mpq_t(), MPFR_RNDU);
    mpfr_set(lo_, t, MPFR_RNDD);
    mpfr_clear(t);
  }
  return *this;
}

Interval& Interval::mul(const Interval& other) {
  mpfr_t cands[4], nlo, nhi;
  for (auto& c : cands) mpfr_init2(c, prec_);
  mpfr_init2(nlo, prec_);
  mpfr_init2(nhi, prec_);
  mpfr_mul(cands[0], lo_, other.lo_, MPFR_RNDD);
  mpfr_mul(cands[1], lo_, other.hi_, MPFR_RNDD);
  mpfr_mul(cands[2], hi_, other.lo_, MPFR_RNDD);
  mpfr_mul(cands[3], hi_, other.hi_, MPFR_RNDD);
  mpfr_min(nlo, cands[0], cands[1], MPFR_RNDD);
  mpfr_min(nlo, nlo, cands[2], MPFR_RNDD);
  mpfr_min(nlo, nlo, cands[3], MPFR_RNDD);
  mpfr_mul(cands[0], lo_, other.lo_, MPFR_RNDU);
  mpfr_mul(cands[1], lo_, other.hi_, MPFR_RNDU);
  mpfr_mul(cands[2], hi_, other.lo_, MPFR_RNDU);
  mpfr_mul(cands[3], hi_, other.hi_, MPFR_RNDU);
  mpfr_max(nhi, cands[0], cands[1], MPFR_RNDU);
  mpfr_max(nhi, nhi, cands[2], MPFR_RNDU);
  mpfr_max(nhi, nhi, cands[3], MPFR_RNDU);
  mpfr_swap(lo_, nlo);
  mpfr_swap(hi_, nhi);
  for (auto& c : cands) mpfr_clear(c);
  mpfr_clear(nlo);
  mpfr_clear(nhi);
  return *this;
}

Interval& Interval::neg() {
  mpfr_swap(lo_, hi_);
  mpfr_neg(lo_, lo_, MPFR_RNDD);
  mpfr_neg(hi_, hi_, MPFR_RNDU);
  return *this;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

int Interval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

bool Interval::strictly_less_than(const Interval& other) const {
  return mpfr_cmp(hi_, other.lo_) < 0;
}

bool Interval::strictly_greater_than(const Interval& other) const {
  return mpfr_cmp(lo_, other.hi_) > 0;
}

bool Interval::upper_at_most(const Rational& q) const {
  return mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0;
}

bool Interval::lower_greater_than(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0;
}

DyadicInterval Interval::to_dyadic() const {
  return {mpfr_to_rational(lo_), mpfr_to_rational(hi_)};
}

Rational Interval::width_upper() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  Rational out = mpfr_to_rational(w);
  mpfr_clear(w);
  return out;
}

double Interval::midpoint_double() const {
  double a = mpfr_get_d(lo_, MPFR_RNDN);
  double b = mpfr_get_d(hi_, MPFR_RNDN);
  return (a + b) / 2;
}

}  // namespace troprules

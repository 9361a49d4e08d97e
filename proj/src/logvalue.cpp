#include "troprules/logvalue.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>

namespace troprules {

namespace {

std::atomic<long> g_precision_cap{1L << 20};

// b = g^a * r with g not dividing r; returns a, sets r.
unsigned long divide_out(Integer& b, const Integer& g) {
  unsigned long a = 0;
  Integer q, rem;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    if (sgn(rem) != 0) break;
    b = q;
    ++a;
  }
  return a;
}

// Replace base by its maximal perfect-power root, scaling coeff accordingly.
void extract_power(Integer& base, Rational& coeff) {
  while (mpz_perfect_power_p(base.get_mpz_t())) {
    unsigned long maxk = mpz_sizeinbase(base.get_mpz_t(), 2);
    bool found = false;
    for (unsigned long k = 2; k <= maxk; ++k) {
      Integer root;
      if (mpz_root(root.get_mpz_t(), base.get_mpz_t(), k) != 0) {
        base = root;
        coeff *= Rational(static_cast<long>(k));
        found = true;
        break;
      }
    }
    if (!found) break;
  }
}

// Factor refinement: reduce a list of (base, coeff) pairs to pairwise
// coprime bases, preserving the represented sum of coeff*ln(base).
std::vector<LogValue::Term> refine(std::vector<LogValue::Term> input) {
  std::vector<LogValue::Term> done;
  std::vector<LogValue::Term> work = std::move(input);
  while (!work.empty()) {
    LogValue::Term t = std::move(work.back());
    work.pop_back();
    if (t.base <= 1 || sgn(t.coeff) == 0) continue;
    bool consumed = false;
    for (std::size_t i = 0; i < done.size(); ++i) {
      if (done[i].base == t.base) {
        Rational c = done[i].coeff + t.coeff;
        done.erase(done.begin() + static_cast<long>(i));
        if (sgn(c) != 0) work.push_back({t.base, c});
        consumed = true;
        break;
      }
      Integer g = gcd(t.base, done[i].base);
      if (g > 1) {
        LogValue::Term other = std::move(done[i]);
        done.erase(done.begin() + static_cast<long>(i));
        Integer rb = t.base;
        unsigned long ab = divide_out(rb, g);
        Integer ro = other.base;
        unsigned long ao = divide_out(ro, g);
        work.push_back({g, t.coeff * Rational(static_cast<long>(ab)) +
                               other.coeff * Rational(static_cast<long>(ao))});
        if (rb > 1) work.push_back({rb, t.coeff});
        if (ro > 1) work.push_back({ro, other.coeff});
        consumed = true;
        break;
      }
    }
    if (!consumed) done.push_back(std::move(t));
  }
  for (auto& t : done) extract_power(t.base, t.coeff);
  // power extraction keeps bases coprime; merge any residual duplicates
  std::sort(done.begin(), done.end(),
            [](const LogValue::Term& a, const LogValue::Term& b) {
              return a.base < b.base;
            });
  std::vector<LogValue::Term> out;
  for (auto& t : done) {
    if (!out.empty() && out.back().base == t.base)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const LogValue::Term& t) { return sgn(t.coeff) == 0; });
  return out;
}

// Cache of ln(base) enclosures; bases recur heavily in hull comparisons.
const Interval& cached_log(const Integer& base, mpfr_prec_t prec) {
  thread_local std::map<std::pair<Integer, mpfr_prec_t>, Interval> cache;
  auto key = std::make_pair(base, prec);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, Interval::log_of(base, prec)).first;
  return it->second;
}

}  // namespace

long logvalue_precision_cap() { return g_precision_cap.load(); }
void set_logvalue_precision_cap(long bits) { g_precision_cap.store(bits); }

LogValue LogValue::ln(const Rational& q) {
  if (sgn(q) <= 0) throw std::domain_error("LogValue::ln of non-positive value");
  return ln_pow(q, Rational(1));
}

LogValue LogValue::ln_pow(const Rational& q, const Rational& e) {
  if (sgn(q) <= 0)
    throw std::domain_error("LogValue::ln_pow of non-positive value");
  std::vector<Term> raw;
  raw.push_back({q.get_num(), e});
  raw.push_back({q.get_den(), -e});
  return from_parts(Rational(0), std::move(raw));
}

LogValue LogValue::from_parts(Rational affine, std::vector<Term> raw_terms) {
  LogValue v;
  v.affine_ = std::move(affine);
  v.terms_ = refine(std::move(raw_terms));
  return v;
}

LogValue LogValue::operator+(const LogValue& o) const {
  std::vector<Term> raw = terms_;
  raw.insert(raw.end(), o.terms_.begin(), o.terms_.end());
  return from_parts(affine_ + o.affine_, std::move(raw));
}

LogValue LogValue::operator-(const LogValue& o) const { return *this + (-o); }

LogValue LogValue::operator-() const {
  LogValue v;
  v.affine_ = -affine_;
  v.terms_ = terms_;
  for (auto& t : v.terms_) t.coeff = -t.coeff;
  return v;
}

LogValue LogValue::operator*(const Rational& s) const {
  if (sgn(s) == 0) return LogValue();
  LogValue v;
  v.affine_ = affine_ * s;
  v.terms_ = terms_;
  for (auto& t : v.terms_) t.coeff *= s;
  return v;
}

Interval LogValue::enclosure(mpfr_prec_t prec) const {
  Interval acc = Interval::exact(affine_, prec);
  for (const auto& t : terms_) {
    Interval lt = cached_log(t.base, prec);
    lt.mul(t.coeff);
    acc.add(lt);
  }
  return acc;
}

int LogValue::sign() const {
  if (terms_.empty()) return sgn(affine_);
  long cap = logvalue_precision_cap();
  for (long prec = 64; prec <= cap; prec *= 2) {
    Interval I = enclosure(prec);
    int s = I.sign();
    if (s != 0) return s;
  }
  throw PrecisionExhausted(
      "LogValue comparison undecided at precision cap " +
      std::to_string(cap) + " bits");
}

Ordering LogValue::cmp(const LogValue& a, const LogValue& b) {
  return ordering_of((a - b).sign());
}

DyadicInterval LogValue::approx(long bits) const {
  if (bits < 8) bits = 8;
  if (terms_.empty()) return {affine_, affine_};
  for (long prec = bits + 16;; prec *= 2) {
    Interval I = enclosure(prec);
    DyadicInterval d = I.to_dyadic();
    Rational mag(1);
    Rational alo = abs(d.lo), ahi = abs(d.hi);
    // conservative lower bound of |value|
    if (!d.contains_zero()) mag = std::max(mag, std::min(alo, ahi));
    if (d.width() <= dyadic(1 - bits) * mag) return d;
    if (prec > logvalue_precision_cap() * 4)
      throw PrecisionExhausted("LogValue::approx failed to converge");
  }
}

double LogValue::to_double() const {
  return enclosure(64).midpoint_double();
}

std::optional<Rational> LogValue::exp_rational() const {
  if (sgn(affine_) != 0) return std::nullopt;
  Rational out(1);
  for (const auto& t : terms_) {
    if (t.coeff.get_den() != 1) return std::nullopt;
    if (!t.coeff.get_num().fits_slong_p()) return std::nullopt;
    out *= pow_rational(Rational(t.base), t.coeff.get_num().get_si());
  }
  return out;
}

std::optional<LogValue::SingleLnForm> LogValue::single_ln_form(
    long max_arg_bits) const {
  if (terms_.empty()) return SingleLnForm{affine_, Rational(0), Rational(1)};
  Integer n(1);
  for (const auto& t : terms_) n = lcm(n, Integer(t.coeff.get_den()));
  // estimated arg size in bits
  double bits = 0;
  for (const auto& t : terms_) {
    Rational e = t.coeff * Rational(n);
    bits += std::abs(e.get_num().get_d()) *
            static_cast<double>(mpz_sizeinbase(t.base.get_mpz_t(), 2));
    if (bits > static_cast<double>(max_arg_bits)) return std::nullopt;
  }
  Rational arg(1);
  for (const auto& t : terms_) {
    Rational e = t.coeff * Rational(n);
    if (!e.get_num().fits_slong_p()) return std::nullopt;
    arg *= pow_rational(Rational(t.base), e.get_num().get_si());
  }
  return SingleLnForm{affine_, Rational(Integer(1), n), arg};
}

std::string LogValue::to_string() const {
  std::ostringstream os;
  os << troprules::to_string(affine_);
  for (const auto& t : terms_) {
    os << " + (" << troprules::to_string(t.coeff) << ")*ln("
       << troprules::to_string(t.base) << ")";
  }
  return os.str();
}

DyadicInterval logvalue_approx(const LogValue& a, long bits) {
  if (bits < 8) throw std::invalid_argument("logvalue_approx: bits must be >= 8");
  return a.approx(bits);
}

}  // namespace troprules

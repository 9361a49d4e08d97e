#include "troprules/czds.hpp"

#include <stdexcept>

#include "troprules/central.hpp"
#include "troprules/tropical.hpp"

namespace troprules {

namespace {

LogValue two_ln_3() { return LogValue::ln(Rational(9)); }

}  // namespace

CzdsCertificate czds_check(const MultiplierSeq& lam,
                           const MultiplierSeq& lam_star, long d,
                           CzdsMethod method) {
  if (lam.degree() < d || lam_star.degree() < d)
    throw std::invalid_argument("czds_check: sequences shorter than degree");
  CzdsCertificate cert;
  cert.method = method;
  cert.degree = d;
  for (long k = 0; k <= d; ++k)
    cert.q_log_coeffs.push_back(lam.log_entry(static_cast<std::size_t>(k)) -
                                lam_star.log_entry(static_cast<std::size_t>(k)));

  if (method == CzdsMethod::separation) {
    // second differences of the log coefficients are both the hull
    // condition (>= 0) and the consecutive root gaps
    LogValue bound = two_ln_3();
    for (long k = 1; k < d; ++k) {
      LogValue gap = cert.q_log_coeffs[static_cast<std::size_t>(k)] * Rational(2) -
                     cert.q_log_coeffs[static_cast<std::size_t>(k - 1)] -
                     cert.q_log_coeffs[static_cast<std::size_t>(k + 1)];
      if (LogValue::cmp(gap, bound) != Ordering::greater) {
        cert.status = CzdsStatus::failed;
        cert.failed_index = static_cast<std::size_t>(k);
        return cert;
      }
    }
    cert.status = CzdsStatus::certified;
    return cert;
  }

  // central method: try the exact rational path, else bracketed
  bool all_rational = true;
  std::vector<Rational> coeffs;
  for (const auto& lv : cert.q_log_coeffs) {
    auto q = lv.exp_rational();
    if (!q) {
      all_rational = false;
      break;
    }
    coeffs.push_back(*q);
  }
  bool any_undecided = false;
  if (all_rational) {
    Polynomial qd(std::move(coeffs));
    for (long k = 0; k <= d; ++k) {
      auto v = central_index_check(qd, static_cast<std::size_t>(k));
      if (v.status == CentralStatus::certified_no) {
        cert.status = CzdsStatus::failed;
        cert.failed_index = static_cast<std::size_t>(k);
        return cert;
      }
      if (v.status == CentralStatus::undecided) any_undecided = true;
    }
  } else {
    std::vector<std::optional<LogValue>> log_abs;
    for (const auto& lv : cert.q_log_coeffs) log_abs.emplace_back(lv);
    for (long k = 0; k <= d; ++k) {
      CentralStatus s =
          central_index_check_bracketed(log_abs, static_cast<std::size_t>(k));
      if (s == CentralStatus::certified_no) {
        cert.status = CzdsStatus::failed;
        cert.failed_index = static_cast<std::size_t>(k);
        return cert;
      }
      if (s == CentralStatus::undecided) any_undecided = true;
    }
  }
  cert.status = any_undecided ? CzdsStatus::undecided : CzdsStatus::certified;
  return cert;
}

AdaptiveReal AdaptiveReal::of(const LogValue& v) {
  return AdaptiveReal([v](mpfr_prec_t prec) { return v.enclosure(prec); });
}

AdaptiveReal AdaptiveReal::power_gap_entry(long k, const Rational& alpha) {
  if (k < 0) throw std::invalid_argument("power_gap_entry: k >= 0");
  return AdaptiveReal([k, alpha](mpfr_prec_t prec) {
    Interval out = Interval::exact(Rational(k * k), prec);
    if (k >= 1) {
      Interval kp = Interval::pow_of(Interval::exact(Rational(k), prec),
                                     alpha, prec);
      out.sub(kp);
    }
    return out;
  });
}

AdaptiveReal AdaptiveReal::operator+(const AdaptiveReal& o) const {
  auto a = eval_, b = o.eval_;
  return AdaptiveReal([a, b](mpfr_prec_t prec) {
    Interval x = a(prec);
    x.add(b(prec));
    return x;
  });
}

AdaptiveReal AdaptiveReal::operator-(const AdaptiveReal& o) const {
  auto a = eval_, b = o.eval_;
  return AdaptiveReal([a, b](mpfr_prec_t prec) {
    Interval x = a(prec);
    x.sub(b(prec));
    return x;
  });
}

AdaptiveReal AdaptiveReal::operator*(const Rational& s) const {
  auto a = eval_;
  return AdaptiveReal([a, s](mpfr_prec_t prec) {
    Interval x = a(prec);
    x.mul(s);
    return x;
  });
}

std::optional<bool> AdaptiveReal::strictly_greater_than(
    const LogValue& threshold) const {
  long cap = logvalue_precision_cap();
  for (mpfr_prec_t prec = 64; prec <= cap; prec *= 2) {
    Interval v = eval_(prec);
    Interval t = threshold.enclosure(prec);
    if (v.strictly_greater_than(t)) return true;
    if (v.strictly_less_than(t)) return false;
  }
  return std::nullopt;
}

std::optional<bool> AdaptiveReal::strictly_less_than(
    const LogValue& threshold) const {
  auto g = strictly_greater_than(threshold);
  if (!g) return std::nullopt;
  return !*g;  // exact equality is excluded only when the caller knows it;
               // an undecided ladder already returned nullopt above
}

std::vector<AlphaScanRow> alpha_scan(const Rational& alpha_lo,
                                     const Rational& alpha_hi, long d,
                                     const Rational& step) {
  if (!(Rational(2) < alpha_lo) || !(alpha_lo < alpha_hi))
    throw std::invalid_argument("alpha_scan: need 2 < alpha_lo < alpha_hi");
  if (sgn(step) <= 0) throw std::invalid_argument("alpha_scan: positive step");
  std::vector<AlphaScanRow> rows;
  LogValue bound = two_ln_3();
  for (Rational a = alpha_lo; a <= alpha_hi; a += step) {
    AlphaScanRow row;
    row.alpha = a;
    if (a.get_den() == 1 && a.get_num().fits_slong_p()) {
      // integer alpha: -k^alpha + k^2 is an exact integer
      row.exact_path = true;
      long ai = a.get_num().get_si();
      std::vector<LogValue> entries;
      for (long k = 0; k <= d; ++k) {
        Integer ka = pow_integer(Integer(k), static_cast<unsigned long>(ai));
        entries.emplace_back(Rational(Integer(k * k) - ka));
      }
      row.status = CzdsStatus::certified;
      for (long k = 1; k < d; ++k) {
        LogValue gap = entries[static_cast<std::size_t>(k)] * Rational(2) -
                       entries[static_cast<std::size_t>(k - 1)] -
                       entries[static_cast<std::size_t>(k + 1)];
        if (LogValue::cmp(gap, bound) != Ordering::greater) {
          row.status = CzdsStatus::failed;
          break;
        }
      }
    } else {
      row.exact_path = false;
      row.status = CzdsStatus::certified;
      for (long k = 1; k < d; ++k) {
        AdaptiveReal gap = AdaptiveReal::power_gap_entry(k, a) * Rational(2) -
                           AdaptiveReal::power_gap_entry(k - 1, a) -
                           AdaptiveReal::power_gap_entry(k + 1, a);
        auto verdict = gap.strictly_greater_than(bound);
        if (!verdict) {
          row.status = CzdsStatus::undecided;
          break;
        }
        if (!*verdict) {
          row.status = CzdsStatus::failed;
          break;
        }
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace troprules

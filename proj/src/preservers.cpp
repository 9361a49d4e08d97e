#include "troprules/preservers.hpp"

#include <algorithm>
#include <stdexcept>

#include "troprules/randgen.hpp"
#include "troprules/sturm.hpp"
#include "troprules/tropical.hpp"

namespace troprules {

namespace {

Polynomial apply_multiplier(const MultiplierSeq& lam, const Polynomial& p) {
  auto vals = lam.rational_values();
  if (!vals)
    throw std::invalid_argument(
        "apply_multiplier: sequence entries are not exact rationals");
  std::vector<Rational> c(p.coeffs());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= (*vals)[k];
  return Polynomial(std::move(c));
}

std::vector<std::optional<LogValue>> scaled_log_coeffs(
    const MultiplierSeq& lam, const Polynomial& p) {
  std::vector<std::optional<LogValue>> out(p.coeffs().size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (sgn(p.coeffs()[k]) == 0) continue;
    out[k] = LogValue::ln(abs(p.coeffs()[k])) + lam.log_entry(k);
  }
  return out;
}

}  // namespace

TrialResult index_preserver_trial(const MultiplierSeq& lam,
                                  const Polynomial& p, TrialKind kind) {
  if (lam.degree() < p.degree())
    throw std::invalid_argument("index_preserver_trial: sequence too short");
  TrialResult res;

  if (kind == TrialKind::tropical) {
    auto before = tropical_indices(tropicalize(p));
    auto after = tropical_indices(tropicalize(p, lam));
    for (std::size_t k : before) {
      if (!std::binary_search(after.begin(), after.end(), k)) {
        res.outcome = TrialResult::Outcome::violation;
        res.violating_index = k;
        res.detail = "tropical index " + std::to_string(k) +
                     " lost after scaling";
        return res;
      }
    }
    return res;
  }

  // central kind
  auto rational_lam = lam.rational_values();
  bool any_undecided = false;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (sgn(p.coeffs()[k]) == 0) continue;
    auto before = central_index_check(p, k);
    if (before.status == CentralStatus::undecided) {
      any_undecided = true;
      continue;
    }
    if (before.status != CentralStatus::certified_yes) continue;
    CentralStatus after;
    if (rational_lam) {
      after = central_index_check(apply_multiplier(lam, p), k).status;
    } else {
      after = central_index_check_bracketed(scaled_log_coeffs(lam, p), k);
    }
    if (after == CentralStatus::certified_no) {
      res.outcome = TrialResult::Outcome::violation;
      res.violating_index = k;
      res.detail = "central index " + std::to_string(k) + " lost after scaling";
      return res;
    }
    if (after == CentralStatus::undecided) any_undecided = true;
  }
  if (any_undecided) res.outcome = TrialResult::Outcome::undecided;
  return res;
}

bool lambda2_member(const MultiplierSeq& lam) {
  if (lam.size() != 3)
    throw std::invalid_argument("lambda2_member: sequence of length 3 required");
  LogValue lhs = LogValue::ln(Rational(4)) + lam.log_entry(1) * Rational(2);
  LogValue rhs = lam.log_entry(0) + lam.log_entry(2);
  return LogValue::cmp(lhs, rhs) != Ordering::less;
}

namespace {

// 2(3^(1/4) - 1) A >= 3^(1/4) B for positive A, B given by their logs.
// Isolating the surd: with u = B/A, the condition is u <= 2 - 2*3^(-1/4),
// i.e. exp(lnB - lnA) <= 2 - (16/3)^(1/4). The left side is a power product
// of rationals, the right side an algebraic number of degree 4 with
// conjugates of distinct moduli, so they can never be equal and interval
// refinement terminates.
bool surd_inequality(const LogValue& lnA, const LogValue& lnB) {
  LogValue diff = lnB - lnA;
  long cap = logvalue_precision_cap();
  for (mpfr_prec_t prec = 64; prec <= cap; prec *= 2) {
    Interval u = Interval::exp_of(diff.enclosure(prec), prec);
    Interval tau = Interval::pow_of(Interval::exact(frac(16, 3), prec),
                                    frac(1, 4), prec);
    tau.neg();
    tau.add(Rational(2));
    if (u.strictly_less_than(tau)) return true;
    if (u.strictly_greater_than(tau)) return false;
  }
  throw PrecisionExhausted("surd inequality undecided at precision cap");
}

}  // namespace

bool lambda4_member(const MultiplierSeq& lam) {
  if (lam.size() != 5)
    throw std::invalid_argument("lambda4_member: sequence of length 5 required");
  const LogValue& l0 = lam.log_entry(0);
  const LogValue& l1 = lam.log_entry(1);
  const LogValue& l2 = lam.log_entry(2);
  const LogValue& l3 = lam.log_entry(3);
  const LogValue& l4 = lam.log_entry(4);
  auto geq = [](const LogValue& a, const LogValue& b) {
    return LogValue::cmp(a, b) != Ordering::less;
  };
  // 2 l1^2 >= l0 l2, 9 l2^2 >= 4 l1 l3, 2 l3^2 >= l2 l4
  if (!geq(LogValue::ln(Rational(2)) + l1 * Rational(2), l0 + l2)) return false;
  if (!geq(LogValue::ln(Rational(9)) + l2 * Rational(2),
           LogValue::ln(Rational(4)) + l1 + l3))
    return false;
  if (!geq(LogValue::ln(Rational(2)) + l3 * Rational(2), l2 + l4)) return false;
  // 2(3^(1/4)-1) l1^4 >= 3^(1/4) l0^3 l4 and the mirror inequality
  if (!surd_inequality(l1 * Rational(4), l0 * Rational(3) + l4)) return false;
  if (!surd_inequality(l3 * Rational(4), l0 + l4 * Rational(3))) return false;
  return true;
}

bool essential_counts_dominate(const Polynomial& p, const MultiplierSeq& lam) {
  RootCount rc = sturm_count(p, CountMode::with_multiplicity);
  TropicalAnalysis an = tropical_roots(tropicalize(p, lam));
  return rc.positive <= an.essential_positive &&
         rc.negative <= an.essential_negative;
}

SPowerResult s_power_search(const MultiplierSeq& base, long degree,
                            long trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("s_power_search: trials >= 1");
  if (base.degree() < degree)
    throw std::invalid_argument("s_power_search: base sequence too short");
  for (std::size_t k = 1; k + 1 < base.size(); ++k) {
    LogValue gap = base.log_entry(k) * Rational(2) - base.log_entry(k - 1) -
                   base.log_entry(k + 1);
    if (gap.sign() <= 0)
      throw std::invalid_argument(
          "s_power_search: base must be strictly log-concave");
  }
  SPowerResult out;
  out.trials_per_s = trials;
  out.seed = seed;
  out.degree = degree;

  auto run_at = [&](const Rational& s) -> std::optional<Polynomial> {
    MultiplierSeq lam = base.power(s).prefix(degree);
    for (long t = 0; t < trials; ++t) {
      TrialRng rng(seed, static_cast<std::uint64_t>(t));
      Polynomial p = random_polynomial(rng, degree);
      if (!essential_counts_dominate(p, lam)) return p;
    }
    return std::nullopt;
  };

  Rational s(0);
  auto fail = run_at(s);
  if (!fail) {
    out.s_star = s;
    return out;
  }
  out.largest_failing_s = s;
  out.failing_witness = fail;
  Rational hi(1);
  for (;;) {
    fail = run_at(hi);
    if (!fail) break;
    out.largest_failing_s = hi;
    out.failing_witness = fail;
    hi *= 2;
    if (hi > 1024)
      throw std::runtime_error("s_power_search: no clean power below 1024");
  }
  Rational lo = *out.largest_failing_s;
  Rational clean = hi;
  for (int it = 0; it < 12; ++it) {
    Rational mid = (lo + hi) / 2;
    fail = run_at(mid);
    if (fail) {
      out.largest_failing_s = mid;
      out.failing_witness = fail;
      lo = mid;
    } else {
      clean = mid;
      hi = mid;
    }
  }
  out.s_star = clean;
  return out;
}

}  // namespace troprules

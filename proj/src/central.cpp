#include "troprules/central.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace troprules {

namespace {

// W(y) = |a_k| y^k - sum_{i != k} |a_i| y^i
Polynomial lopsidedness_poly(const Polynomial& p, std::size_t k) {
  std::vector<Rational> w(p.coeffs().size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Rational a = abs(p.coeffs()[i]);
    w[i] = (i == k) ? a : -a;
  }
  return Polynomial(std::move(w));
}

std::size_t max_support(const Polynomial& p) {
  return static_cast<std::size_t>(p.degree());
}

// Hunt a rational tangency point of W inside an isolating interval of the
// multiple-root part g. Returns the witness if found within budget.
std::optional<Rational> hunt_rational_tangency(const Polynomial& w,
                                               const Polynomial& g,
                                               IsolatedRoot iso, long budget,
                                               long& steps) {
  SturmChain chain(squarefree_part(g));
  Rational lo = iso.lo, hi = iso.hi;
  if (iso.exact) return *iso.exact;
  for (long t = 0; t < budget; ++t) {
    ++steps;
    Rational cand = simplest_rational_in(lo, hi);
    if (sgn(w(cand)) == 0) return cand;
    Rational mid = (lo + hi) / 2;
    if (sgn(g(mid)) == 0) return mid;
    if (chain.variations_at(lo) - chain.variations_at(mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
  return std::nullopt;
}

}  // namespace

CentralIndexVerdict central_index_check(const Polynomial& p_in, std::size_t k_in,
                                        long budget) {
  if (p_in.is_zero())
    throw std::domain_error("central index of zero polynomial");
  if (k_in > max_support(p_in) || sgn(p_in.coeff(k_in)) == 0)
    throw std::invalid_argument("central_index_check: a_k must be nonzero");

  // work on the x^m-factored part: for x > 0 the inequality is unchanged,
  // and x = 0 no longer degenerates every index to a trivial yes
  Polynomial p = p_in.shift_down(p_in.valuation());
  std::size_t k = k_in - p_in.valuation();

  CentralIndexVerdict v;
  v.index = k_in;
  Polynomial w = lopsidedness_poly(p, k);
  std::size_t lo_sup = p.valuation();
  std::size_t hi_sup = max_support(p);

  if (lo_sup == hi_sup) {  // single monomial
    v.status = CentralStatus::certified_yes;
    v.witness = Rational(1);
    return v;
  }
  if (k == lo_sup) {
    Rational x(1);
    while (sgn(w(x)) < 0) {
      x /= 2;
      ++v.precision_used;
    }
    v.status = CentralStatus::certified_yes;
    v.witness = x;
    return v;
  }
  if (k == hi_sup) {
    Rational x(1);
    while (sgn(w(x)) < 0) {
      x *= 2;
      ++v.precision_used;
    }
    v.status = CentralStatus::certified_yes;
    v.witness = x;
    return v;
  }

  // interior index: W < 0 near 0 and near infinity, so W attains a
  // nonnegative value iff it has a positive real root
  Polynomial s = squarefree_part(w);
  SturmChain chain(s);
  if (chain.count_positive() == 0) {
    v.status = CentralStatus::certified_no;
    return v;
  }

  Rational bound = cauchy_root_bound(w);
  auto isolated = isolate_roots_in(w, Rational(0), bound);
  // sample the isolation endpoints: any nonnegative value is a witness
  for (const auto& iso : isolated) {
    for (const Rational& cand : {iso.lo, iso.hi}) {
      if (sgn(cand) <= 0) continue;
      if (sgn(w(cand)) >= 0) {
        v.status = CentralStatus::certified_yes;
        v.witness = cand;
        return v;
      }
    }
  }
  // all sampled values negative: every positive root is an even-multiplicity
  // tangency; a witness exists iff some tangency point is rational
  Polynomial g = poly_gcd(w, w.derivative());
  for (const auto& iso : isolated) {
    if (sturm_count_interval(g, iso.lo, iso.hi) == 0 && sgn(g(iso.hi)) != 0)
      continue;
    auto cand = hunt_rational_tangency(w, g, iso, budget, v.precision_used);
    if (cand) {
      v.status = CentralStatus::certified_yes;
      v.witness = *cand;
      return v;
    }
  }
  v.status = CentralStatus::undecided;
  return v;
}

SignIndependenceResult sign_independently_real_rooted(const Polynomial& p,
                                                      long budget) {
  if (p.is_zero())
    throw std::domain_error("sign independence of zero polynomial");
  for (const auto& c : p.coeffs())
    if (sgn(c) == 0)
      throw std::invalid_argument(
          "sign_independently_real_rooted requires full support");
  SignIndependenceResult out;
  bool any_undecided = false;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    auto v = central_index_check(p, k, budget);
    if (v.status == CentralStatus::certified_no) {
      out.per_index.push_back(std::move(v));
      out.verdict = CentralStatus::certified_no;
      return out;
    }
    if (v.status == CentralStatus::undecided) any_undecided = true;
    out.per_index.push_back(std::move(v));
  }
  out.verdict = any_undecided ? CentralStatus::undecided
                              : CentralStatus::certified_yes;
  return out;
}

std::pair<std::size_t, bool> slopes_central_promotion(const Polynomial& p,
                                                      const Rational& x) {
  if (sgn(x) <= 0)
    throw std::invalid_argument("slopes_central_promotion: x must be positive");
  TropicalPolynomial t = tropicalize(p);
  TropicalAnalysis an = tropical_roots(t);
  LogValue lnx = LogValue::ln(x);
  LogValue ln3 = LogValue::ln(Rational(3));
  for (const auto& r : an.roots) {
    LogValue d = lnx - r.xi;
    if (d.sign() < 0) d = -d;
    if (LogValue::cmp(d, ln3) != Ordering::greater)
      throw std::invalid_argument("x too close to a tropical root");
  }
  // dominating index at ln x
  std::size_t best = 0;
  bool have = false;
  LogValue best_val;
  for (std::size_t i = 0; i < t.logcoefs().size(); ++i) {
    if (!t.logcoefs()[i]) continue;
    LogValue val = *t.logcoefs()[i] + lnx * Rational(static_cast<long>(i));
    if (!have || LogValue::cmp(val, best_val) == Ordering::greater) {
      best = i;
      best_val = val;
      have = true;
    }
  }
  // exact lopsidedness verification at x
  Polynomial w = lopsidedness_poly(p, best);
  if (sgn(w(x)) < 0)
    throw std::logic_error(
        "slopes_central_promotion: lopsidedness verification failed despite "
        "separation precondition (library defect)");
  return {best, true};
}

namespace {

// rigorous upper bound of sum_{i != k} exp(L_i - L_k + (i-k) * ln x)
bool witness_upper_bound_ok(
    const std::vector<std::optional<LogValue>>& log_abs, std::size_t k,
    const Rational& x, mpfr_prec_t prec) {
  LogValue lnx = LogValue::ln(x);
  Interval total(prec);
  for (std::size_t i = 0; i < log_abs.size(); ++i) {
    if (i == k || !log_abs[i]) continue;
    LogValue e = *log_abs[i] - *log_abs[k] +
                 lnx * Rational(static_cast<long>(i) - static_cast<long>(k));
    total.add(Interval::exp_of(e.enclosure(prec), prec));
  }
  return total.upper_at_most(Rational(1));
}

}  // namespace

CentralStatus central_index_check_bracketed(
    const std::vector<std::optional<LogValue>>& log_abs, std::size_t k,
    long budget) {
  if (k >= log_abs.size() || !log_abs[k])
    throw std::invalid_argument("central_index_check_bracketed: missing a_k");
  std::size_t lo_sup = log_abs.size(), hi_sup = 0;
  for (std::size_t i = 0; i < log_abs.size(); ++i) {
    if (!log_abs[i]) continue;
    lo_sup = std::min(lo_sup, i);
    hi_sup = std::max(hi_sup, i);
  }
  if (lo_sup == hi_sup) return CentralStatus::certified_yes;

  // crossover estimates: term k matches term i at
  // xi = (L_i - L_k) / (k - i); beyond all of them in the right direction
  // the k-th term dominates pointwise
  double lk = (*log_abs[k]).to_double();
  double lo_t = -1e18, hi_t = 1e18;
  for (std::size_t i = 0; i < log_abs.size(); ++i) {
    if (i == k || !log_abs[i]) continue;
    double cross = ((*log_abs[i]).to_double() - lk) /
                   (static_cast<double>(k) - static_cast<double>(i));
    if (i < k)
      lo_t = std::max(lo_t, cross);
    else
      hi_t = std::min(hi_t, cross);
  }
  const double ln2 = std::log(2.0);
  auto dyadic_near = [&](double t) {
    double e = std::clamp(t / ln2, -4e6, 4e6);
    return dyadic(static_cast<long>(std::floor(e)));
  };

  // boundary indices: push ln x past every crossover by a growing margin
  if (k == lo_sup || k == hi_sup) {
    double margin = std::log(2.0 * static_cast<double>(log_abs.size()));
    for (long round = 0; round < 16; ++round, margin *= 2) {
      Rational x = (k == lo_sup) ? dyadic_near(hi_t - margin)
                                 : dyadic_near(lo_t + margin);
      if (witness_upper_bound_ok(log_abs, k, x, 192))
        return CentralStatus::certified_yes;
    }
    return CentralStatus::undecided;
  }

  mpfr_prec_t prec = 128;
  for (long round = 0; round < budget; ++round, prec *= 2) {
    // candidate minimizer of G(t) = sum exp(L_i - L_k + (i-k)t) by a
    // double-precision golden search inside the crossover bracket, then a
    // rigorous recheck
    auto G = [&](double t) {
      double acc = 0;
      for (std::size_t i = 0; i < log_abs.size(); ++i) {
        if (i == k || !log_abs[i]) continue;
        double e = (*log_abs[i]).to_double() - lk +
                   (static_cast<double>(i) - static_cast<double>(k)) * t;
        acc += std::exp(std::min(e, 700.0));
      }
      return acc;
    };
    double lo = std::min(lo_t, hi_t) - 2, hi = std::max(lo_t, hi_t) + 2;
    for (int it = 0; it < 200; ++it) {
      double m1 = lo + (hi - lo) * 0.382, m2 = lo + (hi - lo) * 0.618;
      if (G(m1) < G(m2))
        hi = m2;
      else
        lo = m1;
      if (hi - lo < 1e-9 * (1 + std::abs(lo))) break;
    }
    double tstar = (lo + hi) / 2;
    Rational x = dyadic_near(tstar);
    for (const Rational& cand :
         {x, Rational(x * frac(3, 2)), Rational(x * frac(5, 4)),
          Rational(x * frac(7, 8))}) {
      if (witness_upper_bound_ok(log_abs, k, cand, prec))
        return CentralStatus::certified_yes;
    }

    // two-term AM-GM lower bound: G >= exp(a + p t) + exp(b - q t) with
    // minimum exp((aq + bp)/(p+q)) * ((q/p)^(p/(p+q)) + (p/q)^(q/(p+q)))
    for (std::size_t i = 0; i < k; ++i) {
      if (!log_abs[i]) continue;
      for (std::size_t j = k + 1; j < log_abs.size(); ++j) {
        if (!log_abs[j]) continue;
        Rational pp(static_cast<long>(k - i));
        Rational qq(static_cast<long>(j - k));
        LogValue a = *log_abs[i] - *log_abs[k];
        LogValue b = *log_abs[j] - *log_abs[k];
        Rational denom = pp + qq;
        LogValue expo = (a * qq + b * pp) * (Rational(1) / denom);
        Interval base = Interval::exp_of(expo.enclosure(prec), prec);
        Interval r1 = Interval::pow_of(
            Interval::exact(qq / pp, prec), pp / denom, prec);
        Interval r2 = Interval::pow_of(
            Interval::exact(pp / qq, prec), qq / denom, prec);
        r1.add(r2);
        base.mul(r1);
        if (base.strictly_greater_than(Interval::exact(Rational(1), prec)))
          return CentralStatus::certified_no;
      }
    }
  }
  return CentralStatus::undecided;
}

}  // namespace troprules

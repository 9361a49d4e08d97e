#include "troprules/tropical.hpp"

#include <stdexcept>

#include "troprules/multiplier.hpp"

namespace troprules {

TropicalPolynomial::TropicalPolynomial(
    std::vector<std::optional<LogValue>> logcoefs, std::vector<int> signs)
    : logcoefs_(std::move(logcoefs)), signs_(std::move(signs)) {
  if (logcoefs_.size() != signs_.size())
    throw std::invalid_argument("tropical term/sign length mismatch");
  if (logcoefs_.empty() || !logcoefs_.back().has_value())
    throw std::invalid_argument("leading tropical term must be finite");
  for (std::size_t k = 0; k < logcoefs_.size(); ++k)
    if (logcoefs_[k].has_value() != (signs_[k] != 0))
      throw std::invalid_argument("signs inconsistent with -inf pattern");
}

TropicalPolynomial tropicalize(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("tropicalize of zero polynomial");
  std::vector<std::optional<LogValue>> lc(p.coeffs().size());
  std::vector<int> signs(p.coeffs().size(), 0);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rational& a = p.coeffs()[k];
    if (sgn(a) == 0) continue;
    lc[k] = LogValue::ln(abs(a));
    signs[k] = sgn(a);
  }
  return TropicalPolynomial(std::move(lc), std::move(signs));
}

TropicalPolynomial tropicalize(const Polynomial& p, const MultiplierSeq& lam) {
  if (p.is_zero()) throw std::domain_error("tropicalize of zero polynomial");
  if (lam.degree() < p.degree())
    throw std::invalid_argument(
        "multiplier sequence shorter than polynomial degree");
  std::vector<std::optional<LogValue>> lc(p.coeffs().size());
  std::vector<int> signs(p.coeffs().size(), 0);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rational& a = p.coeffs()[k];
    if (sgn(a) == 0) continue;
    lc[k] = LogValue::ln(abs(a)) + lam.log_entry(k);
    signs[k] = sgn(a);
  }
  return TropicalPolynomial(std::move(lc), std::move(signs));
}

std::vector<std::size_t> upper_hull_indices(
    const std::vector<std::optional<LogValue>>& points) {
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < points.size(); ++k)
    if (points[k].has_value()) support.push_back(k);
  if (support.empty())
    throw std::domain_error("hull of empty support");
  if (support.size() <= 2) return support;

  auto value = [&](std::size_t k) -> const LogValue& { return *points[k]; };
  // pop the middle point while it lies strictly below the chord of its
  // neighbours; collinear points stay
  std::vector<std::size_t> stack;
  for (std::size_t k : support) {
    while (stack.size() >= 2) {
      std::size_t a = stack[stack.size() - 2];
      std::size_t b = stack[stack.size() - 1];
      // slope(a,b) < slope(b,k)  <=>  b below chord a..k
      Rational dab(static_cast<long>(b - a));
      Rational dbk(static_cast<long>(k - b));
      LogValue lhs = (value(b) - value(a)) * dbk;
      LogValue rhs = (value(k) - value(b)) * dab;
      if (LogValue::cmp(lhs, rhs) == Ordering::less)
        stack.pop_back();
      else
        break;
    }
    stack.push_back(k);
  }
  return stack;
}

std::vector<std::size_t> tropical_indices(const TropicalPolynomial& t) {
  return upper_hull_indices(t.logcoefs());
}

std::string to_string(RootClass c) {
  switch (c) {
    case RootClass::positive: return "positive";
    case RootClass::negative: return "negative";
    case RootClass::positive_negative: return "positive-negative";
    case RootClass::non_essential: return "non-essential";
  }
  return "?";
}

bool TropicalRoot::uniform_class() const {
  for (const auto& c : pair_classes)
    if (c != pair_classes.front()) return false;
  return true;
}

long TropicalAnalysis::multiplicity_sum() const {
  long s = 0;
  for (const auto& r : roots) s += r.multiplicity;
  return s;
}

TropicalAnalysis tropical_roots(const TropicalPolynomial& t) {
  TropicalAnalysis out;
  out.indices = tropical_indices(t);
  const auto& idx = out.indices;
  const auto& signs = t.signs();

  for (std::size_t i = 1; i < idx.size(); ++i) {
    std::size_t klo = idx[i - 1], khi = idx[i];
    long gap = static_cast<long>(khi - klo);
    LogValue xi = (*t.logcoefs()[klo] - *t.logcoefs()[khi]) *
                  Rational(Integer(1), Integer(gap));
    bool sign_change = signs[klo] != signs[khi];
    RootClass cls;
    if (gap % 2 != 0)
      cls = sign_change ? RootClass::positive : RootClass::negative;
    else
      cls = sign_change ? RootClass::positive_negative
                        : RootClass::non_essential;

    if (!out.roots.empty() && out.roots.back().xi == xi) {
      out.roots.back().multiplicity += 1;
      out.roots.back().pair_classes.push_back(cls);
    } else {
      out.roots.push_back({std::move(xi), 1, {cls}});
    }
  }

  for (const auto& r : out.roots) {
    for (RootClass c : r.pair_classes) {
      switch (c) {
        case RootClass::positive: ++out.essential_positive; break;
        case RootClass::negative: ++out.essential_negative; break;
        case RootClass::positive_negative:
          ++out.essential_positive;
          ++out.essential_negative;
          break;
        case RootClass::non_essential: break;
      }
    }
  }
  out.essential_total = out.essential_positive + out.essential_negative;
  return out;
}

}  // namespace troprules

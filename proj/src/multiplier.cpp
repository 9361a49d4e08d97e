#include "troprules/multiplier.hpp"

#include <stdexcept>

#include "troprules/tropical.hpp"

namespace troprules {

MultiplierSeq::MultiplierSeq(std::vector<LogValue> log_entries)
    : entries_(std::move(log_entries)) {
  if (entries_.empty())
    throw std::invalid_argument("multiplier sequence must be nonempty");
}

MultiplierSeq MultiplierSeq::dagger(long d) {
  if (d < 0) throw std::invalid_argument("dagger: degree must be >= 0");
  std::vector<LogValue> e;
  e.reserve(static_cast<std::size_t>(d) + 1);
  for (long k = 0; k <= d; ++k) e.emplace_back(Rational(-k * k));
  return MultiplierSeq(std::move(e));
}

MultiplierSeq MultiplierSeq::delta(long d, const Rational& strictness) {
  if (d < 1) throw std::invalid_argument("delta: degree must be >= 1");
  if (strictness <= 1)
    throw std::invalid_argument("delta: strictness factor must exceed 1");
  LogValue delta_d = two_delta(d) * Rational(Integer(1), Integer(2));
  LogValue scaled = delta_d * strictness;
  std::vector<LogValue> e;
  e.reserve(static_cast<std::size_t>(d) + 1);
  for (long k = 0; k <= d; ++k) e.push_back(scaled * Rational(-k * k));
  return MultiplierSeq(std::move(e));
}

MultiplierSeq MultiplierSeq::flat(long d) {
  if (d < 0) throw std::invalid_argument("flat: degree must be >= 0");
  return MultiplierSeq(
      std::vector<LogValue>(static_cast<std::size_t>(d) + 1, LogValue()));
}

MultiplierSeq MultiplierSeq::from_rationals(const std::vector<Rational>& v) {
  std::vector<LogValue> e;
  e.reserve(v.size());
  for (const auto& q : v) {
    if (sgn(q) <= 0)
      throw std::invalid_argument("multiplier entries must be positive");
    e.push_back(LogValue::ln(q));
  }
  return MultiplierSeq(std::move(e));
}

MultiplierSeq MultiplierSeq::power(const Rational& s) const {
  std::vector<LogValue> e;
  e.reserve(entries_.size());
  for (const auto& lv : entries_) e.push_back(lv * s);
  return MultiplierSeq(std::move(e));
}

MultiplierSeq MultiplierSeq::prefix(long d) const {
  if (d < 0 || d > degree())
    throw std::invalid_argument("prefix: bad degree");
  return MultiplierSeq(std::vector<LogValue>(
      entries_.begin(), entries_.begin() + d + 1));
}

std::optional<std::vector<Rational>> MultiplierSeq::rational_values() const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& lv : entries_) {
    auto q = lv.exp_rational();
    if (!q) return std::nullopt;
    out.push_back(*q);
  }
  return out;
}

LogValue two_delta(long d) {
  if (d < 1) throw std::invalid_argument("two_delta: degree must be >= 1");
  LogValue v = LogValue::ln_pow(Rational(36 * d), frac(d * d, 4));
  if (d > 1) v += LogValue::ln_pow(Rational(d), Rational(d + 1));
  v += LogValue::ln(Rational(4));
  return v;
}

bool is_log_concave(const MultiplierSeq& lam) {
  return !log_concavity_violation(lam).has_value();
}

std::optional<std::size_t> log_concavity_violation(const MultiplierSeq& lam) {
  for (std::size_t k = 1; k + 1 < lam.size(); ++k) {
    LogValue lhs = lam.log_entry(k) * Rational(2);
    LogValue rhs = lam.log_entry(k - 1) + lam.log_entry(k + 1);
    if (LogValue::cmp(lhs, rhs) == Ordering::less) return k;
  }
  return std::nullopt;
}

bool truncation_tropically_real_rooted(const MultiplierSeq& lam) {
  std::vector<std::optional<LogValue>> pts;
  pts.reserve(lam.size());
  for (const auto& lv : lam.log_entries()) pts.emplace_back(lv);
  return upper_hull_indices(pts).size() == lam.size();
}

}  // namespace troprules

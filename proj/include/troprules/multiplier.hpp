#ifndef TROPRULES_MULTIPLIER_HPP
#define TROPRULES_MULTIPLIER_HPP

#include <optional>
#include <vector>

#include "troprules/logvalue.hpp"

namespace troprules {

// Finite positive sequence lambda_0..lambda_d stored through the exact
// logarithms ln(lambda_k).
class MultiplierSeq {
 public:
  explicit MultiplierSeq(std::vector<LogValue> log_entries);

  long degree() const { return static_cast<long>(entries_.size()) - 1; }
  std::size_t size() const { return entries_.size(); }
  const LogValue& log_entry(std::size_t k) const { return entries_.at(k); }
  const std::vector<LogValue>& log_entries() const { return entries_; }

  // lambda_k = e^{-k^2}
  static MultiplierSeq dagger(long d);
  // ln lambda_k = -k^2 * Delta_d * strictness, strictness > 1 so the
  // log-concavity gaps strictly exceed 2*Delta_d
  static MultiplierSeq delta(long d,
                             const Rational& strictness = default_strictness());
  static MultiplierSeq flat(long d);  // all ones
  static MultiplierSeq from_rationals(const std::vector<Rational>& values);

  MultiplierSeq power(const Rational& s) const;  // lambda^s
  MultiplierSeq prefix(long d) const;            // restriction to 0..d

  // the lambda_k themselves, when every entry is an exact rational
  std::optional<std::vector<Rational>> rational_values() const;

  static Rational default_strictness() {
    return Rational(1) + dyadic(-20);
  }

 private:
  std::vector<LogValue> entries_;
};

// 2*Delta_d = (d^2/4) ln(36 d) + (d+1) ln d + ln 4, exact.
LogValue two_delta(long d);

// lambda_k^2 >= lambda_{k-1} lambda_{k+1} for all interior k (vacuous for
// fewer than three entries).
bool is_log_concave(const MultiplierSeq& lam);

// All indices 0..d lie on the upper concave hull of (k, ln lambda_k).
bool truncation_tropically_real_rooted(const MultiplierSeq& lam);

// Smallest interior index violating log-concavity, if any.
std::optional<std::size_t> log_concavity_violation(const MultiplierSeq& lam);

}  // namespace troprules

#endif

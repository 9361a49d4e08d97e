#ifndef TROPRULES_CZDS_HPP
#define TROPRULES_CZDS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "troprules/logvalue.hpp"
#include "troprules/multiplier.hpp"

namespace troprules {

enum class CzdsMethod { separation, central };

enum class CzdsStatus { certified, failed, undecided };

struct CzdsCertificate {
  CzdsStatus status = CzdsStatus::undecided;
  std::optional<std::size_t> failed_index;
  CzdsMethod method = CzdsMethod::separation;
  long degree = 0;
  // ln(lambda_k / lambda*_k), the log coefficients of Q_d, when exact
  std::vector<LogValue> q_log_coeffs;
  // Every certificate is conditional on lambda* being a real-to-tropical
  // root preserver; that hypothesis is open for the dagger sequence.
  std::string conditionality =
      "conditional on lambda* being a real-to-tropical root preserver";
};

// Theorem-22-style check: lambda is a CZDS in degree d provided every index
// of Q_d(x) = sum (lambda_k / lambda*_k) x^k is central.
//  - separation: all indices on the hull of the log points of Q_d and all
//    consecutive tropical-root gaps strictly exceed 2 ln 3 (sufficient).
//  - central: the central-index criterion checked per index directly.
CzdsCertificate czds_check(const MultiplierSeq& lam,
                           const MultiplierSeq& lam_star, long d,
                           CzdsMethod method);

// Adaptive enclosure of a real number given by a refinement callback; the
// escape hatch for log entries -k^alpha with non-integer alpha, which leave
// the exact single-ln representation. No exact equality is available, so
// comparisons certify only when an interval strictly clears the bound.
class AdaptiveReal {
 public:
  explicit AdaptiveReal(std::function<Interval(mpfr_prec_t)> eval)
      : eval_(std::move(eval)) {}
  static AdaptiveReal of(const LogValue& v);
  // -k^alpha + k^2 for rational alpha
  static AdaptiveReal power_gap_entry(long k, const Rational& alpha);

  Interval enclosure(mpfr_prec_t prec) const { return eval_(prec); }
  AdaptiveReal operator+(const AdaptiveReal& o) const;
  AdaptiveReal operator-(const AdaptiveReal& o) const;
  AdaptiveReal operator*(const Rational& s) const;

  // certified strict comparison against a LogValue threshold; nullopt when
  // undecided at the precision cap
  std::optional<bool> strictly_greater_than(const LogValue& threshold) const;
  std::optional<bool> strictly_less_than(const LogValue& threshold) const;

 private:
  std::function<Interval(mpfr_prec_t)> eval_;
};

struct AlphaScanRow {
  Rational alpha;
  CzdsStatus status = CzdsStatus::undecided;
  bool exact_path = false;  // integer alpha stays fully exact
};

// Grid scan of alpha in [alpha_lo, alpha_hi] with the given step, checking
// the e^{-k^alpha} sequence against lambda* = dagger by the separation
// method; reports where separation first certifies.
std::vector<AlphaScanRow> alpha_scan(const Rational& alpha_lo,
                                     const Rational& alpha_hi, long d,
                                     const Rational& step);

}  // namespace troprules

#endif

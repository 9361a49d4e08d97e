#ifndef TROPRULES_CENTRAL_HPP
#define TROPRULES_CENTRAL_HPP

#include <optional>
#include <vector>

#include "troprules/polynomial.hpp"
#include "troprules/sturm.hpp"
#include "troprules/tropical.hpp"

namespace troprules {

enum class CentralStatus { certified_yes, certified_no, undecided };

struct CentralIndexVerdict {
  std::size_t index = 0;
  CentralStatus status = CentralStatus::undecided;
  std::optional<Rational> witness;  // x >= 0 with |a_k| x^k >= sum of the rest
  long precision_used = 0;
};

// Decides whether some x >= 0 makes |a_k| x^k dominate the sum of all other
// terms' absolute values. Exact for rational coefficients: the lopsidedness
// polynomial W(y) = |a_k| y^k - sum_{i != k} |a_i| y^i either attains a
// nonnegative value at a rational point (certified-yes with witness) or is
// certifiably negative on (0, inf) by Sturm (certified-no). The only
// undecided case is an exact tangency at an irrational point; a rational
// tangency is hunted within `budget` interval refinements.
CentralIndexVerdict central_index_check(const Polynomial& p, std::size_t k,
                                        long budget = 256);

struct SignIndependenceResult {
  CentralStatus verdict = CentralStatus::undecided;  // yes = all indices central
  std::vector<CentralIndexVerdict> per_index;
};

// Proposition-level test: true iff every k = 0..d is a central index.
// Requires full support (no zero coefficients).
SignIndependenceResult sign_independently_real_rooted(const Polynomial& p,
                                                      long budget = 256);

// Given x whose logarithm is more than ln 3 away from every tropical root of
// tr_p (checked exactly; throws otherwise), returns the dominating tropical
// index at ln x and verifies the lopsidedness inequality at x exactly. The
// verification cannot fail when the precondition holds; a failure indicates
// a library defect and raises logic_error.
std::pair<std::size_t, bool> slopes_central_promotion(const Polynomial& p,
                                                      const Rational& x);

// Central-index test for a polynomial given only through exact log-domain
// coefficient magnitudes (used when the coefficients are not rational).
// Yes: a rational witness passes a rigorous interval upper bound.
// No: a two-term AM-GM lower bound of the dominated sum exceeds 1.
// Otherwise undecided at the given budget.
CentralStatus central_index_check_bracketed(
    const std::vector<std::optional<LogValue>>& log_abs, std::size_t k,
    long budget = 4);

}  // namespace troprules

#endif

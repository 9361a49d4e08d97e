#ifndef TROPRULES_STURM_HPP
#define TROPRULES_STURM_HPP

#include <optional>
#include <vector>

#include "troprules/polynomial.hpp"

namespace troprules {

enum class CountMode { with_multiplicity, distinct };

struct RootCount {
  long positive = 0;
  long negative = 0;
  long zero_multiplicity = 0;
  bool with_multiplicity = true;

  long nonzero_total() const { return positive + negative; }
};

// gcd over Q, returned primitive with positive leading coefficient.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// p / gcd(p, p'), primitive, positive leading coefficient.
Polynomial squarefree_part(const Polynomial& p);

// Yun decomposition: list of (factor, multiplicity) with factor squarefree,
// pairwise coprime, product of factor^multiplicity = p up to a constant.
std::vector<std::pair<Polynomial, long>> squarefree_decomposition(
    const Polynomial& p);

// Sturm chain of a squarefree polynomial, over Z.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& squarefree);

  long variations_at(const Rational& x) const;
  long variations_zero_plus() const;
  long variations_zero_minus() const;
  long variations_pos_inf() const;
  long variations_neg_inf() const;

  // distinct roots in (lo, hi]; requires f(lo) != 0
  long count_left_open(const Rational& lo, const Rational& hi) const {
    return variations_at(lo) - variations_at(hi);
  }
  long count_positive() const {
    return variations_zero_plus() - variations_pos_inf();
  }
  long count_negative() const {
    return variations_neg_inf() - variations_zero_minus();
  }

  int sign_at(const Rational& x) const;

 private:
  std::vector<std::vector<Integer>> chain_;
};

// Exact counts of positive/negative real roots and the multiplicity of the
// root at zero. Throws on the zero polynomial.
RootCount sturm_count(const Polynomial& p,
                      CountMode mode = CountMode::with_multiplicity);

// Number of real roots in the open interval (lo, hi); roots at the endpoints
// are removed by exact deflation before counting.
long sturm_count_interval(const Polynomial& p, const Rational& lo,
                          const Rational& hi,
                          CountMode mode = CountMode::distinct);

// Roots in (lo, +inf) / (0-excluded rays); lo must satisfy lo >= 0.
long sturm_count_above(const Polynomial& p, const Rational& lo,
                       CountMode mode = CountMode::distinct);

// 1 + max |a_i| / |a_d|; every real root has absolute value below this.
Rational cauchy_root_bound(const Polynomial& p);

// Isolating intervals (lo, hi] for the distinct roots of p in (lo, hi),
// each containing exactly one root. p need not be squarefree.
struct IsolatedRoot {
  Rational lo;
  Rational hi;            // root lies in (lo, hi]
  std::optional<Rational> exact;  // set when the root was hit exactly
};
std::vector<IsolatedRoot> isolate_roots_in(const Polynomial& p,
                                           const Rational& lo,
                                           const Rational& hi);

}  // namespace troprules

#endif

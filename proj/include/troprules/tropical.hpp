#ifndef TROPRULES_TROPICAL_HPP
#define TROPRULES_TROPICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "troprules/logvalue.hpp"
#include "troprules/polynomial.hpp"

namespace troprules {

class MultiplierSeq;

// max_k (k*xi + logcoef_k), the log-domain shadow of a real polynomial.
// logcoef is ln|a_k| (plus ln lambda_k when a multiplier sequence is
// applied); missing entries stand for -infinity and drop out of the max.
class TropicalPolynomial {
 public:
  TropicalPolynomial(std::vector<std::optional<LogValue>> logcoefs,
                     std::vector<int> signs);

  long degree() const { return static_cast<long>(logcoefs_.size()) - 1; }
  const std::vector<std::optional<LogValue>>& logcoefs() const {
    return logcoefs_;
  }
  const std::vector<int>& signs() const { return signs_; }
  bool has_term(std::size_t k) const {
    return k < logcoefs_.size() && logcoefs_[k].has_value();
  }

 private:
  std::vector<std::optional<LogValue>> logcoefs_;
  std::vector<int> signs_;  // sign of the source coefficient, 0 where absent
};

TropicalPolynomial tropicalize(const Polynomial& p);
TropicalPolynomial tropicalize(const Polynomial& p, const MultiplierSeq& lam);

// Exponents on the upper concave hull of the finite points (k, logcoef_k);
// collinear points are boundary points and are included.
std::vector<std::size_t> tropical_indices(const TropicalPolynomial& t);

// Shared hull routine on raw log points (used for multiplier sequences too).
std::vector<std::size_t> upper_hull_indices(
    const std::vector<std::optional<LogValue>>& points);

enum class RootClass { positive, negative, positive_negative, non_essential };

std::string to_string(RootClass c);

// One corner of the tropicalization. Multiplicity counts the terms achieving
// the max there, minus one; pair_classes carries the classification of each
// adjacent tropical-index pair merged into this corner (they can differ when
// a collinear run mixes sign patterns).
struct TropicalRoot {
  LogValue xi;
  long multiplicity = 1;
  std::vector<RootClass> pair_classes;

  bool uniform_class() const;
  RootClass cls() const { return pair_classes.front(); }
};

struct TropicalAnalysis {
  std::vector<std::size_t> indices;
  std::vector<TropicalRoot> roots;
  long essential_positive = 0;
  long essential_negative = 0;
  long essential_total = 0;

  long multiplicity_sum() const;
};

TropicalAnalysis tropical_roots(const TropicalPolynomial& t);

}  // namespace troprules

#endif

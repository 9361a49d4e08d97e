#ifndef TROPRULES_CERTIFICATES_HPP
#define TROPRULES_CERTIFICATES_HPP

#include <optional>
#include <string>
#include <vector>

#include "troprules/multiplier.hpp"
#include "troprules/polynomial.hpp"
#include "troprules/tropical.hpp"

namespace troprules {

// A connected component of the rho-neighborhood of the tropical roots of
// tr_p (rho = ln 36d), with the hull-vertex range whose edge roots fall in
// it and the sign data of the lambda-shifted hull vertices inside the range.
struct Cluster {
  LogValue window_lo;  // U = [window_lo, window_hi] in xi = ln x space
  LogValue window_hi;
  std::size_t range_lo = 0;  // [m, n] exponent range
  std::size_t range_hi = 0;
  std::vector<LogValue> roots;              // plain tropical roots inside U
  std::vector<std::size_t> lambda_vertices; // lambda-hull vertices in [m, n]
  std::vector<int> sign_sequence;           // coefficient signs at those
  std::vector<std::size_t> selected_ops;    // decreasing, |ops| = bound
  long bound = 0;                           // M = sign changes of Sigma_U
  bool ops_found = true;
  bool ops_fallback_used = false;
};

enum class WindowCheckMode { strict_roots, no_roots_positive };

struct WindowCheckResult {
  bool pass = false;
  std::string failed_condition;  // which hypothesis failed, and where
  long expected_positive = 0;    // strict-roots: binomial count on the interval
  long counted_positive = 0;     // Sturm count on the bracketing interval
  long expected_negative = 0;    // strict-roots mirror interval
  long counted_negative = 0;
};

// Perturbed-binomial dominance check between exponents m < n over the
// xi-window [win_lo, win_hi]:
//  - strict_roots: the window isolates the single (m,n) edge root with more
//    than ln 4 clearance and interior terms at least ln d + ln 4 below the
//    chord; concludes that p has exactly as many roots as a_m x^m + a_n x^n
//    on [e^lo, e^hi] and on the mirrored negative interval (Sturm-verified).
//  - no_roots_positive: a_m, a_n > 0, dominating indices over the window stay
//    in [m, n] with ln 4 clearance, interior terms positive or below the
//    chord margin; concludes that p has no roots on [e^lo, e^hi].
WindowCheckResult binomial_window_check(const Polynomial& p, std::size_t m,
                                        std::size_t n, const LogValue& win_lo,
                                        const LogValue& win_hi,
                                        WindowCheckMode mode);

std::vector<Cluster> build_clusters(const Polynomial& p,
                                    const MultiplierSeq& lam);

struct ClusterCheck {
  Cluster cluster;
  bool dominance_pass = false;
  std::string dominance_detail;
  long sturm_in_cell = 0;  // positive roots of p in the cluster's cell
  bool within_bound = false;
};

struct CertificateReport {
  bool eq6_satisfied = false;  // lambda gaps strictly exceed 2*Delta_d
  std::vector<ClusterCheck> clusters;
  bool outside_pass = false;
  std::string outside_detail;
  long total_bound = 0;
  long sturm_positive_total = 0;
  long essential_positive = 0;  // of tr^lambda_p
  bool sound = false;  // every check passed and counts are consistent

  std::string summary() const;
};

// Per-cluster Rolle-cascade certificate that p has at most M_i positive
// roots near each cluster and none elsewhere, cross-validated by Sturm.
CertificateReport certify_cluster_bound(const Polynomial& p,
                                        const MultiplierSeq& lam);

// Rational bracketing lo <= e^v <= hi.
std::pair<Rational, Rational> exp_bracket(const LogValue& v, long prec = 96);

}  // namespace troprules

#endif

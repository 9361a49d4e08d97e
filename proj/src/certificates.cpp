#include "troprules/certificates.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "troprules/central.hpp"
#include "troprules/sturm.hpp"

namespace troprules {

namespace {

struct HullData {
  std::vector<std::size_t> vertices;
  std::vector<LogValue> edge_roots;  // root of edge (vertices[j], vertices[j+1])
};

HullData hull_with_roots(const std::vector<std::optional<LogValue>>& pts) {
  HullData h;
  h.vertices = upper_hull_indices(pts);
  for (std::size_t j = 0; j + 1 < h.vertices.size(); ++j) {
    std::size_t a = h.vertices[j], b = h.vertices[j + 1];
    h.edge_roots.push_back((*pts[a] - *pts[b]) *
                           Rational(Integer(1), Integer(b - a)));
  }
  return h;
}

LogValue ln_rat(long v) { return LogValue::ln(Rational(v)); }

// formal l-cascade on the vertex sign sequence: ops zero their own exponent
// and flip everything below; returns surviving signs in order, or nullopt if
// a surviving entry dies some other way
std::vector<int> apply_sign_ops(const std::vector<std::size_t>& vertices,
                                const std::vector<int>& signs,
                                const std::vector<std::size_t>& ops) {
  std::vector<int> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::size_t e = vertices[i];
    long flips = 0;
    bool zeroed = false;
    for (std::size_t op : ops) {
      if (op == e) zeroed = true;
      if (op > e) ++flips;
    }
    if (zeroed) continue;
    out.push_back(flips % 2 == 0 ? signs[i] : -signs[i]);
  }
  return out;
}

long sign_changes(const std::vector<int>& s) {
  long v = 0;
  int last = 0;
  for (int x : s) {
    if (x == 0) continue;
    if (last != 0 && x != last) ++v;
    last = x;
  }
  return v;
}

bool ops_kill_all_changes(const std::vector<std::size_t>& vertices,
                          const std::vector<int>& signs,
                          const std::vector<std::size_t>& ops) {
  return sign_changes(apply_sign_ops(vertices, signs, ops)) == 0;
}

// greedy selection: one operator per sign change, preferring the left vertex
// of the changing pair, staying strictly inside (m, n)
std::optional<std::vector<std::size_t>> greedy_ops(
    const std::vector<std::size_t>& vertices, const std::vector<int>& signs,
    std::size_t m, std::size_t n) {
  std::vector<std::size_t> ops;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (signs[i] == signs[i + 1]) continue;
    std::size_t a = vertices[i], b = vertices[i + 1];
    if (a > m && a < n)
      ops.push_back(a);
    else if (b > m && b < n)
      ops.push_back(b);
    else if (b > a + 1)
      ops.push_back(a + 1);
    else
      return std::nullopt;  // gap-1 change pinned at the range boundary
  }
  std::sort(ops.rbegin(), ops.rend());
  return ops;
}

// bounded exhaustive fallback over multisets of interior positions
std::optional<std::vector<std::size_t>> exhaustive_ops(
    const std::vector<std::size_t>& vertices, const std::vector<int>& signs,
    std::size_t m, std::size_t n, long M) {
  std::vector<std::size_t> candidates;
  for (std::size_t v : vertices)
    if (v > m && v < n) candidates.push_back(v);
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    std::size_t between = vertices[i] + 1;
    if (between > m && between < n && between < vertices[i + 1])
      candidates.push_back(between);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  if (candidates.empty() || M <= 0) return std::nullopt;

  std::vector<std::size_t> pick(static_cast<std::size_t>(M), 0);
  long budget = 200000;
  // multisets as non-decreasing index tuples
  for (;;) {
    if (--budget < 0) return std::nullopt;
    std::vector<std::size_t> ops;
    for (std::size_t ix : pick) ops.push_back(candidates[ix]);
    std::sort(ops.rbegin(), ops.rend());
    if (ops_kill_all_changes(vertices, signs, ops)) return ops;
    // advance
    std::size_t j = pick.size();
    while (j > 0) {
      --j;
      if (pick[j] + 1 < candidates.size()) {
        ++pick[j];
        for (std::size_t t = j + 1; t < pick.size(); ++t) pick[t] = pick[j];
        break;
      }
      if (j == 0) return std::nullopt;
    }
  }
}

Rational midpoint_rational(const Rational& a, const Rational& b) {
  return (a + b) / 2;
}

}  // namespace

std::pair<Rational, Rational> exp_bracket(const LogValue& v, long prec) {
  Interval e = Interval::exp_of(v.enclosure(prec), prec);
  DyadicInterval d = e.to_dyadic();
  return {d.lo, d.hi};
}

WindowCheckResult binomial_window_check(const Polynomial& p, std::size_t m,
                                        std::size_t n, const LogValue& win_lo,
                                        const LogValue& win_hi,
                                        WindowCheckMode mode) {
  WindowCheckResult res;
  if (m >= n) throw std::invalid_argument("binomial_window_check: m < n required");
  if (sgn(p.coeff(m)) == 0 || sgn(p.coeff(n)) == 0)
    throw std::invalid_argument("binomial_window_check: a_m, a_n must be nonzero");
  if (LogValue::cmp(win_lo, win_hi) != Ordering::less) {
    res.failed_condition = "window is empty";
    return res;
  }

  TropicalPolynomial t = tropicalize(p);
  HullData hull = hull_with_roots(t.logcoefs());
  const long d = p.degree();
  LogValue ln4 = ln_rat(4);

  LogValue chord_slope = (*t.logcoefs()[n] - *t.logcoefs()[m]) *
                         Rational(Integer(1), Integer(n - m));
  auto chord_at = [&](std::size_t l) {
    return *t.logcoefs()[m] +
           chord_slope * Rational(static_cast<long>(l) - static_cast<long>(m));
  };

  if (mode == WindowCheckMode::strict_roots) {
    // (1) m, n adjacent hull vertices, their root the only one in the window
    std::size_t edge = hull.edge_roots.size();
    for (std::size_t j = 0; j + 1 < hull.vertices.size(); ++j)
      if (hull.vertices[j] == m && hull.vertices[j + 1] == n) edge = j;
    if (edge == hull.edge_roots.size()) {
      res.failed_condition = "condition (1): (m, n) is not a hull edge";
      return res;
    }
    const LogValue& alpha = hull.edge_roots[edge];
    if (LogValue::cmp(alpha, win_lo) != Ordering::greater ||
        LogValue::cmp(alpha, win_hi) != Ordering::less) {
      res.failed_condition = "condition (1): edge root outside the window";
      return res;
    }
    for (std::size_t j = 0; j < hull.edge_roots.size(); ++j) {
      if (j == edge) continue;
      if (LogValue::cmp(hull.edge_roots[j], win_lo) != Ordering::less &&
          LogValue::cmp(hull.edge_roots[j], win_hi) != Ordering::greater) {
        res.failed_condition =
            "condition (1): another tropical root meets the window";
        return res;
      }
    }
    // (2) endpoints more than ln 4 from every tropical root
    for (const LogValue& r : hull.edge_roots) {
      for (const LogValue* e : {&win_lo, &win_hi}) {
        LogValue dist = *e - r;
        if (dist.sign() < 0) dist = -dist;
        if (LogValue::cmp(dist, ln4) != Ordering::greater) {
          res.failed_condition =
              "condition (2): window endpoint within log 4 of a tropical root";
          return res;
        }
      }
    }
    // (3) interior terms below the chord margin
    for (std::size_t l = m + 1; l < n; ++l) {
      if (sgn(p.coeff(l)) == 0) continue;
      LogValue margin = chord_at(l) - ln_rat(d) - ln4;
      if (LogValue::cmp(*t.logcoefs()[l], margin) == Ordering::greater) {
        res.failed_condition = "condition (3): interior term at exponent " +
                               std::to_string(l) + " above the chord margin";
        return res;
      }
    }
    // conclusion: same root count as the binomial on both intervals
    res.expected_positive = (sgn(p.coeff(m)) != sgn(p.coeff(n))) ? 1 : 0;
    int sm = (m % 2 == 0) ? sgn(p.coeff(m)) : -sgn(p.coeff(m));
    int sn = (n % 2 == 0) ? sgn(p.coeff(n)) : -sgn(p.coeff(n));
    res.expected_negative = (sm != sn) ? 1 : 0;
    for (long prec = 96; prec <= 4096; prec *= 2) {
      auto [xlo_out, xlo_in] = exp_bracket(win_lo, prec);
      auto [xhi_in, xhi_out] = exp_bracket(win_hi, prec);
      if (!(xlo_in < xhi_in)) continue;
      long outer = sturm_count_interval(p, xlo_out, xhi_out,
                                        CountMode::with_multiplicity);
      long inner = sturm_count_interval(p, xlo_in, xhi_in,
                                        CountMode::with_multiplicity);
      if (outer != inner) continue;  // a root hugs the bracket; tighten
      res.counted_positive = outer;
      Polynomial pr = p.reflect();
      long outer_n = sturm_count_interval(pr, xlo_out, xhi_out,
                                          CountMode::with_multiplicity);
      long inner_n = sturm_count_interval(pr, xlo_in, xhi_in,
                                          CountMode::with_multiplicity);
      if (outer_n != inner_n) continue;
      res.counted_negative = outer_n;
      if (res.counted_positive != res.expected_positive ||
          res.counted_negative != res.expected_negative) {
        res.failed_condition = "conclusion mismatch: Sturm disagrees";
        return res;
      }
      res.pass = true;
      return res;
    }
    res.failed_condition = "bracketing did not stabilize";
    return res;
  }

  // no_roots_positive mode
  if (sgn(p.coeff(m)) <= 0 || sgn(p.coeff(n)) <= 0) {
    res.failed_condition = "anchors a_m, a_n must be positive";
    return res;
  }
  // (1) dominating indices over the window stay within [m, n], with ln 4
  // clearance from the edge roots outside the range
  std::size_t vL = hull.vertices.size(), vR = hull.vertices.size();
  for (std::size_t j = 0; j < hull.vertices.size(); ++j) {
    if (hull.vertices[j] >= m && vL == hull.vertices.size()) vL = j;
    if (hull.vertices[j] <= n) vR = j;
  }
  if (vL == hull.vertices.size() || vR == hull.vertices.size() || vL > vR) {
    res.failed_condition = "condition (1): no hull vertex inside [m, n]";
    return res;
  }
  if (vL > 0) {
    LogValue dist = win_lo - hull.edge_roots[vL - 1];
    if (LogValue::cmp(dist, ln4) != Ordering::greater) {
      res.failed_condition =
          "condition (1): left outside edge root within log 4 of the window";
      return res;
    }
  }
  if (vR + 1 < hull.vertices.size()) {
    LogValue dist = hull.edge_roots[vR] - win_hi;
    if (LogValue::cmp(dist, ln4) != Ordering::greater) {
      res.failed_condition =
          "condition (1): right outside edge root within log 4 of the window";
      return res;
    }
  }
  // (2) interior terms positive or below the chord margin
  for (std::size_t l = m + 1; l < n; ++l) {
    if (sgn(p.coeff(l)) > 0 || sgn(p.coeff(l)) == 0) continue;
    LogValue margin = chord_at(l) - ln_rat(d) - ln4;
    if (LogValue::cmp(*t.logcoefs()[l], margin) == Ordering::greater) {
      res.failed_condition =
          "condition (2): negative interior term at exponent " +
          std::to_string(l) + " above the chord margin";
      return res;
    }
  }
  // conclusion: no roots on [e^lo, e^hi]
  auto [xlo_out, unused1] = exp_bracket(win_lo);
  auto [unused2, xhi_out] = exp_bracket(win_hi);
  res.expected_positive = 0;
  res.counted_positive =
      sturm_count_interval(p, xlo_out, xhi_out, CountMode::with_multiplicity);
  if (res.counted_positive != 0) {
    res.failed_condition = "conclusion mismatch: roots found in the window";
    return res;
  }
  res.pass = true;
  return res;
}

std::vector<Cluster> build_clusters(const Polynomial& p,
                                    const MultiplierSeq& lam) {
  if (p.degree() < 1)
    throw std::invalid_argument("build_clusters: degree >= 1 required");
  const long d = p.degree();
  TropicalPolynomial t = tropicalize(p);
  HullData hull = hull_with_roots(t.logcoefs());
  LogValue rho = LogValue::ln(Rational(36 * d));
  LogValue cap = rho + ln_rat(4);
  LogValue two_rho = rho * Rational(2);

  // group consecutive edges whose roots are within 2*rho of each other
  std::vector<std::pair<std::size_t, std::size_t>> edge_groups;  // [first, last]
  for (std::size_t j = 0; j < hull.edge_roots.size(); ++j) {
    if (!edge_groups.empty() &&
        LogValue::cmp(hull.edge_roots[j] -
                          hull.edge_roots[edge_groups.back().second],
                      two_rho) != Ordering::greater) {
      edge_groups.back().second = j;
    } else {
      edge_groups.emplace_back(j, j);
    }
  }

  HullData lam_hull = hull_with_roots(tropicalize(p, lam).logcoefs());

  std::vector<Cluster> out;
  for (std::size_t g = 0; g < edge_groups.size(); ++g) {
    auto [e0, e1] = edge_groups[g];
    Cluster c;
    c.range_lo = hull.vertices[e0];
    c.range_hi = hull.vertices[e1 + 1];
    for (std::size_t j = e0; j <= e1; ++j) c.roots.push_back(hull.edge_roots[j]);

    c.window_lo = c.roots.front() - cap;
    if (g > 0) {
      LogValue mid = (hull.edge_roots[edge_groups[g - 1].second] +
                      c.roots.front()) *
                     Rational(Integer(1), Integer(2));
      if (LogValue::cmp(mid, c.window_lo) == Ordering::greater)
        c.window_lo = mid;
    }
    c.window_hi = c.roots.back() + cap;
    if (g + 1 < edge_groups.size()) {
      LogValue mid = (c.roots.back() + hull.edge_roots[edge_groups[g + 1].first]) *
                     Rational(Integer(1), Integer(2));
      if (LogValue::cmp(mid, c.window_hi) == Ordering::less) c.window_hi = mid;
    }

    for (std::size_t v : lam_hull.vertices) {
      if (v >= c.range_lo && v <= c.range_hi) {
        c.lambda_vertices.push_back(v);
        c.sign_sequence.push_back(t.signs()[v]);
      }
    }
    c.bound = sign_changes(c.sign_sequence);

    if (c.bound > 0 && c.range_hi > c.range_lo + 1) {
      auto ops = greedy_ops(c.lambda_vertices, c.sign_sequence, c.range_lo,
                            c.range_hi);
      if (ops && ops_kill_all_changes(c.lambda_vertices, c.sign_sequence, *ops) &&
          static_cast<long>(ops->size()) == c.bound) {
        c.selected_ops = *ops;
      } else {
        auto fb = exhaustive_ops(c.lambda_vertices, c.sign_sequence,
                                 c.range_lo, c.range_hi, c.bound);
        if (fb) {
          c.selected_ops = *fb;
          c.ops_fallback_used = true;
        } else {
          c.ops_found = false;
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string CertificateReport::summary() const {
  std::ostringstream os;
  os << (sound ? "sound" : "not sound") << ": " << clusters.size()
     << " cluster(s), total bound " << total_bound << ", Sturm positive "
     << sturm_positive_total << ", essential positive " << essential_positive;
  return os.str();
}

CertificateReport certify_cluster_bound(const Polynomial& p,
                                        const MultiplierSeq& lam) {
  if (p.is_zero()) throw std::domain_error("certify of zero polynomial");
  if (p.degree() < 1)
    throw std::invalid_argument("certify_cluster_bound: degree >= 1 required");
  if (lam.degree() < p.degree())
    throw std::invalid_argument("certify_cluster_bound: sequence too short");
  CertificateReport rep;
  const long d = p.degree();

  // Eq. (6) precondition (report only; the certificate is attempted anyway)
  LogValue threshold = two_delta(d);
  rep.eq6_satisfied = true;
  for (long k = 1; k < d; ++k) {
    LogValue gap = lam.log_entry(static_cast<std::size_t>(k)) * Rational(2) -
                   lam.log_entry(static_cast<std::size_t>(k - 1)) -
                   lam.log_entry(static_cast<std::size_t>(k + 1));
    if (LogValue::cmp(gap, threshold) != Ordering::greater) {
      rep.eq6_satisfied = false;
      break;
    }
  }

  RootCount rc = sturm_count(p, CountMode::with_multiplicity);
  rep.sturm_positive_total = rc.positive;
  rep.essential_positive =
      tropical_roots(tropicalize(p, lam)).essential_positive;

  std::vector<Cluster> clusters = build_clusters(p, lam);
  if (clusters.empty()) {  // monomial: nothing to bound
    rep.outside_pass = rep.sturm_positive_total == 0;
    rep.outside_detail = "no tropical roots";
    rep.sound = rep.outside_pass;
    return rep;
  }

  // rational cell boundaries separating the clusters along the positive axis
  TropicalAnalysis plain = tropical_roots(tropicalize(p));
  LogValue ln3 = ln_rat(3);
  auto pick_boundary = [&](const LogValue& target) -> Rational {
    for (long prec = 96; prec <= 65536; prec *= 2) {
      auto [blo, bhi] = exp_bracket(target, prec);
      Rational cand = midpoint_rational(blo, bhi);
      if (sgn(cand) <= 0) continue;
      bool clear = true;
      LogValue lncand = LogValue::ln(cand);
      for (const auto& r : plain.roots) {
        LogValue dist = lncand - r.xi;
        if (dist.sign() < 0) dist = -dist;
        if (LogValue::cmp(dist, ln3) != Ordering::greater) {
          clear = false;
          break;
        }
      }
      if (clear && sgn(p(cand)) != 0) return cand;
    }
    throw std::runtime_error("could not place a clear cell boundary");
  };

  std::vector<Rational> bounds;
  bounds.push_back(pick_boundary(clusters.front().window_lo));
  for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
    LogValue mid = (clusters[i].roots.back() + clusters[i + 1].roots.front()) *
                   Rational(Integer(1), Integer(2));
    bounds.push_back(pick_boundary(mid));
  }
  bounds.push_back(pick_boundary(clusters.back().window_hi));

  // outside validation: boundary points are certified central promotions and
  // the outer rays carry no roots
  rep.outside_pass = true;
  std::ostringstream outside;
  for (const Rational& b : bounds) {
    auto [idx, ok] = slopes_central_promotion(p, b);
    if (!ok) rep.outside_pass = false;
    outside << "x=" << to_string(b) << " -> index " << idx << "; ";
  }
  // roots in (0, b0]: left-open count from the zero-plus limit variations
  long below = 0;
  {
    Polynomial q = p.shift_down(p.valuation());
    for (const auto& [f, mult] : squarefree_decomposition(q)) {
      SturmChain chain(f);
      below += mult * (chain.variations_zero_plus() -
                       chain.variations_at(bounds.front()));
    }
  }
  if (below != 0) {
    rep.outside_pass = false;
    outside << "roots below the first cluster window; ";
  }
  long above = sturm_count_above(p, bounds.back(), CountMode::with_multiplicity);
  if (above != 0) {
    rep.outside_pass = false;
    outside << "roots above the last cluster window; ";
  }
  rep.outside_detail = outside.str();

  // per-cluster dominance and Sturm cross-validation
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    ClusterCheck cc;
    cc.cluster = clusters[i];
    const Cluster& c = cc.cluster;

    if (c.range_hi == c.range_lo + 1) {
      // single-edge cluster: the perturbed-binomial lemma directly
      WindowCheckResult w =
          binomial_window_check(p, c.range_lo, c.range_hi, c.window_lo,
                                c.window_hi, WindowCheckMode::strict_roots);
      cc.dominance_pass = w.pass;
      cc.dominance_detail = w.pass ? "binomial window (strict roots)"
                                   : w.failed_condition;
    } else if (!c.ops_found) {
      cc.dominance_pass = false;
      cc.dominance_detail = "no operator multiset kills the sign changes";
    } else {
      Polynomial q = p;
      for (std::size_t op : c.selected_ops) q = rolle_operator(q, op);
      // surviving vertex signs are uniform; flip so the anchors are positive
      auto survivors =
          apply_sign_ops(c.lambda_vertices, c.sign_sequence, c.selected_ops);
      int target = survivors.empty() ? 1 : survivors.front();
      if (target < 0) q = -q;
      WindowCheckResult w = binomial_window_check(
          q, c.range_lo, c.range_hi, c.window_lo, c.window_hi,
          WindowCheckMode::no_roots_positive);
      cc.dominance_pass = w.pass;
      cc.dominance_detail =
          w.pass ? "Rolle cascade + no-roots window" : w.failed_condition;
    }

    cc.sturm_in_cell = sturm_count_interval(
        p, bounds[i], bounds[i + 1], CountMode::with_multiplicity);
    cc.within_bound = cc.sturm_in_cell <= c.bound;
    rep.total_bound += c.bound;
    rep.clusters.push_back(std::move(cc));
  }

  rep.sound = rep.outside_pass && rep.sturm_positive_total <= rep.total_bound &&
              rep.total_bound <= rep.essential_positive;
  for (const auto& cc : rep.clusters)
    if (!cc.dominance_pass || !cc.within_bound) rep.sound = false;
  return rep;
}

}  // namespace troprules

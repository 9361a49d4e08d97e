#include "troprules/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace troprules {

namespace {

using IVec = std::vector<Integer>;  // dense, trailing element nonzero

long ideg(const IVec& v) { return static_cast<long>(v.size()) - 1; }

void itrim(IVec& v) {
  while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

Integer icontent(const IVec& v) {
  Integer g(0);
  for (const auto& c : v) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

void iprimitivize(IVec& v) {
  Integer g = icontent(v);
  if (g > 1)
    for (auto& c : v) c /= g;
}

IVec iderivative(const IVec& v) {
  if (v.size() <= 1) return {};
  IVec d(v.size() - 1);
  for (std::size_t i = 1; i < v.size(); ++i)
    d[i - 1] = v[i] * static_cast<long>(i);
  return d;
}

// pseudo-remainder: rem(lc(b)^(deg a - deg b + 1) * a, b)
IVec iprem(IVec a, const IVec& b) {
  long db = ideg(b);
  const Integer& d = b.back();
  long e = ideg(a) - db + 1;
  while (!a.empty() && ideg(a) >= db) {
    Integer la = a.back();
    for (auto& c : a) c *= d;
    long shift = ideg(a) - db;
    for (long j = 0; j <= db; ++j)
      a[static_cast<std::size_t>(shift + j)] -= la * b[static_cast<std::size_t>(j)];
    itrim(a);
    --e;
  }
  if (e > 0) {
    Integer f = pow_integer(d, static_cast<unsigned long>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

IVec to_ivec(const Polynomial& p) {
  Integer l(1);
  for (const auto& c : p.coeffs()) l = lcm(l, Integer(c.get_den()));
  IVec out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Rational& c = p.coeffs()[i];
    out[i] = c.get_num() * (l / c.get_den());
  }
  itrim(out);
  iprimitivize(out);
  return out;
}

Polynomial from_ivec(const IVec& v) {
  std::vector<Rational> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = Rational(v[i]);
  return Polynomial(std::move(c));
}

// sign of v at rational point x, via homogeneous evaluation
int isign_at(const IVec& v, const Rational& x) {
  if (v.empty()) return 0;
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  Integer acc(0);
  Integer qpow(1);
  // sum v[i] * p^i * q^(deg-i), Horner from the top
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    acc = acc * p + *it * qpow;
    if (std::next(it) != v.rend()) qpow *= q;
  }
  return sgn(acc);
}

int isign_zero_plus(const IVec& v) {
  for (const auto& c : v)
    if (sgn(c) != 0) return sgn(c);
  return 0;
}

int isign_zero_minus(const IVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) return (i % 2 == 0) ? sgn(v[i]) : -sgn(v[i]);
  return 0;
}

int isign_pos_inf(const IVec& v) { return v.empty() ? 0 : sgn(v.back()); }

int isign_neg_inf(const IVec& v) {
  if (v.empty()) return 0;
  return (ideg(v) % 2 == 0) ? sgn(v.back()) : -sgn(v.back());
}

long count_variations(const std::vector<int>& signs) {
  long var = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

// Primitive PRS gcd over Z.
IVec igcd(IVec a, IVec b) {
  itrim(a);
  itrim(b);
  iprimitivize(a);
  iprimitivize(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (ideg(a) < ideg(b)) std::swap(a, b);
  while (!b.empty()) {
    IVec r = iprem(a, b);
    iprimitivize(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && sgn(a.back()) < 0)
    for (auto& c : a) c = -c;
  return a;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return from_ivec(igcd(to_ivec(a), to_ivec(b)));
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part of zero");
  if (p.degree() == 0) return Polynomial::constant(Rational(1));
  Polynomial g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) {
    IVec v = to_ivec(p);
    if (sgn(v.back()) < 0)
      for (auto& c : v) c = -c;
    return from_ivec(v);
  }
  Polynomial s = p.divide_exact(g);
  IVec v = to_ivec(s);
  if (sgn(v.back()) < 0)
    for (auto& c : v) c = -c;
  return from_ivec(v);
}

std::vector<std::pair<Polynomial, long>> squarefree_decomposition(
    const Polynomial& p) {
  if (p.is_zero())
    throw std::domain_error("squarefree decomposition of zero");
  std::vector<std::pair<Polynomial, long>> out;
  if (p.degree() == 0) return out;
  Polynomial d = p.derivative();
  Polynomial g = poly_gcd(p, d);
  if (g.degree() == 0) {
    out.emplace_back(squarefree_part(p), 1);
    return out;
  }
  // Yun's algorithm
  Polynomial w = p.divide_exact(g);
  Polynomial y = d.divide_exact(g);
  Polynomial z = y - w.derivative();
  long k = 1;
  while (w.degree() > 0) {
    Polynomial f = poly_gcd(w, z);
    if (f.degree() > 0) out.emplace_back(f, k);
    w = w.divide_exact(f);
    y = z.divide_exact(f);
    z = y - w.derivative();
    ++k;
  }
  return out;
}

SturmChain::SturmChain(const Polynomial& squarefree) {
  IVec f = to_ivec(squarefree);
  if (f.empty()) throw std::domain_error("SturmChain of zero polynomial");
  chain_.push_back(f);
  if (ideg(f) == 0) return;
  IVec g = iderivative(f);
  iprimitivize(g);
  chain_.push_back(g);
  while (!chain_.back().empty() && ideg(chain_.back()) > 0) {
    const IVec& a = chain_[chain_.size() - 2];
    const IVec& b = chain_.back();
    long e = ideg(a) - ideg(b) + 1;
    IVec r = iprem(a, b);
    if (r.empty()) break;
    // iprem scaled a by lc(b)^e; flip so the result is a positive multiple
    // of -rem(a, b)
    bool neg_scale = (e % 2 != 0) && sgn(b.back()) < 0;
    for (auto& c : r) c = neg_scale ? c : -c;
    iprimitivize(r);
    chain_.push_back(std::move(r));
  }
}

long SturmChain::variations_at(const Rational& x) const {
  std::vector<int> s(chain_.size());
  for (std::size_t i = 0; i < chain_.size(); ++i) s[i] = isign_at(chain_[i], x);
  return count_variations(s);
}

long SturmChain::variations_zero_plus() const {
  std::vector<int> s(chain_.size());
  for (std::size_t i = 0; i < chain_.size(); ++i) s[i] = isign_zero_plus(chain_[i]);
  return count_variations(s);
}

long SturmChain::variations_zero_minus() const {
  std::vector<int> s(chain_.size());
  for (std::size_t i = 0; i < chain_.size(); ++i) s[i] = isign_zero_minus(chain_[i]);
  return count_variations(s);
}

long SturmChain::variations_pos_inf() const {
  std::vector<int> s(chain_.size());
  for (std::size_t i = 0; i < chain_.size(); ++i) s[i] = isign_pos_inf(chain_[i]);
  return count_variations(s);
}

long SturmChain::variations_neg_inf() const {
  std::vector<int> s(chain_.size());
  for (std::size_t i = 0; i < chain_.size(); ++i) s[i] = isign_neg_inf(chain_[i]);
  return count_variations(s);
}

int SturmChain::sign_at(const Rational& x) const {
  return isign_at(chain_[0], x);
}

RootCount sturm_count(const Polynomial& p, CountMode mode) {
  if (p.is_zero()) throw std::domain_error("undefined root count");
  RootCount rc;
  rc.with_multiplicity = (mode == CountMode::with_multiplicity);
  std::size_t v = p.valuation();
  rc.zero_multiplicity = static_cast<long>(v);
  Polynomial q = p.shift_down(v);
  if (q.degree() == 0) return rc;
  if (mode == CountMode::distinct) {
    SturmChain chain(squarefree_part(q));
    rc.positive = chain.count_positive();
    rc.negative = chain.count_negative();
    return rc;
  }
  for (const auto& [f, m] : squarefree_decomposition(q)) {
    if (f.degree() == 0) continue;
    SturmChain chain(f);
    rc.positive += m * chain.count_positive();
    rc.negative += m * chain.count_negative();
  }
  return rc;
}

namespace {

// removes roots at the given point, returns multiplicity removed
long deflate_at(Polynomial& f, const Rational& x) {
  long mult = 0;
  Polynomial lin({-x, Rational(1)});
  while (!f.is_zero() && sgn(f(x)) == 0) {
    f = f.divide_exact(lin);
    ++mult;
  }
  return mult;
}

}  // namespace

long sturm_count_interval(const Polynomial& p, const Rational& lo,
                          const Rational& hi, CountMode mode) {
  if (p.is_zero()) throw std::domain_error("undefined root count");
  if (!(lo < hi)) throw std::invalid_argument("sturm_count_interval: lo < hi required");
  if (mode == CountMode::distinct) {
    Polynomial s = squarefree_part(p);
    deflate_at(s, lo);
    deflate_at(s, hi);
    if (s.degree() <= 0) return 0;
    SturmChain chain(s);
    return chain.count_left_open(lo, hi);
  }
  long total = 0;
  for (const auto& [f, m] : squarefree_decomposition(p)) {
    Polynomial s = f;
    deflate_at(s, lo);
    deflate_at(s, hi);
    if (s.degree() <= 0) continue;
    SturmChain chain(s);
    total += m * chain.count_left_open(lo, hi);
  }
  return total;
}

long sturm_count_above(const Polynomial& p, const Rational& lo,
                       CountMode mode) {
  if (p.is_zero()) throw std::domain_error("undefined root count");
  if (sgn(lo) < 0) throw std::invalid_argument("sturm_count_above: lo >= 0 required");
  auto count_one = [&](const Polynomial& f) -> long {
    Polynomial s = f;
    deflate_at(s, lo);
    if (s.degree() <= 0) return 0;
    SturmChain chain(s);
    if (sgn(lo) == 0) return chain.count_positive();
    return chain.variations_at(lo) - chain.variations_pos_inf();
  };
  if (mode == CountMode::distinct) return count_one(squarefree_part(p));
  long total = 0;
  for (const auto& [f, m] : squarefree_decomposition(p))
    total += m * count_one(f);
  return total;
}

Rational cauchy_root_bound(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("cauchy_root_bound of zero");
  Rational maxr(0);
  for (long i = 0; i < p.degree(); ++i)
    maxr = std::max(maxr, Rational(abs(p.coeff(static_cast<std::size_t>(i)))));
  return Rational(1) + maxr / abs(p.leading());
}

namespace {

void isolate_rec(const SturmChain& chain, const Rational& lo,
                 const Rational& hi, long count,
                 std::vector<IsolatedRoot>& out) {
  if (count == 0) return;
  if (count == 1) {
    std::optional<Rational> exact;
    if (chain.sign_at(hi) == 0) exact = hi;
    out.push_back({lo, hi, exact});
    return;
  }
  Rational mid = (lo + hi) / 2;
  long c1 = chain.variations_at(lo) - chain.variations_at(mid);
  isolate_rec(chain, lo, mid, c1, out);
  isolate_rec(chain, mid, hi, count - c1, out);
}

}  // namespace

std::vector<IsolatedRoot> isolate_roots_in(const Polynomial& p,
                                           const Rational& lo,
                                           const Rational& hi) {
  Polynomial s = squarefree_part(p);
  deflate_at(s, lo);
  std::vector<IsolatedRoot> out;
  if (s.degree() <= 0) return out;
  SturmChain chain(s);
  long count = chain.count_left_open(lo, hi);
  isolate_rec(chain, lo, hi, count, out);
  return out;
}

}  // namespace troprules

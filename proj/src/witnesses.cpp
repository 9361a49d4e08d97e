#include "troprules/witnesses.hpp"

#include <stdexcept>

#include "troprules/randgen.hpp"

namespace troprules {

namespace {

// Q1 = x+1, Q_{k+1} = Q_k (x^n + 1), n smallest odd integer > deg Q_k
Polynomial binary_tower(int levels) {
  Polynomial q({Rational(1), Rational(1)});
  for (int k = 1; k < levels; ++k) {
    long n = q.degree() + 1;
    if (n % 2 == 0) ++n;
    std::vector<Rational> f(static_cast<std::size_t>(n) + 1, Rational(0));
    f[0] = Rational(1);
    f[static_cast<std::size_t>(n)] = Rational(1);
    q = q * Polynomial(std::move(f));
  }
  return q;
}

Polynomial power_of_x_plus_1(int e) {
  Polynomial p = Polynomial::constant(Rational(1));
  Polynomial lin({Rational(1), Rational(1)});
  for (int i = 0; i < e; ++i) p = p * lin;
  return p;
}

bool four_simple_negative_roots(const Polynomial& p) {
  RootCount with_mult = sturm_count(p, CountMode::with_multiplicity);
  RootCount distinct = sturm_count(p, CountMode::distinct);
  return with_mult.negative == 4 && distinct.negative == 4 &&
         with_mult.positive == 0;
}

}  // namespace

Polynomial build_R() {
  Polynomial q4 = binary_tower(4);
  if (q4.degree() != 20)
    throw std::logic_error("build_R: tower degree drifted");
  Polynomial base = q4.substitute_power(5);  // degree 100, (x+1)^4 divides it

  // split three simple roots off the quadruple root at -1
  Polynomial cube = power_of_x_plus_1(3);
  Polynomial square = power_of_x_plus_1(2);
  Polynomial lin = power_of_x_plus_1(1);
  Polynomial perturbed;
  Rational eps3, eps2, eps1;
  bool found = false;
  for (long t3 = 4; t3 <= 40 && !found; t3 += 4) {
    eps3 = dyadic(-t3);
    for (long t2 = t3 + 8; t2 <= t3 + 32 && !found; t2 += 8) {
      eps2 = dyadic(-t2);
      for (long t1 = t2 + 8; t1 <= t2 + 32 && !found; t1 += 8) {
        eps1 = dyadic(-t1);
        Polynomial cand =
            base + cube * eps3 + square * eps2 + lin * eps1;
        if (four_simple_negative_roots(cand)) {
          perturbed = cand;
          found = true;
        }
      }
    }
  }
  if (!found)
    throw std::runtime_error("build_R: no perturbation split the roots");

  // scale so both end coefficients are exactly 1: choose rho with
  // rho^100 > a_0 minimally on a fine dyadic grid, fold the overshoot into
  // the linear perturbation, and normalize by rho^100
  Rational a0 = perturbed.coeff(0);
  long s = 64;
  Rational step = dyadic(-s);
  Integer j(1);
  {
    // initial guess from (a0 - 1)/100, then exact adjustment
    Rational guess = (a0 - 1) / 100;
    j = guess.get_num() / (guess.get_den() * step.get_num()) *
        step.get_den();
    if (j < 1) j = 1;
  }
  auto rho_of = [&](const Integer& jj) { return Rational(1) + Rational(jj) * step; };
  auto pow100 = [&](const Rational& r) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), 100);
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), 100);
    out.canonicalize();
    return out;
  };
  while (pow100(rho_of(j)) <= a0) j += 1;
  while (j > 1 && pow100(rho_of(j - 1)) > a0) j -= 1;
  Rational rho = rho_of(j);
  Rational target_a0 = pow100(rho);
  Rational extra = target_a0 - a0;  // tiny positive; fold into the x+1 term
  Polynomial adjusted = perturbed + lin * extra;
  if (adjusted.coeff(0) != target_a0)
    throw std::logic_error("build_R: normalization bookkeeping failed");
  if (!four_simple_negative_roots(adjusted))
    throw std::runtime_error("build_R: adjustment disturbed the root count");

  Polynomial r = adjusted.scale_arg(rho) * (Rational(1) / target_a0);
  if (r.coeff(0) != 1 || r.coeff(100) != 1)
    throw std::logic_error("build_R: end coefficients not exactly 1");
  for (long i = 1; i < 100; ++i) {
    Rational c = r.coeff(static_cast<std::size_t>(i));
    if (sgn(c) < 0 || c >= 1)
      throw std::logic_error("build_R: coefficient bound violated");
  }
  if (!four_simple_negative_roots(r))
    throw std::logic_error("build_R: scaling disturbed the root count");
  return r;
}

CounterexampleRecord build_counterexample(long k, long d,
                                          std::optional<MultiplierSeq> lam_opt,
                                          std::optional<Rational> delta_opt) {
  if (k < 0 || k + 100 > d)
    throw std::invalid_argument("build_counterexample: need k + 100 <= d");
  MultiplierSeq lam = lam_opt ? *lam_opt : MultiplierSeq::flat(d);
  if (lam.degree() < d)
    throw std::invalid_argument("build_counterexample: sequence too short");

  Polynomial r = build_R();
  Polynomial xkr = r.mul_power(static_cast<std::size_t>(k));

  CounterexampleRecord rec;
  rec.k = k;
  rec.degree = d;

  Rational delta = delta_opt.value_or(dyadic(-8));
  Polynomial p;
  bool ok = false;
  for (; delta >= dyadic(-4096); delta /= 2) {
    std::vector<Rational> bump(static_cast<std::size_t>(d) + 1, Rational(0));
    bump[0] = delta;
    bump[static_cast<std::size_t>(d)] = delta;
    p = xkr + Polynomial(std::move(bump));
    if (four_simple_negative_roots(p)) {
      ok = true;
      break;
    }
  }
  if (!ok)
    throw std::runtime_error(
        "build_counterexample: no admissible delta above 2^-4096");

  rec.polynomial = p;
  rec.delta = delta;
  rec.lam_log_entries = lam.log_entries();
  rec.real_roots = sturm_count(p, CountMode::with_multiplicity);

  TropicalAnalysis an = tropical_roots(tropicalize(p, lam));
  rec.tropical_root_count = static_cast<long>(an.roots.size());
  rec.essential_positive = an.essential_positive;
  rec.essential_negative = an.essential_negative;
  rec.essential_total = an.essential_total;
  if (rec.tropical_root_count > 3)
    throw std::runtime_error(
        "build_counterexample: more than three tropical roots; the sequence "
        "is not flat enough on [k, k+100]");
  rec.note = "P = delta (x^d + 1) + x^k R, four simple negative roots";
  return rec;
}

FuzzReport conjecture_fuzz(long degree, long trials, std::uint64_t seed,
                           std::optional<MultiplierSeq> lam_opt) {
  if (degree < 1) throw std::invalid_argument("conjecture_fuzz: degree >= 1");
  MultiplierSeq lam = lam_opt ? *lam_opt : MultiplierSeq::dagger(degree);
  if (lam.degree() < degree)
    throw std::invalid_argument("conjecture_fuzz: sequence too short");

  FuzzReport rep;
  rep.degree = degree;
  rep.trials = trials;
  rep.seed = seed;

  for (long t = 0; t < trials; ++t) {
    TrialRng rng(seed, static_cast<std::uint64_t>(t));
    Polynomial p = random_polynomial(rng, degree);
    RootCount rc = sturm_count(p, CountMode::with_multiplicity);
    TropicalAnalysis an = tropical_roots(tropicalize(p, lam));
    if (rc.positive <= an.essential_positive &&
        rc.negative <= an.essential_negative)
      continue;
    // re-verify from scratch before recording
    RootCount rc2 = sturm_count(p, CountMode::with_multiplicity);
    TropicalAnalysis an2 = tropical_roots(tropicalize(p, lam));
    if (rc2.positive <= an2.essential_positive &&
        rc2.negative <= an2.essential_negative)
      continue;
    FuzzViolation v;
    v.trial = static_cast<std::uint64_t>(t);
    v.polynomial = p;
    v.real_positive = rc2.positive;
    v.real_negative = rc2.negative;
    v.essential_positive = an2.essential_positive;
    v.essential_negative = an2.essential_negative;
    rep.violations.push_back(std::move(v));
  }
  return rep;
}

}  // namespace troprules

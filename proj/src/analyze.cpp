#include "troprules/analyze.hpp"

#include <chrono>
#include <sstream>

namespace troprules {

using nlohmann::json;

json to_json(const Rational& q) { return to_string(q); }

json to_json(const LogValue& v) {
  auto form = v.single_ln_form();
  if (form) {
    return json{{"affine", to_string(form->affine)},
                {"scale", to_string(form->scale)},
                {"arg", to_string(form->arg)}};
  }
  json factors = json::array();
  for (const auto& t : v.terms())
    factors.push_back(json{{"base", to_string(t.base)},
                           {"exp", to_string(t.coeff)}});
  return json{{"affine", to_string(v.affine())}, {"factors", factors}};
}

json to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return json{{"coeffs", coeffs}};
}

json to_json(const MultiplierSeq& lam) {
  json entries = json::array();
  for (const auto& lv : lam.log_entries()) entries.push_back(to_json(lv));
  return json{{"log_entries", entries}};
}

json to_json(const RootCount& rc) {
  return json{{"positive", rc.positive},
              {"negative", rc.negative},
              {"zero_multiplicity", rc.zero_multiplicity},
              {"with_multiplicity", rc.with_multiplicity}};
}

json to_json(const TropicalAnalysis& an) {
  json roots = json::array();
  for (const auto& r : an.roots) {
    DyadicInterval approx = r.xi.approx(32);
    std::string cls = r.uniform_class() ? to_string(r.cls()) : "mixed";
    roots.push_back(json{{"xi", to_json(r.xi)},
                         {"approx", decimal_string(approx.midpoint(), 6)},
                         {"mult", r.multiplicity},
                         {"class", cls}});
  }
  return json{{"tropical_indices", an.indices},
              {"roots", roots},
              {"essential_positive", an.essential_positive},
              {"essential_negative", an.essential_negative},
              {"essential_total", an.essential_total}};
}

json to_json(const CertificateReport& rep) {
  json clusters = json::array();
  for (const auto& cc : rep.clusters) {
    json signs = json::array();
    for (int s : cc.cluster.sign_sequence) signs.push_back(s);
    clusters.push_back(
        json{{"window", json{{"lo", to_json(cc.cluster.window_lo)},
                             {"hi", to_json(cc.cluster.window_hi)}}},
             {"index_range",
              json::array({cc.cluster.range_lo, cc.cluster.range_hi})},
             {"signs", signs},
             {"selected_ops", cc.cluster.selected_ops},
             {"M", cc.cluster.bound},
             {"ops_fallback_used", cc.cluster.ops_fallback_used},
             {"checks", json{{"dominance", cc.dominance_pass ? "pass" : "fail"},
                             {"detail", cc.dominance_detail},
                             {"sturm_in_cell", cc.sturm_in_cell},
                             {"within_bound", cc.within_bound}}}});
  }
  return json{{"eq6_satisfied", rep.eq6_satisfied},
              {"clusters", clusters},
              {"outside", json{{"pass", rep.outside_pass},
                               {"detail", rep.outside_detail}}},
              {"total_bound", rep.total_bound},
              {"sturm_positive_total", rep.sturm_positive_total},
              {"essential_positive", rep.essential_positive},
              {"sound", rep.sound}};
}

json to_json(const CounterexampleRecord& rec) {
  json lam = json::array();
  for (const auto& lv : rec.lam_log_entries) lam.push_back(to_json(lv));
  return json{{"polynomial", to_json(rec.polynomial)},
              {"lam_log_entries", lam},
              {"real_roots", to_json(rec.real_roots)},
              {"tropical_root_count", rec.tropical_root_count},
              {"essential_positive", rec.essential_positive},
              {"essential_negative", rec.essential_negative},
              {"essential_total", rec.essential_total},
              {"k", rec.k},
              {"degree", rec.degree},
              {"delta", to_string(rec.delta)},
              {"note", rec.note}};
}

json to_json(const FuzzReport& rep) {
  json viols = json::array();
  for (const auto& v : rep.violations) {
    viols.push_back(json{{"trial", v.trial},
                         {"polynomial", to_json(v.polynomial)},
                         {"real_positive", v.real_positive},
                         {"real_negative", v.real_negative},
                         {"essential_positive", v.essential_positive},
                         {"essential_negative", v.essential_negative}});
  }
  return json{{"degree", rep.degree},
              {"trials", rep.trials},
              {"seed", rep.seed},
              {"violations", viols}};
}

json to_json(const CzdsCertificate& cert) {
  std::string status = cert.status == CzdsStatus::certified ? "certified"
                       : cert.status == CzdsStatus::failed  ? "failed"
                                                            : "undecided";
  json coeffs = json::array();
  for (const auto& lv : cert.q_log_coeffs) coeffs.push_back(to_json(lv));
  json out{{"status", status},
           {"method",
            cert.method == CzdsMethod::separation ? "separation" : "central"},
           {"degree", cert.degree},
           {"q_log_coeffs", coeffs},
           {"conditionality", cert.conditionality}};
  if (cert.failed_index) out["failed_index"] = *cert.failed_index;
  return out;
}

Rational rational_from_json(const json& j) {
  return rational_from_string(j.get<std::string>());
}

LogValue logvalue_from_json(const json& j) {
  Rational affine = rational_from_string(j.at("affine").get<std::string>());
  if (j.contains("factors")) {
    std::vector<LogValue::Term> raw;
    for (const auto& f : j.at("factors")) {
      raw.push_back({Integer(f.at("base").get<std::string>(), 10),
                     rational_from_string(f.at("exp").get<std::string>())});
    }
    return LogValue::from_parts(std::move(affine), std::move(raw));
  }
  Rational scale = rational_from_string(j.at("scale").get<std::string>());
  Rational arg = rational_from_string(j.at("arg").get<std::string>());
  if (sgn(arg) <= 0) throw std::invalid_argument("LogValue arg must be positive");
  return LogValue(affine) + LogValue::ln_pow(arg, scale);
}

Polynomial polynomial_from_json(const json& j) {
  if (j.contains("coeffs")) {
    std::vector<Rational> c;
    for (const auto& e : j.at("coeffs"))
      c.push_back(rational_from_string(e.get<std::string>()));
    return Polynomial(std::move(c));
  }
  if (j.contains("terms")) {
    std::size_t top = 0;
    for (const auto& t : j.at("terms"))
      top = std::max(top, t.at("exp").get<std::size_t>());
    std::vector<Rational> c(top + 1, Rational(0));
    for (const auto& t : j.at("terms"))
      c[t.at("exp").get<std::size_t>()] +=
          rational_from_string(t.at("coef").get<std::string>());
    return Polynomial(std::move(c));
  }
  throw std::invalid_argument("polynomial JSON needs coeffs or terms");
}

MultiplierSeq multiplier_from_json(const json& j) {
  if (j.contains("preset")) {
    std::string preset = j.at("preset").get<std::string>();
    long d = j.at("degree").get<long>();
    if (preset == "dagger") return MultiplierSeq::dagger(d);
    if (preset == "delta") return MultiplierSeq::delta(d);
    if (preset == "flat") return MultiplierSeq::flat(d);
    throw std::invalid_argument("unknown multiplier preset: " + preset);
  }
  std::vector<LogValue> entries;
  for (const auto& e : j.at("log_entries"))
    entries.push_back(logvalue_from_json(e));
  return MultiplierSeq(std::move(entries));
}

CounterexampleRecord counterexample_from_json(const json& j) {
  CounterexampleRecord rec;
  rec.polynomial = polynomial_from_json(j.at("polynomial"));
  for (const auto& e : j.at("lam_log_entries"))
    rec.lam_log_entries.push_back(logvalue_from_json(e));
  rec.k = j.at("k").get<long>();
  rec.degree = j.at("degree").get<long>();
  rec.delta = rational_from_string(j.at("delta").get<std::string>());
  rec.note = j.value("note", "");

  // self-verify the stored claims
  rec.real_roots = sturm_count(rec.polynomial, CountMode::with_multiplicity);
  MultiplierSeq lam{rec.lam_log_entries};
  TropicalAnalysis an = tropical_roots(tropicalize(rec.polynomial, lam));
  rec.tropical_root_count = static_cast<long>(an.roots.size());
  rec.essential_positive = an.essential_positive;
  rec.essential_negative = an.essential_negative;
  rec.essential_total = an.essential_total;

  const json& stored = j.at("real_roots");
  if (stored.at("positive").get<long>() != rec.real_roots.positive ||
      stored.at("negative").get<long>() != rec.real_roots.negative)
    throw std::runtime_error("counterexample record failed re-verification");
  if (j.at("tropical_root_count").get<long>() != rec.tropical_root_count)
    throw std::runtime_error("counterexample record failed re-verification");
  return rec;
}

AnalysisReport analyze(
    const Polynomial& p, const std::string& echo,
    const std::vector<std::pair<std::string, MultiplierSeq>>& lams) {
  auto t0 = std::chrono::steady_clock::now();
  AnalysisReport rep;
  rep.input_echo = echo;
  rep.polynomial = p;
  auto [dp, dn] = descartes_counts(p);
  rep.descartes_positive = dp;
  rep.descartes_negative = dn;
  rep.roots = sturm_count(p, CountMode::with_multiplicity);
  for (const auto& [label, lam] : lams) {
    LamAnalysis la{label, lam, tropical_roots(tropicalize(p, lam)), false};
    la.conjecture_holds =
        rep.roots.positive <= la.analysis.essential_positive &&
        rep.roots.negative <= la.analysis.essential_negative;
    if (!la.conjecture_holds) rep.conjecture_violated = true;
    rep.per_lambda.push_back(std::move(la));
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

std::string AnalysisReport::text() const {
  std::ostringstream os;
  os << "input: " << input_echo << "\n";
  os << "polynomial: " << polynomial.to_string() << "\n";
  os << "descartes bounds: positive <= " << descartes_positive
     << ", negative <= " << descartes_negative << "\n";
  os << "real roots (with multiplicity): positive " << roots.positive
     << ", negative " << roots.negative << ", zero multiplicity "
     << roots.zero_multiplicity << "\n";
  for (const auto& la : per_lambda) {
    os << "[" << la.label << "] tropical indices:";
    for (auto k : la.analysis.indices) os << " " << k;
    os << "\n";
    for (const auto& r : la.analysis.roots) {
      os << "  root xi ~ " << decimal_string(r.xi.approx(32).midpoint(), 6)
         << "  mult " << r.multiplicity << "  class "
         << (r.uniform_class() ? to_string(r.cls()) : std::string("mixed"))
         << "\n";
    }
    os << "  essential: positive " << la.analysis.essential_positive
       << ", negative " << la.analysis.essential_negative << ", total "
       << la.analysis.essential_total << "\n";
    os << "  conjecture comparison: "
       << (la.conjecture_holds ? "holds" : "VIOLATED") << "\n";
  }
  return os.str();
}

json AnalysisReport::json() const {
  nlohmann::json per = nlohmann::json::array();
  for (const auto& la : per_lambda) {
    per.push_back(nlohmann::json{{"label", la.label},
                                 {"lambda", to_json(la.lam)},
                                 {"analysis", to_json(la.analysis)},
                                 {"conjecture_holds", la.conjecture_holds}});
  }
  return nlohmann::json{{"input", input_echo},
                        {"polynomial", to_json(polynomial)},
                        {"descartes",
                         nlohmann::json{{"positive", descartes_positive},
                                        {"negative", descartes_negative}}},
                        {"real_roots", to_json(roots)},
                        {"per_lambda", per},
                        {"conjecture_violated", conjecture_violated},
                        {"elapsed_seconds", elapsed_seconds}};
}

}  // namespace troprules

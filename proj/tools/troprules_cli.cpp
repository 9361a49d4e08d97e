#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "troprules/analyze.hpp"
#include "troprules/certificates.hpp"
#include "troprules/czds.hpp"
#include "troprules/preservers.hpp"
#include "troprules/randgen.hpp"
#include "troprules/witnesses.hpp"

namespace {

using namespace troprules;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitViolation = 3;
constexpr int kExitCorpus = 4;

Polynomial load_polynomial(const std::string& arg) {
  // a path to a JSON file, inline JSON, or the inline expression syntax
  if (!arg.empty() && arg.front() == '{')
    return polynomial_from_json(json::parse(arg));
  std::ifstream in(arg);
  if (in.good()) {
    json j;
    in >> j;
    return polynomial_from_json(j);
  }
  return parse_polynomial(arg);
}

MultiplierSeq load_multiplier(const std::string& arg, long degree) {
  if (arg == "dagger") return MultiplierSeq::dagger(degree);
  if (arg == "delta") return MultiplierSeq::delta(std::max(degree, 1L));
  if (arg == "flat") return MultiplierSeq::flat(degree);
  if (!arg.empty() && arg.front() == '{')
    return multiplier_from_json(json::parse(arg));
  std::ifstream in(arg);
  if (!in.good()) throw std::runtime_error("cannot open multiplier file " + arg);
  json j;
  in >> j;
  return multiplier_from_json(j);
}

json provenance(std::uint64_t seed) {
  return json{{"seed", seed}, {"version", "troprules 0.1.0"}};
}

int append_corpus(const std::string& path, const json& line) {
  std::ofstream out(path, std::ios::app);
  if (!out.good()) return kExitCorpus;
  out << line.dump() << "\n";
  return out.good() ? kExitOk : kExitCorpus;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tropical analysis of real univariate polynomials"};
  app.require_subcommand(1);

  bool as_json = false;
  std::uint64_t seed = 1;
  long precision_cap = 0;
  std::string corpus_path = "counterexamples.jsonl";
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--seed", seed, "seed for randomized runs");
  app.add_option("--precision-cap", precision_cap,
                 "comparison precision cap in bits");
  app.add_option("--corpus", corpus_path, "counterexample corpus path");

  // analyze
  auto* cmd_analyze = app.add_subcommand("analyze", "full report for one polynomial");
  std::string poly_arg;
  std::vector<std::string> lam_args;
  cmd_analyze->add_option("polynomial", poly_arg, "inline expression or JSON file")
      ->required();
  cmd_analyze->add_option("--lambda", lam_args,
                          "multiplier sequences (dagger|delta|flat|file)");

  // fuzz
  auto* cmd_fuzz = app.add_subcommand("fuzz", "conjecture fuzzing campaign");
  long fuzz_degree = 4;
  long fuzz_trials = 1000;
  std::string fuzz_lam = "dagger";
  cmd_fuzz->add_option("--degree", fuzz_degree, "polynomial degree");
  cmd_fuzz->add_option("--trials", fuzz_trials, "number of trials");
  cmd_fuzz->add_option("--lambda", fuzz_lam, "multiplier sequence");

  // counterexample
  auto* cmd_ce = app.add_subcommand("counterexample",
                                    "build the non-preserver witness");
  long ce_k = 0;
  long ce_d = 102;
  std::string ce_lam = "flat";
  cmd_ce->add_option("--k", ce_k, "shift exponent");
  cmd_ce->add_option("--degree", ce_d, "total degree (k + 100 <= degree)");
  cmd_ce->add_option("--lambda", ce_lam, "multiplier sequence");

  // preserver-search
  auto* cmd_ps = app.add_subcommand("preserver-search",
                                    "empirical s-power search");
  long ps_degree = 3;
  long ps_trials = 200;
  cmd_ps->add_option("--degree", ps_degree, "polynomial degree");
  cmd_ps->add_option("--trials", ps_trials, "trials per candidate power");

  // czds
  auto* cmd_czds = app.add_subcommand("czds", "zero-diminishing certificates");
  std::string czds_alpha = "3";
  long czds_degree = 50;
  std::string czds_method = "separation";
  std::string czds_lam_star = "dagger";
  bool czds_scan = false;
  std::string czds_alpha_hi = "3";
  std::string czds_step = "1/8";
  cmd_czds->add_option("--alpha", czds_alpha, "exponent alpha (rational)");
  cmd_czds->add_option("--degree", czds_degree, "degree d");
  cmd_czds->add_option("--method", czds_method, "separation|central");
  cmd_czds->add_option("--lambda-star", czds_lam_star,
                       "assumed preserver (dagger|file)");
  cmd_czds->add_flag("--scan", czds_scan, "scan alpha up to --alpha-hi");
  cmd_czds->add_option("--alpha-hi", czds_alpha_hi, "scan upper bound");
  cmd_czds->add_option("--step", czds_step, "scan step");

  // certify
  auto* cmd_cert = app.add_subcommand("certify",
                                      "cluster/Rolle certificate for one polynomial");
  std::string cert_poly;
  std::string cert_lam = "delta";
  cmd_cert->add_option("polynomial", cert_poly, "inline expression or JSON file")
      ->required();
  cmd_cert->add_option("--lambda", cert_lam, "multiplier sequence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (const char* env = std::getenv("TROPRULES_PRECISION_CAP"); env && *env)
    set_logvalue_precision_cap(std::atol(env));
  if (precision_cap > 0) set_logvalue_precision_cap(precision_cap);

  try {
    if (*cmd_analyze) {
      Polynomial p = load_polynomial(poly_arg);
      std::vector<std::pair<std::string, MultiplierSeq>> lams;
      if (lam_args.empty()) lam_args.push_back("dagger");
      for (const auto& la : lam_args)
        lams.emplace_back(la, load_multiplier(la, std::max(p.degree(), 0L)));
      AnalysisReport rep = analyze(p, poly_arg, lams);
      if (as_json)
        std::cout << rep.json().dump(2) << "\n";
      else
        std::cout << rep.text();
      return rep.conjecture_violated ? kExitViolation : kExitOk;
    }

    if (*cmd_fuzz) {
      MultiplierSeq lam = load_multiplier(fuzz_lam, fuzz_degree);
      FuzzReport rep = conjecture_fuzz(fuzz_degree, fuzz_trials, seed, lam);
      json out = to_json(rep);
      out["provenance"] = provenance(seed);
      if (as_json)
        std::cout << out.dump(2) << "\n";
      else
        std::cout << "degree " << rep.degree << ", " << rep.trials
                  << " trials, " << rep.violations.size() << " violation(s)\n";
      if (!rep.violations.empty()) {
        for (const auto& v : rep.violations) {
          json line = json{{"kind", "conjecture_violation"},
                           {"degree", rep.degree},
                           {"trial", v.trial},
                           {"polynomial", to_json(v.polynomial)},
                           {"provenance", provenance(seed)}};
          if (int rc = append_corpus(corpus_path, line); rc != kExitOk)
            return rc;
        }
        return kExitViolation;
      }
      return kExitOk;
    }

    if (*cmd_ce) {
      MultiplierSeq lam = load_multiplier(ce_lam, ce_d);
      CounterexampleRecord rec = build_counterexample(ce_k, ce_d, lam);
      json out = to_json(rec);
      out["provenance"] = provenance(seed);
      if (as_json)
        std::cout << out.dump(2) << "\n";
      else
        std::cout << "degree " << rec.degree << ": " << rec.real_roots.negative
                  << " negative real roots vs " << rec.essential_total
                  << " essential tropical roots (" << rec.tropical_root_count
                  << " tropical roots); preserver violated: "
                  << (rec.preserver_violated() ? "yes" : "no") << "\n";
      if (int rc = append_corpus(corpus_path, out); rc != kExitOk) return rc;
      return kExitOk;
    }

    if (*cmd_ps) {
      TrialRng rng(seed, 0);
      MultiplierSeq base = random_log_concave_sequence(rng, ps_degree, true);
      SPowerResult res = s_power_search(base, ps_degree, ps_trials, seed);
      json out{{"s_star", to_string(res.s_star)},
               {"degree", res.degree},
               {"trials_per_s", res.trials_per_s},
               {"provenance", provenance(seed)}};
      if (res.largest_failing_s) {
        out["largest_failing_s"] = to_string(*res.largest_failing_s);
        out["failing_witness"] = to_json(*res.failing_witness);
      }
      if (as_json) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "s* = " << to_string(res.s_star);
        if (res.largest_failing_s)
          std::cout << " (largest failing s = "
                    << to_string(*res.largest_failing_s) << ")";
        std::cout << "\n";
      }
      return kExitOk;
    }

    if (*cmd_czds) {
      MultiplierSeq lam_star = load_multiplier(czds_lam_star, czds_degree);
      if (czds_scan) {
        auto rows = alpha_scan(rational_from_string(czds_alpha),
                               rational_from_string(czds_alpha_hi),
                               czds_degree, rational_from_string(czds_step));
        json out = json::array();
        std::optional<Rational> threshold;
        for (const auto& r : rows) {
          std::string st = r.status == CzdsStatus::certified ? "certified"
                           : r.status == CzdsStatus::failed  ? "failed"
                                                             : "undecided";
          if (!threshold && r.status == CzdsStatus::certified)
            threshold = r.alpha;
          out.push_back(json{{"alpha", to_string(r.alpha)},
                             {"status", st},
                             {"exact", r.exact_path}});
          if (!as_json)
            std::cout << "alpha=" << to_string(r.alpha) << "  " << st
                      << (r.exact_path ? "  (exact)" : "") << "\n";
        }
        if (as_json) {
          json wrap{{"rows", out}};
          if (threshold) wrap["first_certified_alpha"] = to_string(*threshold);
          std::cout << wrap.dump(2) << "\n";
        } else if (threshold) {
          std::cout << "separation first certifies at alpha = "
                    << to_string(*threshold) << "\n";
        }
        return kExitOk;
      }
      Rational alpha = rational_from_string(czds_alpha);
      if (alpha.get_den() != 1)
        throw std::runtime_error(
            "non-integer alpha is available through --scan (interval path)");
      long ai = alpha.get_num().get_si();
      std::vector<LogValue> entries;
      for (long k = 0; k <= czds_degree; ++k) {
        Integer ka = pow_integer(Integer(k), static_cast<unsigned long>(ai));
        entries.emplace_back(Rational(-ka));
      }
      MultiplierSeq lam(std::move(entries));
      CzdsMethod method = czds_method == "central" ? CzdsMethod::central
                                                   : CzdsMethod::separation;
      CzdsCertificate cert = czds_check(lam, lam_star, czds_degree, method);
      json out = to_json(cert);
      if (as_json)
        std::cout << out.dump(2) << "\n";
      else
        std::cout << "czds alpha=" << czds_alpha << " degree=" << czds_degree
                  << " method=" << czds_method << ": "
                  << out["status"].get<std::string>() << " ("
                  << cert.conditionality << ")\n";
      return kExitOk;
    }

    if (*cmd_cert) {
      Polynomial p = load_polynomial(cert_poly);
      MultiplierSeq lam = load_multiplier(cert_lam, std::max(p.degree(), 1L));
      CertificateReport rep = certify_cluster_bound(p, lam);
      if (as_json)
        std::cout << to_json(rep).dump(2) << "\n";
      else
        std::cout << rep.summary() << "\n";
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what()
              << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}

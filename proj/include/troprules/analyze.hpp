#ifndef TROPRULES_ANALYZE_HPP
#define TROPRULES_ANALYZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "troprules/certificates.hpp"
#include "troprules/czds.hpp"
#include "troprules/multiplier.hpp"
#include "troprules/polynomial.hpp"
#include "troprules/sturm.hpp"
#include "troprules/tropical.hpp"
#include "troprules/witnesses.hpp"

namespace troprules {

// JSON forms shared by the CLI and the corpus files.
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const LogValue& v);
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const MultiplierSeq& lam);
nlohmann::json to_json(const TropicalAnalysis& an);
nlohmann::json to_json(const RootCount& rc);
nlohmann::json to_json(const CertificateReport& rep);
nlohmann::json to_json(const CounterexampleRecord& rec);
nlohmann::json to_json(const FuzzReport& rep);
nlohmann::json to_json(const CzdsCertificate& cert);

Rational rational_from_json(const nlohmann::json& j);
LogValue logvalue_from_json(const nlohmann::json& j);
Polynomial polynomial_from_json(const nlohmann::json& j);
MultiplierSeq multiplier_from_json(const nlohmann::json& j);

// Re-verifies the stored claims (Sturm counts, tropical counts) and throws
// on mismatch; corpus records are self-verifying on load.
CounterexampleRecord counterexample_from_json(const nlohmann::json& j);

struct LamAnalysis {
  std::string label;
  MultiplierSeq lam;
  TropicalAnalysis analysis;
  bool conjecture_holds = false;
};

struct AnalysisReport {
  std::string input_echo;
  Polynomial polynomial;
  long descartes_positive = 0;
  long descartes_negative = 0;
  RootCount roots;
  std::vector<LamAnalysis> per_lambda;
  bool conjecture_violated = false;
  double elapsed_seconds = 0;

  std::string text() const;
  nlohmann::json json() const;
};

AnalysisReport analyze(const Polynomial& p, const std::string& echo,
                       const std::vector<std::pair<std::string, MultiplierSeq>>&
                           lams);

}  // namespace troprules

#endif

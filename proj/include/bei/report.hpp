#pragma once

#include <string>

#include "json.hpp"

#include "bei/cutsets.hpp"
#include "bei/scm.hpp"

namespace bei {

inline constexpr const char* kArtifactName = "bei";
inline constexpr const char* kArtifactVersion = "0.1.0";

struct RunConfig {
  long long characteristic = alg::kDefaultCharacteristic;
  alg::OrderKind order = alg::OrderKind::degrevlex;
  int max_cutset_n = 20;
  int oracle_max_vars = 16;
  std::string format = "json";  // json | table
};

// every report embeds this envelope so runs are reproducible from the output
nlohmann::json config_json(const RunConfig& cfg);

nlohmann::json verdict_json(const Verdict& v);
nlohmann::json cutset_report_json(const Graph& g, const std::vector<CutsetProfile>& ps,
                                  const RunConfig& cfg);
nlohmann::json classify_report_json(const Verdict& v, const RunConfig& cfg);
nlohmann::json identity_report_json(const IdentityReport& rep, const RunConfig& cfg);

std::string render_cutset_table(const Graph& g, const std::vector<CutsetProfile>& ps);
std::string render_verdict_table(const Verdict& v, int indent = 0);
std::string render_identity_table(const IdentityReport& rep);

}  // namespace bei

#include "bei/report.hpp"

#include <sstream>

namespace bei {

using nlohmann::json;

json config_json(const RunConfig& cfg) {
  return {
      {"artifact", {{"name", kArtifactName}, {"version", kArtifactVersion}}},
      {"characteristic", cfg.characteristic},
      {"order", alg::order_name(cfg.order)},
      {"maxCutsetN", cfg.max_cutset_n},
      {"oracleBudget", cfg.oracle_max_vars},
  };
}

json verdict_json(const Verdict& v) {
  json j{{"status", status_name(v.status)}, {"rule", v.rule}, {"fingerprint", v.fingerprint}};
  if (!v.params.empty()) j["parameters"] = v.params;
  if (!v.note.empty()) j["note"] = v.note;
  if (!v.transcript.empty()) {
    json t = json::array();
    for (const auto& lv : v.transcript)
      t.push_back({{"dim", lv.dim}, {"level", lv.level}, {"depth", lv.depth}, {"ok", lv.ok}});
    j["transcript"] = t;
  }
  if (!v.parts.empty()) {
    json p = json::array();
    for (const auto& part : v.parts) p.push_back(verdict_json(part));
    j["parts"] = p;
  }
  return j;
}

json cutset_report_json(const Graph& g, const std::vector<CutsetProfile>& ps,
                        const RunConfig& cfg) {
  auto sp = spectrum(ps);
  json cs = json::array();
  for (const auto& p : ps)
    cs.push_back({{"t", p.t}, {"c", p.c}, {"primeDim", p.prime_dim}});
  return {
      {"config", config_json(cfg)},
      {"n", g.n},
      {"fingerprint", write_graph6(g)},
      {"cutsets", cs},
      {"dims", sp.dims},
      {"krullDim", sp.krull_dim},
      {"m", sp.min_dim},
      {"witness", sp.witness},
  };
}

json classify_report_json(const Verdict& v, const RunConfig& cfg) {
  return {{"config", config_json(cfg)}, {"verdict", verdict_json(v)}};
}

json identity_report_json(const IdentityReport& rep, const RunConfig& cfg) {
  json lv = json::array();
  for (const auto& l : rep.levels) lv.push_back({{"i", l.i}, {"holds", l.holds}});
  json j{
      {"config", config_json(cfg)},
      {"vertex", rep.vertex},
      {"maxLevel", rep.max_i},
      {"levels", lv},
      {"holds", rep.holds},
      {"unknown", rep.unknown},
  };
  if (rep.first_failure >= 0) j["firstFailure"] = rep.first_failure;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

static std::string set_to_string(const VertexSet& t) {
  if (t.empty()) return "{}";
  std::string s = "{";
  for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + std::to_string(t[k]);
  return s + "}";
}

std::string render_cutset_table(const Graph& g, const std::vector<CutsetProfile>& ps) {
  auto sp = spectrum(ps);
  std::ostringstream out;
  out << "n = " << g.n << ", cutsets = " << ps.size() << "\n";
  out << "cutset\tc\tprimeDim\n";
  for (const auto& p : ps)
    out << set_to_string(p.t) << "\t" << p.c << "\t" << p.prime_dim << "\n";
  out << "dims = {";
  for (std::size_t k = 0; k < sp.dims.size(); ++k) out << (k ? "," : "") << sp.dims[k];
  out << "}, krullDim = " << sp.krull_dim << ", m = " << sp.min_dim
      << ", witness = " << set_to_string(sp.witness) << "\n";
  return out.str();
}

std::string render_verdict_table(const Verdict& v, int indent) {
  std::ostringstream out;
  std::string pad(2 * indent, ' ');
  out << pad << status_name(v.status) << " via " << v.rule;
  if (!v.params.empty()) {
    out << " (";
    bool first = true;
    for (const auto& [k, val] : v.params) {
      out << (first ? "" : ", ") << k << "=" << val;
      first = false;
    }
    out << ")";
  }
  out << "\n";
  if (!v.note.empty()) out << pad << "  note: " << v.note << "\n";
  for (const auto& lv : v.transcript)
    out << pad << "  dim " << lv.dim << ": depth(level " << lv.level << ") = " << lv.depth
        << (lv.ok ? "  ok" : "  MISMATCH") << "\n";
  for (const auto& part : v.parts) out << render_verdict_table(part, indent + 1);
  return out.str();
}

std::string render_identity_table(const IdentityReport& rep) {
  std::ostringstream out;
  out << "vertex " << rep.vertex << ", levels 0.." << rep.max_i << "\n";
  for (const auto& l : rep.levels)
    out << "  i = " << l.i << ": " << (l.holds ? "equal" : "NOT EQUAL") << "\n";
  if (rep.unknown)
    out << "verdict: unknown (" << rep.note << ")\n";
  else if (rep.holds)
    out << "verdict: identity holds on the whole window\n";
  else
    out << "verdict: first failure at i = " << rep.first_failure << "\n";
  return out.str();
}

}  // namespace bei

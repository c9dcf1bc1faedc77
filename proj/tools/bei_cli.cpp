#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bei/cutsets.hpp"
#include "bei/graph_io.hpp"
#include "bei/report.hpp"
#include "bei/scm.hpp"

namespace {

using nlohmann::json;

struct CliConfig : bei::RunConfig {
  bool with_oracle = false;
  int jobs = 0;  // 0 = hardware concurrency
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw bei::invalid_input("cannot open input: " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

bool identity_labels(const std::vector<int>& labels) {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] != static_cast<int>(k) + 1) return false;
  return true;
}

void emit(const json& j, const CliConfig& cfg, const std::string& table) {
  if (cfg.format == "table")
    std::cout << table;
  else
    std::cout << j.dump(2) << "\n";
}

template <class F>
bei::Verdict run_oracle(const bei::Graph& g, const CliConfig& cfg) {
  bei::OracleOptions opt;
  opt.max_vars = cfg.oracle_max_vars;
  opt.max_cutset_n = cfg.max_cutset_n;
  if (2 * g.n + 1 > bei::alg::kMaxVars) {
    // the ring itself cannot be built; report Unknown instead of erroring out
    bei::Verdict v;
    v.rule = "oracle";
    v.fingerprint = bei::write_graph6(g);
    v.status = bei::Status::Unknown;
    v.note = "resource-limit: " + std::to_string(2 * g.n) +
             " variables exceed the algebra engine's ceiling";
    return v;
  }
  if constexpr (std::is_same_v<F, bei::alg::QField>) {
    auto ring = bei::alg::make_ring_q(g.n, cfg.order);
    return bei::oracle_scm(g, ring, opt);
  } else {
    auto ring = bei::alg::make_ring_fp(g.n, cfg.characteristic, cfg.order);
    return bei::oracle_scm(g, ring, opt);
  }
}

// classify one connected graph, optionally cross-checked by the oracle;
// fills `final_status` and raises `mismatch` when both engines are decisive
// yet disagree (the exit-code-4 signal)
template <class F>
json analyze_connected(const bei::Graph& g, const CliConfig& cfg, bei::Status& final_status,
                       bool& mismatch) {
  bei::Verdict v = bei::classify(g, {cfg.max_cutset_n});
  final_status = v.status;
  json j{{"verdict", bei::verdict_json(v)}};
  if (cfg.with_oracle) {
    bei::Verdict o = run_oracle<F>(g, cfg);
    j["oracle"] = bei::verdict_json(o);
    if (v.status != bei::Status::Unknown && o.status != bei::Status::Unknown) {
      bool agree = v.status == o.status;
      j["agreement"] = agree;
      if (!agree) mismatch = true;
    } else if (v.status == bei::Status::Unknown && o.status != bei::Status::Unknown) {
      final_status = o.status;
      j["escalated"] = true;
    }
  }
  j["status"] = bei::status_name(final_status);
  return j;
}

bei::Status combine_statuses(const std::vector<bei::Status>& sts) {
  bool unknown = false;
  for (auto s : sts) {
    if (s == bei::Status::NotSCM) return bei::Status::NotSCM;
    if (s == bei::Status::Unknown) unknown = true;
  }
  return unknown ? bei::Status::Unknown : bei::Status::SCM;
}

// disconnected graphs are analyzed per connected component
template <class F>
json analyze_graph(const bei::Graph& g, const CliConfig& cfg, bool& mismatch) {
  auto comps = bei::connected_components(g);
  if (comps.size() == 1) {
    bei::Status fin;
    return analyze_connected<F>(g, cfg, fin, mismatch);
  }
  json arr = json::array();
  std::vector<bei::Status> finals;
  for (const auto& c : comps) {
    auto sub = bei::induced_subgraph(g, c);
    bei::Status fin;
    json body = analyze_connected<F>(sub.g, cfg, fin, mismatch);
    body["vertices"] = sub.labels;
    arr.push_back(std::move(body));
    finals.push_back(fin);
  }
  return {{"components", arr}, {"status", bei::status_name(combine_statuses(finals))}};
}

std::string classify_table(const json& j) {
  std::ostringstream out;
  auto one = [&](const json& body, const std::string& head) {
    out << head << "status: " << body.at("status").get<std::string>() << "\n";
    if (body.contains("agreement"))
      out << head << "oracle agreement: " << (body.at("agreement").get<bool>() ? "yes" : "NO")
          << "\n";
    if (body.contains("escalated")) out << head << "(settled by the oracle)\n";
  };
  if (j.contains("components")) {
    int k = 0;
    for (const auto& body : j.at("components")) one(body, "component " + std::to_string(++k) + ": ");
    out << "combined status: " << j.at("status").get<std::string>() << "\n";
  } else {
    one(j, "");
  }
  return out.str();
}

template <class F>
int cmd_cutsets(const std::string& input, const CliConfig& cfg) {
  auto pg = bei::parse_graph_auto(read_input(input));
  auto comps = bei::connected_components(pg.g);
  json out;
  std::string table;
  if (comps.size() == 1) {
    auto ps = bei::profiles(pg.g, cfg.max_cutset_n);
    out = bei::cutset_report_json(pg.g, ps, cfg);
    table = bei::render_cutset_table(pg.g, ps);
  } else {
    json arr = json::array();
    for (const auto& c : comps) {
      auto sub = bei::induced_subgraph(pg.g, c);
      auto ps = bei::profiles(sub.g, cfg.max_cutset_n);
      json r = bei::cutset_report_json(sub.g, ps, cfg);
      r.erase("config");
      r["vertices"] = sub.labels;
      arr.push_back(std::move(r));
      table += "component on {" + [&] {
        std::string s;
        for (int v : sub.labels) s += (s.empty() ? "" : ",") + std::to_string(v);
        return s;
      }() + "}:\n" + bei::render_cutset_table(sub.g, ps);
    }
    out = {{"config", bei::config_json(cfg)}, {"components", arr}};
  }
  if (!identity_labels(pg.original_labels)) out["inputLabels"] = pg.original_labels;
  emit(out, cfg, table);
  return 0;
}

template <class F>
int cmd_classify(const std::string& input, const CliConfig& cfg) {
  auto pg = bei::parse_graph_auto(read_input(input));
  bool mismatch = false;
  json body = analyze_graph<F>(pg.g, cfg, mismatch);
  json out{{"config", bei::config_json(cfg)}};
  out.update(body);
  if (!identity_labels(pg.original_labels)) out["inputLabels"] = pg.original_labels;
  std::string table;
  if (cfg.format == "table") {
    if (body.contains("components")) {
      table = classify_table(body);
    } else {
      table = bei::render_verdict_table(bei::classify(pg.g, {cfg.max_cutset_n}));
      table += classify_table(body);
    }
  }
  emit(out, cfg, table);
  return mismatch ? 4 : 0;
}

template <class F>
int cmd_identity(const std::string& input, int vertex, const CliConfig& cfg) {
  auto pg = bei::parse_graph_auto(read_input(input));
  auto it = std::find(pg.original_labels.begin(), pg.original_labels.end(), vertex);
  if (it == pg.original_labels.end())
    throw bei::invalid_input("vertex " + std::to_string(vertex) + " is not in the graph");
  int vid = static_cast<int>(it - pg.original_labels.begin()) + 1;
  if (2 * pg.g.n + 1 > bei::alg::kMaxVars)
    throw bei::size_limit("graph too large for the algebra engine");
  bei::OracleOptions opt;
  opt.max_vars = cfg.oracle_max_vars;
  opt.max_cutset_n = cfg.max_cutset_n;
  bei::IdentityReport rep;
  if constexpr (std::is_same_v<F, bei::alg::QField>) {
    auto ring = bei::alg::make_ring_q(pg.g.n, cfg.order);
    rep = bei::check_filtration_identity(pg.g, vid, ring, opt);
  } else {
    auto ring = bei::alg::make_ring_fp(pg.g.n, cfg.characteristic, cfg.order);
    rep = bei::check_filtration_identity(pg.g, vid, ring, opt);
  }
  rep.vertex = vertex;  // report in the caller's labels
  json out = bei::identity_report_json(rep, cfg);
  if (!identity_labels(pg.original_labels)) out["inputLabels"] = pg.original_labels;
  emit(out, cfg, bei::render_identity_table(rep));
  return rep.unknown ? 3 : 0;
}

template <class F>
int cmd_batch(const std::string& input, const CliConfig& cfg) {
  std::istringstream in(read_input(input));
  struct Row {
    int line_no;
    std::string text;
  };
  std::vector<Row> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = line;
    while (!t.empty() && (t.back() == '\r' || t.back() == ' ')) t.pop_back();
    if (t.empty()) continue;
    rows.push_back({lineno, t});
  }

  std::vector<json> results(rows.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> mismatch{false};
  std::atomic<int> errors{0};
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= rows.size()) return;
      json r{{"line", rows[k].line_no}, {"input", rows[k].text}};
      try {
        bei::Graph g = bei::parse_graph6(rows[k].text);
        bool mm = false;
        r.update(analyze_graph<F>(g, cfg, mm));
        if (mm) mismatch = true;
      } catch (const std::exception& e) {
        r["error"] = e.what();
        ++errors;
      }
      results[k] = std::move(r);
    }
  };
  int jobs = cfg.jobs > 0 ? cfg.jobs : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min(jobs, 16));
  jobs = std::min(jobs, static_cast<int>(std::max<std::size_t>(rows.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::map<std::string, int> by_status, by_rule;
  for (const auto& r : results) {
    if (r.contains("error")) continue;
    by_status[r.at("status").get<std::string>()]++;
    if (r.contains("verdict")) by_rule[r.at("verdict").at("rule").get<std::string>()]++;
  }
  for (const auto& r : results) std::cout << r.dump() << "\n";
  json footer{{"summary",
               {{"total", rows.size()},
                {"errors", errors.load()},
                {"byStatus", by_status},
                {"byRule", by_rule},
                {"config", bei::config_json(cfg)}}}};
  std::cout << footer.dump() << "\n";
  return mismatch ? 4 : 0;
}

template <class F>
int dispatch(const std::string& cmd, const std::string& input, int vertex, const CliConfig& cfg) {
  if (cmd == "cutsets") return cmd_cutsets<F>(input, cfg);
  if (cmd == "classify") return cmd_classify<F>(input, cfg);
  if (cmd == "identity") return cmd_identity<F>(input, vertex, cfg);
  return cmd_batch<F>(input, cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sequentially Cohen-Macaulay analysis of binomial edge ideals"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string order_s = "degrevlex";
  app.add_option("--char", cfg.characteristic,
                 "coefficient characteristic: a prime, or 0 for exact rationals")
      ->capture_default_str();
  app.add_option("--order", order_s, "monomial order")
      ->check(CLI::IsMember({"degrevlex", "lex"}))
      ->capture_default_str();
  app.add_option("--max-cutset-n", cfg.max_cutset_n, "largest n for cutset enumeration")
      ->check(CLI::Range(1, 24))
      ->capture_default_str();
  app.add_flag("--oracle", cfg.with_oracle, "certify rule verdicts with the algebraic oracle");
  app.add_option("--oracle-budget", cfg.oracle_max_vars,
                 "largest number of ring variables (2n) the oracle accepts")
      ->check(CLI::Range(2, 62))
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "batch worker threads (0 = hardware)")
      ->check(CLI::Range(0, 64));

  std::string in_cut = "-", in_cls = "-", in_id = "-", in_bat = "-";
  int vertex = 0;
  auto* cut = app.add_subcommand("cutsets", "list cutsets, component counts and prime dimensions");
  cut->add_option("input", in_cut, "edge list or graph6 file, - for stdin");
  auto* cls = app.add_subcommand("classify", "decide the SCM property");
  cls->add_option("input", in_cls, "edge list or graph6 file, - for stdin");
  auto* idc = app.add_subcommand("identity",
                                 "check the filtration identity at a cutpoint, level by level");
  idc->add_option("input", in_id, "edge list or graph6 file, - for stdin");
  idc->add_option("--vertex,-v", vertex, "cutpoint to test")->required();
  auto* bat = app.add_subcommand("batch", "classify a file of graph6 lines as NDJSON");
  bat->add_option("input", in_bat, "graph6 file, one graph per line, - for stdin");
  for (auto* s : {cut, cls, idc, bat}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  cfg.order = order_s == "lex" ? bei::alg::OrderKind::lex : bei::alg::OrderKind::degrevlex;
  try {
    if (cfg.characteristic != 0 && !bei::alg::is_prime(cfg.characteristic))
      throw bei::invalid_input("characteristic must be prime or 0");
    std::string cmd, input;
    if (app.got_subcommand(cut)) cmd = "cutsets", input = in_cut;
    if (app.got_subcommand(cls)) cmd = "classify", input = in_cls;
    if (app.got_subcommand(idc)) cmd = "identity", input = in_id;
    if (app.got_subcommand(bat)) cmd = "batch", input = in_bat;
    return cfg.characteristic == 0 ? dispatch<bei::alg::QField>(cmd, input, vertex, cfg)
                                   : dispatch<bei::alg::FpField>(cmd, input, vertex, cfg);
  } catch (const bei::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bei::size_limit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bei::resource_limit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

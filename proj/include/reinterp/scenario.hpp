#ifndef REINTERP_SCENARIO_HPP
#define REINTERP_SCENARIO_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "reinterp/parser.hpp"
#include "reinterp/postulates.hpp"
#include "reinterp/table1.hpp"

namespace reinterp {

inline constexpr int report_schema_version = 1;

struct CheckRequest {
  std::string id;  // RDP1..RDP4, RAGM7, RAGM8, preservation, reconstruction
  std::optional<VerdictStatus> expect;
};

/// Everything one run needs. Key-value scenario files map onto it.
struct Scenario {
  std::string name = "scenario";
  Ontology receiver;
  std::vector<AxiomSet> triggers;
  std::string op = "weak";
  std::string strategy = "canonical";
  std::vector<Axiom> priority;      // max-based ranking
  std::string auxiliary = "all";    // all, none, or an axiom list
  RevisionOptions options;
  unsigned depth_probe = 1;
  std::vector<CheckRequest> checks;
  std::string suite;                // empty, "table1" or "lattice"
  std::uint64_t seed = 1;
  std::size_t instances = 500;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline VerdictStatus parse_status(const std::string& s) {
  for (auto v : {VerdictStatus::Satisfied, VerdictStatus::Violated, VerdictStatus::Vacuous})
    if (to_string(v) == s) return v;
  throw Error("unknown status: " + s);
}

inline std::vector<std::string> strategy_names() { return {"canonical", "gamma-cr", "identities-first", "max-based"}; }

inline SelectionStrategy make_strategy(const std::string& name, const std::vector<Axiom>& priority = {},
                                       const std::string& auxiliary = "all") {
  SelectionStrategy s;
  if (name == "canonical") {
    s = canonical_selection();
  } else if (name == "gamma-cr") {
    s = gamma_cr();
  } else if (name == "identities-first") {
    s = identities_first_selection();
  } else if (name == "max-based") {
    s = max_based_selection(priority);
  } else {
    throw Error("unknown strategy: " + name);
  }
  if (auxiliary == "none") return with_auxiliary(std::move(s), choose_no_auxiliary(), "none");
  if (auxiliary == "all") return s;
  return with_auxiliary(std::move(s), choose_auxiliary_from(parse_trigger_internal(auxiliary)), "chosen");
}

inline Operator make_operator(const Scenario& s) {
  return Operator{parse_operator(s.op), make_strategy(s.strategy, s.priority, s.auxiliary), s.options};
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

inline unsigned parse_unsigned(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const unsigned long n = std::stoul(v, &used);
    if (used == v.size()) return static_cast<unsigned>(n);
  } catch (const std::exception&) {
  }
  throw Error(key + " expects a non-negative integer, got '" + v + "'");
}

inline bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "on") return true;
  if (v == "false" || v == "off") return false;
  throw Error(key + " expects true or false, got '" + v + "'");
}

}  // namespace detail

/// Parses a scenario. `load = FILE` lines read ontology blocks relative to
/// `dir`; `receiver` and `trigger` name those blocks.
inline Scenario parse_scenario(const std::string& text, const std::filesystem::path& dir = ".") {
  Scenario s;
  std::map<std::string, Ontology> blocks;
  std::string receiver;
  std::vector<std::string> triggers;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, 1, "expected KEY = VALUE");
    const std::string key = detail::trim(line.substr(0, eq)), value = detail::trim(line.substr(eq + 1));
    try {
      if (key == "name") {
        s.name = value;
      } else if (key == "load") {
        for (auto& b : parse_ontologies(read_file(dir / value))) blocks[b.name] = std::move(b.ontology);
      } else if (key == "receiver") {
        receiver = value;
      } else if (key == "trigger") {
        triggers.push_back(value);
      } else if (key == "operator") {
        parse_operator(value);
        s.op = value;
      } else if (key == "strategy") {
        s.strategy = value;
      } else if (key == "priority") {
        s.priority.push_back(parse_axiom(value, {true}));
      } else if (key == "auxiliary") {
        s.auxiliary = value;
      } else if (key == "mode") {
        if (value != "mcs" && value != "full") throw Error("mode expects mcs or full");
        s.options.mode = value == "full" ? InternalizationMode::Full : InternalizationMode::Mcs;
      } else if (key == "individuals") {
        s.options.mcs.reinterpret_individuals = detail::parse_bool(key, value);
      } else if (key == "depth-msc") {
        s.options.depth_msc = detail::parse_unsigned(key, value);
      } else if (key == "depth-bridge") {
        s.options.depth_bridge = detail::parse_unsigned(key, value);
      } else if (key == "depth-probe") {
        s.depth_probe = detail::parse_unsigned(key, value);
      } else if (key == "check") {
        std::istringstream words(value);
        CheckRequest c;
        std::string kw, status;
        words >> c.id;
        if (words >> kw) {
          if (kw != "expect" || !(words >> status)) throw Error("check expects ID [expect STATUS]");
          c.expect = parse_status(status);
        }
        s.checks.push_back(std::move(c));
      } else if (key == "suite") {
        if (value != "table1" && value != "lattice") throw Error("suite expects table1 or lattice");
        s.suite = value;
      } else if (key == "seed") {
        s.seed = detail::parse_unsigned(key, value);
      } else if (key == "instances") {
        s.instances = detail::parse_unsigned(key, value);
      } else {
        throw Error("unknown key '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(lineno, 1, e.what());
    }
  }
  auto lookup = [&](const std::string& n) -> const Ontology& {
    auto it = blocks.find(n);
    if (it == blocks.end()) throw Error("no ontology named '" + n + "' was loaded");
    return it->second;
  };
  if (!receiver.empty()) s.receiver = lookup(receiver);
  for (const auto& t : triggers) {
    const Ontology& o = lookup(t);
    for (const auto& sym : signature(o.axioms))
      if (sym.is_internal()) throw Error("trigger '" + t + "' uses internal symbol " + sym.render());
    s.triggers.push_back(o.axioms);
  }
  make_strategy(s.strategy, s.priority, s.auxiliary);  // fail early on bad names
  return s;
}

inline Scenario load_scenario(const std::filesystem::path& path) {
  Scenario s = parse_scenario(read_file(path), path.parent_path());
  if (s.name == "scenario") s.name = path.stem().string();
  return s;
}

// ---------------------------------------------------------------------------
// Reports.

using Json = nlohmann::ordered_json;

inline Json to_json(const Verdict& v, const std::string& op, std::uint64_t seed) {
  Json j{{"cell", {{"operator", op}, {"postulate", v.postulate}}}, {"status", to_string(v.status)}};
  if (v.witness) j["witness"] = render(*v.witness);
  if (!v.detail.empty()) j["detail"] = v.detail;
  j["seed"] = seed;
  j["instances"] = 1;
  return j;
}

inline Json to_json(const CellResult& c) {
  Json j{{"cell", {{"operator", c.op}, {"postulate", c.postulate}}},
         {"status", c.observed},
         {"expected", c.expected},
         {"matches", c.matches()}};
  if (c.witness) j["witness"] = render(*c.witness);
  j["detail"] = c.detail;
  j["seed"] = c.seed;
  j["instances"] = c.instances;
  j["applicable"] = c.applicable;
  j["violations"] = c.violations;
  return j;
}

inline Json to_json(const StepRecord& r) {
  Json bridging = Json::array();
  for (const auto& ax : r.bridging) bridging.push_back(render(ax));
  Json trigger = Json::array();
  for (const auto& ax : r.trigger) trigger.push_back(render(ax));
  return Json{{"operator", r.op},   {"trigger", trigger},          {"conflict", r.conflict},
              {"sigma", render(r.sigma)}, {"bridging", bridging}, {"candidates", r.candidates}};
}

inline Json to_json(const SubsumptionLattice& l) {
  Json classes = Json::array(), edges = Json::array();
  for (const auto& [rep, members] : l.classes) {
    Json m = Json::array();
    for (const auto& c : members) m.push_back(render(c));
    classes.push_back(Json{{"representative", render(rep)}, {"members", m}});
  }
  for (const auto& [lo, hi] : l.edges) edges.push_back(Json::array({render(lo), render(hi)}));
  return Json{{"classes", classes}, {"edges", edges}};
}

/// Textual Hasse diagram: one "lower -> upper" line per covering pair.
inline std::string render(const SubsumptionLattice& l) {
  std::string out;
  for (const auto& [lo, hi] : l.edges) out += render(lo) + " -> " + render(hi) + "\n";
  return out;
}

struct ScenarioReport {
  Json json;
  std::string text;  // final ontology, grid, or Hasse diagram
  bool ok = true;
};

inline std::string render_grid(const std::vector<CellResult>& cells) {
  std::ostringstream out;
  out << "operator      RDP1     RDP2     RDP3     RDP4\n";
  for (std::size_t i = 0; i < cells.size(); i += 4) {
    std::string row = cells[i].op;
    row.resize(14, ' ');
    out << row;
    for (std::size_t k = i; k < i + 4 && k < cells.size(); ++k) {
      std::string obs = cells[k].observed + (cells[k].matches() ? "" : "!");
      obs.resize(9, ' ');
      out << obs;
    }
    out << "\n";
  }
  return out.str();
}

inline ScenarioReport run_table1(const Scenario& s) {
  Table1Config cfg;
  cfg.seed = s.seed;
  cfg.instances = s.instances;
  cfg.probe_depth = s.depth_probe;
  cfg.options = s.options;
  const auto cells = table1_suite(cfg);
  ScenarioReport r;
  Json arr = Json::array();
  for (const auto& c : cells) {
    arr.push_back(to_json(c));
    r.ok = r.ok && c.matches();
  }
  r.json = Json{{"schema_version", report_schema_version}, {"scenario", s.name}, {"suite", "table1"},
                {"seed", s.seed}, {"instances", s.instances}, {"cells", arr}, {"ok", r.ok}};
  r.text = render_grid(cells);
  return r;
}

inline SubsumptionLattice result_lattice(const Ontology& result, unsigned depth = 1) {
  return subsumption_lattice(result.axioms,
                             concept_space(filter_kind(result.vocabulary(), SymbolKind::Concept), depth));
}

inline Verdict run_check(const CheckRequest& c, const Scenario& s, const Operator& op) {
  if (c.id == "preservation") return check_preservation(s.receiver, s.triggers, op);
  if (c.id == "reconstruction") return check_reconstruction(s.receiver, s.triggers, op);
  if (s.triggers.size() < 2) throw Error(c.id + " needs two triggers");
  if (c.id.rfind("RDP", 0) == 0)
    return check_rdp(static_cast<int>(detail::parse_unsigned(c.id, c.id.substr(3))), s.receiver, s.triggers[0],
                     s.triggers[1], op, s.depth_probe);
  if (c.id.rfind("RAGM", 0) == 0)
    return check_ragm(static_cast<int>(detail::parse_unsigned(c.id, c.id.substr(4))), s.receiver, s.triggers[0],
                      s.triggers[1], op, s.depth_probe);
  throw Error("unknown check: " + c.id);
}

/// Runs the scenario: iterate over the triggers, then every requested
/// check, or the named suite.
inline ScenarioReport run_scenario(const Scenario& s) {
  if (s.suite == "table1") return run_table1(s);
  const Operator op = make_operator(s);
  const RevisionResult result = iterate(s.receiver, s.triggers, op);
  ScenarioReport r;
  Json steps = Json::array();
  for (const auto& step : result.trace) steps.push_back(to_json(step));
  r.json = Json{{"schema_version", report_schema_version},
                {"scenario", s.name},
                {"operator", op.name()},
                {"steps", steps},
                {"result", render(result.ontology, s.name)}};
  r.text = render(result.ontology, s.name);
  if (s.suite == "lattice") {
    const auto lattice = result_lattice(result.ontology);
    r.json["lattice"] = to_json(lattice);
    r.text += render(lattice);
  }
  Json checks = Json::array();
  for (const auto& c : s.checks) {
    const Verdict v = run_check(c, s, op);
    Json j = to_json(v, op.name(), s.seed);
    if (c.expect) {
      j["expected"] = to_string(*c.expect);
      r.ok = r.ok && *c.expect == v.status;
    }
    checks.push_back(std::move(j));
  }
  r.json["checks"] = checks;
  r.json["ok"] = r.ok;
  return r;
}

}  // namespace reinterp

#endif  // REINTERP_SCENARIO_HPP

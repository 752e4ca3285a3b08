#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reinterp/scenario.hpp"

using namespace reinterp;

namespace {

struct Settings {
  std::string op = "weak";
  std::string strategy = "canonical";
  std::string mode = "mcs";
  std::string auxiliary = "all";
  std::vector<std::string> priority;
  bool individuals = true;
  unsigned depth_msc = 1, depth_bridge = 1, depth_probe = 1;
  std::uint64_t seed = 1;
  std::size_t instances = 500;
  std::string json_out;
};

void add_common(CLI::App* sub, Settings& s) {
  sub->add_option("--operator", s.op, "weak, strong, msc-literal or sel-literal")->capture_default_str();
  sub->add_option("--strategy", s.strategy, "canonical, gamma-cr, identities-first or max-based")
      ->capture_default_str();
  sub->add_option("--mode", s.mode, "symbols to internalize")->check(CLI::IsMember({"mcs", "full"}))
      ->capture_default_str();
  sub->add_option("--auxiliary", s.auxiliary, "sel auxiliary axioms: all, none, or an axiom list")
      ->capture_default_str();
  sub->add_option("--priority", s.priority, "bridging axioms ranked first by max-based");
  sub->add_option("--individuals", s.individuals, "whether constants may be reinterpreted")->capture_default_str();
  sub->add_option("--depth-msc", s.depth_msc)->capture_default_str();
  sub->add_option("--depth-bridge", s.depth_bridge)->capture_default_str();
  sub->add_option("--depth-probe", s.depth_probe)->capture_default_str();
  sub->add_option("--seed", s.seed, "overridden by REINTERP_SEED")->capture_default_str();
  sub->add_option("--json", s.json_out, "write the JSON report to this file");
}

std::uint64_t effective_seed(const Settings& s) {
  if (const char* env = std::getenv("REINTERP_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(std::string("REINTERP_SEED is not a number: ") + env);
    }
  }
  return s.seed;
}

Scenario scenario_from(const Settings& s) {
  Scenario sc;
  sc.op = s.op;
  sc.strategy = s.strategy;
  sc.auxiliary = s.auxiliary;
  for (const auto& p : s.priority) sc.priority.push_back(parse_axiom(p, {true}));
  sc.options.mode = s.mode == "full" ? InternalizationMode::Full : InternalizationMode::Mcs;
  sc.options.mcs.reinterpret_individuals = s.individuals;
  sc.options.depth_msc = s.depth_msc;
  sc.options.depth_bridge = s.depth_bridge;
  sc.depth_probe = s.depth_probe;
  sc.seed = effective_seed(s);
  sc.instances = s.instances;
  return sc;
}

// FILE or FILE:BLOCK; a file with one block needs no block name.
Ontology load_block(const std::string& ref, bool allow_internal) {
  std::string path = ref, block;
  if (const auto colon = ref.rfind(':'); colon != std::string::npos && !std::filesystem::exists(ref)) {
    path = ref.substr(0, colon);
    block = ref.substr(colon + 1);
  }
  auto all = parse_ontologies(read_file(path), {allow_internal});
  if (block.empty()) {
    if (all.size() != 1) throw Error(path + " holds " + std::to_string(all.size()) + " ontologies; name one as " + path + ":NAME");
    return std::move(all.front().ontology);
  }
  for (auto& b : all)
    if (b.name == block) return std::move(b.ontology);
  throw Error("no ontology named '" + block + "' in " + path);
}

int emit(const ScenarioReport& r, const Settings& s) {
  std::cout << r.text;
  if (!s.json_out.empty()) {
    std::ofstream out(s.json_out);
    if (!out) throw Error("cannot write " + s.json_out);
    out << r.json.dump(2) << "\n";
  }
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ontology revision by reinterpretation"};
  app.require_subcommand(1);
  Settings s;

  std::string file;
  auto* parse = app.add_subcommand("parse", "parse an ontology file and print it canonically");
  parse->add_option("file", file, "ontology file")->required();
  bool allow_internal = false;
  parse->add_flag("--internal", allow_internal, "accept primed (internal) symbols");
  add_common(parse, s);

  std::string receiver;
  std::vector<std::string> triggers;
  auto* revise = app.add_subcommand("revise", "revise a receiver by one trigger");
  revise->add_option("receiver", receiver, "FILE[:NAME]")->required();
  revise->add_option("trigger", triggers, "FILE[:NAME]")->required()->expected(1);
  add_common(revise, s);

  auto* iterate_cmd = app.add_subcommand("iterate", "revise a receiver by a sequence of triggers");
  iterate_cmd->add_option("receiver", receiver, "FILE[:NAME]")->required();
  iterate_cmd->add_option("triggers", triggers, "FILE[:NAME] ...")->required();
  add_common(iterate_cmd, s);

  std::string scenario_file;
  std::vector<std::string> postulates;
  auto* check = app.add_subcommand("check", "run the checks of a scenario file, or given postulates");
  check->add_option("scenario", scenario_file, "scenario file (.scn)");
  check->add_option("-p,--postulate", postulates, "RDP1..4, RAGM7, RAGM8, preservation, reconstruction");
  check->add_option("--receiver", receiver, "FILE[:NAME]");
  check->add_option("--trigger", triggers, "FILE[:NAME], repeatable");
  add_common(check, s);

  auto* table1 = app.add_subcommand("table1", "every operator against every iteration postulate");
  table1->add_option("--instances", s.instances, "random instances per swept cell")->capture_default_str();
  add_common(table1, s);

  auto* lattice = app.add_subcommand("lattice", "Hasse diagram of the concepts after a revision");
  lattice->add_option("receiver", receiver, "FILE[:NAME]")->required();
  lattice->add_option("trigger", triggers, "FILE[:NAME]")->required()->expected(1);
  add_common(lattice, s);

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse->parsed()) {
      Json out = Json::array();
      for (const auto& b : parse_ontologies(read_file(file), {allow_internal})) {
        std::cout << render(b.ontology, b.name);
        Json axioms = Json::array();
        for (const auto& ax : b.ontology.axioms) axioms.push_back(render(ax));
        out.push_back(Json{{"name", b.name}, {"axioms", axioms}});
      }
      ScenarioReport r{Json{{"schema_version", report_schema_version}, {"ontologies", out}}, {}, true};
      return emit(r, s);
    }
    if (revise->parsed() || iterate_cmd->parsed() || lattice->parsed()) {
      Scenario sc = scenario_from(s);
      if (lattice->parsed()) {
        if (!lattice->count("--operator")) sc.op = "sel-literal";
        sc.suite = "lattice";
      }
      sc.name = "result";
      sc.receiver = load_block(receiver, true);
      for (const auto& t : triggers) sc.triggers.push_back(load_block(t, false).axioms);
      return emit(run_scenario(sc), s);
    }
    if (check->parsed()) {
      Scenario sc;
      if (!scenario_file.empty()) {
        sc = load_scenario(scenario_file);
        if (check->count("--seed") || std::getenv("REINTERP_SEED")) sc.seed = effective_seed(s);
      } else {
        if (receiver.empty() || postulates.empty()) throw Error("check needs a scenario file, or --receiver and -p");
        sc = scenario_from(s);
        sc.receiver = load_block(receiver, true);
        for (const auto& t : triggers) sc.triggers.push_back(load_block(t, false).axioms);
      }
      for (const auto& p : postulates) sc.checks.push_back({p, std::nullopt});
      return emit(run_scenario(sc), s);
    }
    if (table1->parsed()) {
      Scenario sc = scenario_from(s);
      sc.name = "table1";
      sc.suite = "table1";
      return emit(run_scenario(sc), s);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

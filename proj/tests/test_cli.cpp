#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "reinterp/random.hpp"
#include "reinterp/scenario.hpp"

using namespace reinterp;

namespace {

const std::filesystem::path corpus = REINTERP_CORPUS_DIR;

Axiom ca(const Concept& k, const Symbol& x) { return Axiom{concept_assertion(k, x)}; }

template <class F>
ParseError parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error";
  return ParseError(0, 0, "");
}

}  // namespace

TEST(Parser, PublicationsFile) {
  const auto blocks = parse_ontologies(read_file(corpus / "publications.ont"));
  ASSERT_EQ(blocks.size(), 3U);
  EXPECT_EQ(blocks[0].name, "receiver");
  const Ontology& o = blocks[0].ontology;
  const Concept art = atom("Article");
  EXPECT_EQ(o.axioms, (AxiomSet{ca(art, individual("pr1")), ca(art, individual("pr2")), ca(!art, individual("bo1"))}));
  EXPECT_EQ(o.public_vocab,
            (SymbolSet{art.symbol(), individual("pr1"), individual("pr2"), individual("bo1")}));
  EXPECT_TRUE(o.internal_vocab.empty());
}

TEST(Parser, EmptyBlock) {
  const Ontology o = parse_ontology("ontology empty { }");
  EXPECT_TRUE(o.axioms.empty());
  EXPECT_TRUE(o.vocabulary().empty());
  EXPECT_TRUE(parse_ontologies("# nothing\n").empty());
}

TEST(Parser, EveryAxiomForm) {
  const Ontology o = parse_ontology(R"(ontology all {
    public: A, B, R, S, a, b;
    (A & !B) [= exists R.(B | Top)
    R [=r S
    (A | B)(a)
    R(a, b)
    !S(b, a)
    a == b
    a != b
    clause { A(a) | !R(a, b) | exists S.Bot(b) }
  })");
  const Concept A = atom("A"), B = atom("B");
  const Symbol R = role_name("R"), S = role_name("S"), a = individual("a"), b = individual("b");
  const AxiomSet want{subsumption(A & !B, Concept::exists(R, B | Concept::top())),
                      role_inclusion(R, S),
                      ca(A | B, a),
                      Axiom{role_assertion(R, a, b)},
                      Axiom{role_assertion(S, b, a, false)},
                      equality(a, b),
                      inequality(a, b),
                      clause({concept_assertion(A, a), role_assertion(R, a, b, false),
                              concept_assertion(Concept::exists(S, Concept::bot()), b)})};
  EXPECT_EQ(o.axioms, want);
}

TEST(Parser, SyntaxErrorsCarryPositions) {
  const ParseError e = parse_error([] { parse_ontology("ontology x {\n  A [= \n}"); });
  EXPECT_EQ(e.line(), 3);
  EXPECT_EQ(e.column(), 1);
  EXPECT_NE(std::string(e.what()).find("expected a concept, found '}'"), std::string::npos) << e.what();

  const ParseError e2 = parse_error([] { parse_ontology("ontology x { (A B)(a) }"); });
  EXPECT_EQ(e2.column(), 17);
  EXPECT_NE(std::string(e2.what()).find("'&' or '|'"), std::string::npos);

  EXPECT_THROW(parse_ontology("ontology x { A(a) "), ParseError);
  EXPECT_THROW(parse_ontology("ontology x { A(a) } junk"), ParseError);
  EXPECT_THROW(parse_ontology("ontology x { A @ B }"), ParseError);
  EXPECT_THROW(parse_ontology("ontology x { Top(a, b) }"), ParseError);
}

TEST(Parser, KindClash) {
  const ParseError e = parse_error([] { parse_ontology("ontology x { A(a)\n R(a, b)\n exists A.B [= B }"); });
  EXPECT_EQ(e.line(), 3);
  EXPECT_NE(std::string(e.what()).find("kind clash: A"), std::string::npos) << e.what();
  EXPECT_THROW(parse_ontology("ontology x { A(a) a(b) }"), ParseError);
}

TEST(Parser, InternalSymbols) {
  EXPECT_THROW(parse_ontology("ontology x { A'(a) }"), ParseError);
  EXPECT_THROW(parse_trigger("A'(a)"), ParseError);
  const Ontology o = parse_ontology("ontology x { public: A, a; A [= A'\n A'(a) }", {true});
  EXPECT_EQ(o.internal_vocab, SymbolSet{atom("A", 1).symbol()});
  EXPECT_THROW(parse_ontology("ontology x { public: A'; A'(a) }", {true}), ParseError);
}

TEST(Parser, PublicSymbolsNeedAKind) {
  const ParseError e = parse_error([] { parse_ontology("ontology x { public: A, Z; A(a) }"); });
  EXPECT_NE(std::string(e.what()).find("public symbol Z"), std::string::npos);
}

TEST(Property, RenderParseRoundTrip) {
  InstanceGenerator gen(3, GeneratorConfig{});
  for (int i = 0; i < 200; ++i) {
    const Ontology o = Ontology::from_axioms(gen.axioms(1));
    EXPECT_EQ(parse_ontology(render(o, "o")), o) << render(o, "o");
  }
}

TEST(Property, RevisedResultsRoundTrip) {
  InstanceGenerator gen(4, GeneratorConfig{});
  const Operator op{OperatorKind::Weak, canonical_selection(), {}};
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const AxiomSet o = gen.axioms(2), t{gen.signed_literal().axiom()};
    if (!is_consistent(o)) continue;
    const Ontology r = op(Ontology::from_axioms(o), t).ontology;
    EXPECT_EQ(parse_ontology(render(r), {true}), r) << render(r);
    ++checked;
  }
  EXPECT_GT(checked, 30);
}

// Mutated inputs either parse, and then reach a render fixpoint, or raise
// a positioned ParseError; nothing else escapes.
TEST(Property, FuzzedInputs) {
  InstanceGenerator gen(9, GeneratorConfig{});
  std::mt19937_64 rng(9);
  const std::string alphabet = "AbR()!&|{}[=r.,;:' \nexistsTopBot";
  int accepted = 0;
  for (int i = 0; i < 400; ++i) {
    std::string text = render(Ontology::from_axioms(gen.axioms(1)), "f");
    const int edits = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < edits; ++k) {
      const std::size_t at = rng() % text.size();
      switch (rng() % 3) {
        case 0:
          text.erase(at, 1);
          break;
        case 1:
          text.insert(at, 1, alphabet[rng() % alphabet.size()]);
          break;
        default:
          text[at] = alphabet[rng() % alphabet.size()];
      }
    }
    try {
      const auto blocks = parse_ontologies(text, {true});
      for (const auto& b : blocks) EXPECT_EQ(parse_ontology(render(b.ontology, b.name), {true}), b.ontology);
      ++accepted;
    } catch (const ParseError& e) {
      EXPECT_GE(e.line(), 1);
      EXPECT_GE(e.column(), 1);
    }
  }
  EXPECT_GT(accepted, 0);
  EXPECT_LT(accepted, 400);
}

TEST(Scenario, WeakPublicationRunMatchesPinnedRendering) {
  const ScenarioReport r = run_scenario(load_scenario(corpus / "publications_weak.scn"));
  EXPECT_EQ(r.text, read_file(corpus / "publications_weak.expected"));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.json["schema_version"], report_schema_version);
  EXPECT_EQ(r.json["checks"].size(), 2U);
  EXPECT_EQ(r.json["checks"][0]["status"], "satisfied");
}

TEST(Scenario, MscPublicationRunAddsTheBridge) {
  const ScenarioReport r = run_scenario(load_scenario(corpus / "publications_msc.scn"));
  EXPECT_NE(r.text.find("Article' [= (Article | (Article' & exists publishedIn.Proceed))"), std::string::npos)
      << r.text;
}

TEST(Scenario, EmptyTriggerListEchoesInput) {
  Scenario s;
  s.name = "echo";
  s.receiver = parse_ontology("ontology echo { public: A, a; A(a) }");
  const ScenarioReport r = run_scenario(s);
  EXPECT_EQ(r.text, render(s.receiver, "echo"));
  EXPECT_TRUE(r.json["steps"].empty());
}

TEST(Scenario, LatticeScenarioPrintsEdges) {
  const ScenarioReport r = run_scenario(load_scenario(corpus / "lattice.scn"));
  EXPECT_NE(r.text.find("A [= (A' | C)"), std::string::npos);
  EXPECT_NE(r.text.find("A' -> A\n"), std::string::npos);
  EXPECT_FALSE(r.json["lattice"]["edges"].empty());
}

TEST(Scenario, GridFileParses) {
  const Scenario s = load_scenario(corpus / "table1.scn");
  EXPECT_EQ(s.suite, "table1");
  EXPECT_EQ(s.seed, 1U);
  EXPECT_EQ(s.instances, 500U);
}

TEST(Scenario, ExpectationMismatchFails) {
  Scenario s = load_scenario(corpus / "publications_weak.scn");
  s.checks = {{"preservation", VerdictStatus::Violated}};
  EXPECT_FALSE(run_scenario(s).ok);
}

TEST(Scenario, Errors) {
  const ParseError e = parse_error([] { parse_scenario("operator = weak\nbogus = 1\n"); });
  EXPECT_EQ(e.line(), 2);
  EXPECT_THROW(parse_scenario("operator = nope"), ParseError);
  EXPECT_THROW(parse_scenario("strategy = nope"), Error);
  EXPECT_THROW(parse_scenario("receiver = missing"), Error);
  EXPECT_THROW(parse_scenario("check = RDP1 expect maybe"), ParseError);
  Scenario s;
  s.checks = {{"RDP1", std::nullopt}};
  EXPECT_THROW(run_scenario(s), Error);
}

TEST(Cli, SeedFromEnvironmentWins) {
  const std::filesystem::path out = std::filesystem::temp_directory_path() / "reinterp_seed_test.json";
  const std::string cmd = "REINTERP_SEED=42 " + std::string(REINTERP_CLI) + " check " +
                          (corpus / "publications_weak.scn").string() + " --seed 7 --json " + out.string() + " > /dev/null";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  const Json j = Json::parse(read_file(out));
  EXPECT_EQ(j["checks"][0]["seed"], 42);
  std::filesystem::remove(out);
}

TEST(Cli, ParseReportsErrors) {
  const std::filesystem::path bad = std::filesystem::temp_directory_path() / "reinterp_bad.ont";
  {
    std::ofstream f(bad);
    f << "ontology x { A [= }\n";
  }
  const std::string cmd = std::string(REINTERP_CLI) + " parse " + bad.string() + " > /dev/null 2>&1";
  EXPECT_NE(std::system(cmd.c_str()), 0);
  std::filesystem::remove(bad);
}

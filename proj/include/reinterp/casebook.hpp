#ifndef REINTERP_CASEBOOK_HPP
#define REINTERP_CASEBOOK_HPP

#include <string>
#include <vector>

#include "reinterp/axiom.hpp"
#include "reinterp/ontology.hpp"

/// Small fixed ontologies used by the CLI, the corpus and the tests.
namespace reinterp::casebook {

namespace detail {
inline Axiom ca(const Concept& c, const Symbol& x) { return Axiom{concept_assertion(c, x)}; }
inline Axiom ra(const Symbol& r, const Symbol& x, const Symbol& y) { return Axiom{role_assertion(r, x, y)}; }
inline Literal lit(const Concept& c, const Symbol& x) { return concept_assertion(c, x); }
}  // namespace detail

/// Receiver and sender ontologies of the publication scenario.
struct Publications {
  AxiomSet receiver;  // Article(pr1), Article(pr2), ¬Article(bo1)
  AxiomSet sender;    // ¬Article(pr1)
  AxiomSet extended;  // receiver plus publishedIn(pr1, proc1), Proceed(proc1)
};

inline Publications publications() {
  using detail::ca;
  const Concept art = atom("Article"), proc = atom("Proceed");
  const Symbol pr1 = individual("pr1"), pr2 = individual("pr2"), bo1 = individual("bo1"),
               proc1 = individual("proc1");
  Publications p;
  p.receiver = {ca(art, pr1), ca(art, pr2), ca(!art, bo1)};
  p.sender = {ca(!art, pr1)};
  p.extended = p.receiver;
  p.extended.insert(detail::ra(role_name("publishedIn"), pr1, proc1));
  p.extended.insert(ca(proc, proc1));
  return p;
}

/// Initial ontology and two triggers for an iteration postulate.
struct IteratedCase {
  std::string name;
  AxiomSet o, o1, o2;
};

/// O2 ⊨ O1 and the two-step result gains B(a).
inline IteratedCase stronger_second_trigger() {
  using detail::ca;
  const Concept A = atom("A"), B = atom("B");
  const Symbol a = individual("a");
  return {"stronger-second-trigger", {ca(!A, a)}, {ca(A | B, a)}, {ca(A, a)}};
}

/// O1 ∪ O2 inconsistent and the two-step result loses A(b).
inline IteratedCase clashing_triggers() {
  using detail::ca;
  const Concept A = atom("A");
  const Symbol a = individual("a"), b = individual("b");
  return {"clashing-triggers", {ca(A, b)}, {ca(A, a)}, {ca(!A, a)}};
}

/// O ∘ O2 entails ¬A(b) through a role chain; the two-step result does not.
inline IteratedCase role_chain_entailment() {
  using detail::ca;
  using detail::ra;
  const Concept A = atom("A"), B = atom("B");
  const Symbol r1 = role_name("R1"), r2 = role_name("R2"), r3 = role_name("R3");
  const Symbol a = individual("a"), b = individual("b"), c = individual("c"), e = individual("e");
  return {"role-chain-entailment",
          {ca(A, a), subsumption(Concept::exists(r1, A), !B), ra(r1, a, c), subsumption(Concept::exists(r2, A), A),
           ra(r2, b, e)},
          {ca(!A, b)},
          {ca(!A, a), ca(B, a), ca(A, e), subsumption(Concept::exists(r3, A), A), ra(r3, c, b)}};
}

/// O1 is compatible with O ∘ O2 but not with the two-step result.
inline IteratedCase lost_compatibility() {
  using detail::ca;
  using detail::lit;
  const Concept A = atom("A"), B = atom("B"), C = atom("C");
  const Symbol a = individual("a"), b = individual("b");
  return {"lost-compatibility",
          {ca(B, a), clause({lit(B, b), lit(C, b)})},
          {ca(!A, a), ca(!B, b)},
          {clause({lit(!B, a), lit(A, a)}), ca(!B, b), ca(!C, b)}};
}

/// Bridging-axiom priority under which lost_compatibility fails for ⊗γ:
/// identities first, then C' ⊑ C, B' ⊑ B, A ⊑ A'.
inline std::vector<Axiom> lost_compatibility_priority() {
  const Concept A = atom("A"), B = atom("B"), C = atom("C");
  const Concept A1 = atom("A", 1), B1 = atom("B", 1), C1 = atom("C", 1);
  return {equality(individual("a"), individual("a", 1)), equality(individual("b"), individual("b", 1)),
          subsumption(C1, C), subsumption(B1, B), subsumption(A, A1)};
}

/// O = {¬A(b), C(b)} revised by A(b), the lattice scenario.
struct LatticeCase {
  AxiomSet o;
  SignedLiteral trigger;
  Axiom chosen;  // A ⊑ A' ⊔ C
};

inline LatticeCase lattice_case() {
  using detail::ca;
  const Concept A = atom("A"), C = atom("C"), A1 = atom("A", 1);
  const Symbol b = individual("b");
  return {{ca(!A, b), ca(C, b)}, SignedLiteral{A.symbol(), b, true}, subsumption(A, A1 | C)};
}

inline std::vector<IteratedCase> iterated_cases() {
  return {stronger_second_trigger(), clashing_triggers(), role_chain_entailment(), lost_compatibility()};
}

}  // namespace reinterp::casebook

#endif  // REINTERP_CASEBOOK_HPP

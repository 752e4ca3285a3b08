#ifndef REINTERP_BRIDGING_HPP
#define REINTERP_BRIDGING_HPP

#include "reinterp/concept_space.hpp"
#include "reinterp/reasoner.hpp"
#include "reinterp/substitution.hpp"

namespace reinterp {

enum class BridgingFlavor { Simple, Strong, Oa };

struct BridgingAxiomSet {
  AxiomSet axioms;
  BridgingFlavor flavor = BridgingFlavor::Simple;
  Substitution origin;
};

namespace detail {

// Internal symbols that an internalization merely shifts up a level get no
// bridging axioms of their own.
inline SymbolSet bridged_support(const Substitution& sigma) {
  SymbolSet out;
  for (const auto& s : sigma.support())
    if (s.is_public()) out.insert(s);
  return out;
}

inline void add_identities(AxiomSet& out, const Substitution& sigma) {
  for (const auto& s : bridged_support(sigma))
    if (s.kind == SymbolKind::Individual) out.insert(equality(s, sigma(s)));
}

inline void add_role_links(AxiomSet& out, const Substitution& sigma) {
  for (const auto& s : bridged_support(sigma)) {
    if (s.kind != SymbolKind::Role) continue;
    out.insert(role_inclusion(s, sigma(s)));
    out.insert(role_inclusion(sigma(s), s));
  }
}

}  // namespace detail

/// P ⊑ P' and P' ⊑ P for concepts and roles in the support, a ≐ a' for
/// individuals.
inline BridgingAxiomSet simple_bridging(const Substitution& sigma) {
  BridgingAxiomSet out{{}, BridgingFlavor::Simple, sigma};
  for (const auto& s : detail::bridged_support(sigma)) {
    if (s.kind != SymbolKind::Concept) continue;
    const Concept p = Concept::atom(s), q = Concept::atom(sigma(s));
    out.axioms.insert(subsumption(p, q));
    out.axioms.insert(subsumption(q, p));
  }
  detail::add_role_links(out.axioms, sigma);
  detail::add_identities(out.axioms, sigma);
  return out;
}

/// Cσ ⊑ s whenever O ⊨ C ⊑ s and s ⊑ Cσ whenever O ⊨ s ⊑ C, for concept
/// symbols s in the support and C in the depth-bounded concept space of O.
/// Roles fall back to the two simple inclusions.
inline BridgingAxiomSet strong_bridging(const Substitution& sigma, const AxiomSet& o, unsigned depth) {
  if (!is_consistent(o)) throw Error("strong bridging undefined on inconsistent ontology");
  BridgingAxiomSet out{{}, BridgingFlavor::Strong, sigma};
  const ConceptSet space = concept_space(signature(o), depth);
  for (const auto& s : detail::bridged_support(sigma)) {
    if (s.kind != SymbolKind::Concept) continue;
    const Concept p = Concept::atom(s);
    for (const auto& c : space) {
      const Concept cs = apply_substitution(c, sigma);
      // Axioms without any internal symbol relate nothing to the internal
      // reading; they are skipped.
      bool internal = false;
      cs.for_each_symbol([&](const Symbol& x) { internal = internal || x.is_internal(); });
      if (!internal) continue;
      if (subsumes(o, c, p)) out.axioms.insert(subsumption(cs, p));
      if (subsumes(o, p, c)) out.axioms.insert(subsumption(p, cs));
    }
  }
  detail::add_role_links(out.axioms, sigma);
  detail::add_identities(out.axioms, sigma);
  return out;
}

/// oa(O, Â(b), A'): A ⊑ A' ⊔ C for a positive literal, A' ⊑ A ⊔ C for a
/// negative one, over every C of the concept space of Oσ without A such that
/// Oσ ⊨ C(b). σ must send A to A'; it may also shift older internal copies
/// of A.
inline BridgingAxiomSet oa(const AxiomSet& o, const SignedLiteral& literal, const Substitution& sigma,
                           unsigned depth) {
  const Symbol internal = sigma(literal.name);
  if (internal == literal.name) throw Error("oa needs a substitution that internalizes " + literal.name.render());
  BridgingAxiomSet out{{}, BridgingFlavor::Oa, sigma};
  const AxiomSet renamed = apply_substitution(o, sigma);
  SymbolSet sig = signature(renamed);
  sig.insert(internal);
  sig.erase(literal.name);
  const Concept a = Concept::atom(literal.name), a1 = Concept::atom(internal);
  for (const auto& c : concept_space(sig, depth)) {
    if (!instance_of(renamed, c, literal.individual)) continue;
    out.axioms.insert(literal.positive ? subsumption(a, a1 | c) : subsumption(a1, a | c));
  }
  return out;
}

inline BridgingAxiomSet oa(const AxiomSet& o, const SignedLiteral& literal, const Symbol& internal,
                           unsigned depth) {
  require_kind(internal, SymbolKind::Concept);
  return oa(o, literal, Substitution(std::map<Symbol, Symbol>{{literal.name, internal}}), depth);
}

}  // namespace reinterp

#endif  // REINTERP_BRIDGING_HPP

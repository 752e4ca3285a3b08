#ifndef REINTERP_POSTULATES_HPP
#define REINTERP_POSTULATES_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "reinterp/concept_space.hpp"
#include "reinterp/operators.hpp"

namespace reinterp {

enum class VerdictStatus { Satisfied, Violated, Vacuous };

inline std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Satisfied:
      return "satisfied";
    case VerdictStatus::Violated:
      return "violated";
    case VerdictStatus::Vacuous:
      return "vacuous";
  }
  return "?";
}

/// Outcome of one postulate check. When the precondition fails the
/// conclusion is not evaluated and is reported as held.
struct Verdict {
  std::string postulate;
  bool precondition_held = false;
  bool conclusion_held = true;
  VerdictStatus status = VerdictStatus::Vacuous;
  std::optional<Axiom> witness;
  std::string detail;  // which side entails the witness, or why it is missing
};

namespace detail {

inline Verdict make_verdict(std::string id, bool pre, bool concl, std::optional<Axiom> witness = {},
                            std::string detail = {}) {
  Verdict v{std::move(id), pre, pre ? concl : true, VerdictStatus::Vacuous, {}, {}};
  if (!pre) return v;
  v.status = concl ? VerdictStatus::Satisfied : VerdictStatus::Violated;
  if (!concl) {
    v.witness = std::move(witness);
    v.detail = std::move(detail);
  }
  return v;
}

inline AxiomSet unite(AxiomSet x, const AxiomSet& y) {
  x.insert(y.begin(), y.end());
  return x;
}

// Negation of a literal, when the language has one.
inline std::optional<Literal> negate(const Axiom& ax) {
  if (const auto* c = std::get_if<ConceptAssertion>(&ax)) return concept_assertion(!c->description, c->individual);
  if (const auto* r = std::get_if<RoleAssertion>(&ax)) return role_assertion(r->role, r->subject, r->object, !r->positive);
  return std::nullopt;
}

}  // namespace detail

/// Probe axioms over V: assertions C(a), ±R(a, b), a ≐ b, a ≠ b and
/// subsumptions C ⊑ D for C, D in concept_space(V, depth). Cheap probes
/// come first and concepts are ordered by rendered length.
inline std::vector<Axiom> probe_set(const SymbolSet& vocabulary, unsigned depth) {
  const ConceptSet space = concept_space(vocabulary, depth);
  std::vector<Concept> concepts(space.begin(), space.end());
  std::stable_sort(concepts.begin(), concepts.end(), [](const Concept& x, const Concept& y) {
    return render(x).size() < render(y).size();
  });
  const SymbolSet inds = filter_kind(vocabulary, SymbolKind::Individual);
  const SymbolSet roles = filter_kind(vocabulary, SymbolKind::Role);
  std::vector<Axiom> out;
  for (const auto& c : concepts)
    for (const auto& a : inds) out.push_back(concept_assertion(c, a));
  for (const auto& a : inds) {
    for (const auto& b : inds) {
      for (const auto& r : roles) {
        out.push_back(role_assertion(r, a, b));
        out.push_back(role_assertion(r, a, b, false));
      }
      if (a < b) {
        out.push_back(equality(a, b));
        out.push_back(inequality(a, b));
      }
    }
  }
  for (const auto& c : concepts)
    for (const auto& d : concepts)
      if (c != d) out.push_back(subsumption(c, d));
  return out;
}

/// First probe entailed by exactly one of X and Y (by X only when
/// `one_way`), or nothing when they agree on every probe.
inline std::optional<Axiom> probe_difference(const AxiomSet& x, const AxiomSet& y, const SymbolSet& vocabulary,
                                             unsigned depth, bool one_way = false) {
  if (x == y) return std::nullopt;
  for (const auto& p : probe_set(vocabulary, depth)) {
    const bool in_x = entails(x, p);
    if (one_way && !in_x) continue;
    if (in_x != entails(y, p)) return p;
  }
  return std::nullopt;
}

/// X ≡^V Y relative to the probe depth. A false answer is definitive.
inline bool probe_equiv(const AxiomSet& x, const AxiomSet& y, const SymbolSet& vocabulary, unsigned depth = 1) {
  return !probe_difference(x, y, vocabulary, depth);
}

/// Public vocabulary a postulate is relativized to.
inline SymbolSet postulate_vocabulary(const Ontology& o, const AxiomSet& o1, const AxiomSet& o2) {
  SymbolSet v = o.public_vocab;
  for (const auto& s : signature(o1)) v.insert(s);
  for (const auto& s : signature(o2)) v.insert(s);
  return v;
}

inline Verdict check_rdp(int n, const Ontology& o, const AxiomSet& o1, const AxiomSet& o2, const Operator& op,
                         unsigned probe_depth = 1) {
  const std::string id = "RDP" + std::to_string(n);
  auto revise = [&](const Ontology& x, const AxiomSet& t) { return op(x, t).ontology; };
  switch (n) {
    case 1:
    case 2: {
      const bool pre = n == 1 ? entails_all(o2, o1) : !is_consistent(detail::unite(o1, o2));
      if (!pre) return detail::make_verdict(id, false, true);
      const AxiomSet two = revise(revise(o, o1), o2).axioms, one = revise(o, o2).axioms;
      const auto w = probe_difference(two, one, postulate_vocabulary(o, o1, o2), probe_depth);
      std::string side;
      if (w) side = entails(two, *w) ? "entailed by the two-step result only" : "entailed by O ∘ O2 only";
      return detail::make_verdict(id, true, !w, w, side);
    }
    case 3: {
      const AxiomSet one = revise(o, o2).axioms;
      if (!entails_all(one, o1)) return detail::make_verdict(id, false, true);
      const AxiomSet two = revise(revise(o, o1), o2).axioms;
      for (const auto& ax : o1)
        if (!entails(two, ax)) return detail::make_verdict(id, true, false, ax, "entailed by O ∘ O2 only");
      return detail::make_verdict(id, true, true);
    }
    case 4: {
      const AxiomSet one = revise(o, o2).axioms;
      if (!is_consistent(detail::unite(one, o1))) return detail::make_verdict(id, false, true);
      const AxiomSet two = revise(revise(o, o1), o2).axioms;
      if (is_consistent(detail::unite(two, o1))) return detail::make_verdict(id, true, true);
      // ¬⋀O1 as a clause, when every axiom of O1 is a literal.
      std::vector<Literal> negated;
      for (const auto& ax : o1) {
        const auto l = detail::negate(ax);
        if (!l) return detail::make_verdict(id, true, false, {}, "O1 has no clausal negation");
        negated.push_back(*l);
      }
      return detail::make_verdict(id, true, false, clause(std::move(negated)),
                                  "entailed by the two-step result only");
    }
    default:
      throw Error("unknown postulate RDP" + std::to_string(n));
  }
}

inline Verdict check_ragm(int which, const Ontology& o, const AxiomSet& o1, const AxiomSet& o2, const Operator& op,
                          unsigned probe_depth = 1) {
  if (which != 7 && which != 8) throw Error("unknown postulate RAGM" + std::to_string(which));
  const std::string id = "RAGM" + std::to_string(which);
  const AxiomSet expanded = detail::unite(op(o, o1).ontology.axioms, o2);
  if (which == 8 && !is_consistent(expanded)) return detail::make_verdict(id, false, true);
  const AxiomSet joint = op(o, detail::unite(o1, o2)).ontology.axioms;
  const SymbolSet v = postulate_vocabulary(o, o1, o2);
  const auto w = which == 7 ? probe_difference(joint, expanded, v, probe_depth, true)
                            : probe_difference(expanded, joint, v, probe_depth, true);
  return detail::make_verdict(id, true, !w, w,
                              which == 7 ? "entailed by O ∘ (O1 ∪ O2) only" : "entailed by (O ∘ O1) ∪ O2 only");
}

inline Verdict check_preservation(const Ontology& o, const std::vector<AxiomSet>& seq, const Operator& op) {
  const RevisionResult r = iterate(o, seq, op);
  for (const auto& ax : apply_substitution(o.axioms, r.composed))
    if (!r.ontology.axioms.count(ax)) return detail::make_verdict("Preservation", true, false, ax, "missing from O ∘ SEQ");
  return detail::make_verdict("Preservation", true, true);
}

inline Verdict check_reconstruction(const Ontology& o, const std::vector<AxiomSet>& seq, const Operator& op) {
  const RevisionResult r = iterate(o, seq, op);
  const Substitution rho = inverse_renaming(r.history());
  SymbolSet fixed = o.public_vocab;
  for (const auto& t : seq)
    for (const auto& s : signature(t)) fixed.insert(s);
  for (const auto& s : fixed)
    if (rho(s) != s) return detail::make_verdict("Reconstruction", true, false, {}, "ρ moves " + s.render());
  const AxiomSet back = apply_substitution(r.ontology.axioms, rho);
  AxiomSet wanted = o.axioms;
  for (const auto& t : seq) wanted.insert(t.begin(), t.end());
  for (const auto& ax : wanted)
    if (!back.count(ax)) return detail::make_verdict("Reconstruction", true, false, ax, "missing from (O ∘ SEQ)ρ");
  return detail::make_verdict("Reconstruction", true, true);
}

}  // namespace reinterp

#endif  // REINTERP_POSTULATES_HPP

#ifndef REINTERP_OPERATORS_HPP
#define REINTERP_OPERATORS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "reinterp/bridging.hpp"
#include "reinterp/conflict.hpp"
#include "reinterp/msc.hpp"
#include "reinterp/ontology.hpp"
#include "reinterp/selection.hpp"

namespace reinterp {

enum class InternalizationMode { Mcs, Full };

struct RevisionOptions {
  InternalizationMode mode = InternalizationMode::Mcs;
  McsOptions mcs;
  unsigned depth_msc = 1;
  unsigned depth_bridge = 1;
  MscOptions msc;
  /// Largest remainder family enumerated for a selection without ranking.
  std::size_t max_remainders = 4096;
};

struct StepRecord {
  std::string op;
  AxiomSet trigger;
  bool conflict = false;
  Substitution sigma;
  AxiomSet bridging;            // bridging axioms that made it into the result
  std::size_t candidates = 0;   // size of the remainder family, 0 when not enumerated
};

struct RevisionResult {
  Ontology ontology;
  std::vector<StepRecord> trace;
  Substitution composed;

  std::vector<Substitution> history() const {
    std::vector<Substitution> out;
    for (const auto& step : trace) out.push_back(step.sigma);
    return out;
  }
};

namespace detail {

inline void require_public(const AxiomSet& trigger) {
  for (const auto& s : signature(trigger))
    if (!s.is_public()) throw Error("trigger uses internal symbol " + s.render());
}

inline Ontology make_result(AxiomSet axioms, const Ontology& o, const AxiomSet& trigger) {
  SymbolSet pub = o.public_vocab;
  for (const auto& s : signature(trigger)) pub.insert(s);
  return Ontology::from_axioms(std::move(axioms), pub);
}

inline RevisionResult expansion(const Ontology& o, const AxiomSet& trigger, std::string op) {
  AxiomSet all = o.axioms;
  all.insert(trigger.begin(), trigger.end());
  RevisionResult r{make_result(std::move(all), o, trigger), {}, {}};
  r.trace.push_back(StepRecord{std::move(op), trigger, false, {}, {}, 0});
  return r;
}

inline SignedLiteral require_literal(const AxiomSet& trigger) {
  if (trigger.size() == 1) {
    if (auto l = as_signed_literal(*trigger.begin())) return *l;
  }
  throw Error("trigger is not a single atomic concept literal");
}

inline void check_inputs(const Ontology& o, const AxiomSet& trigger) {
  require_public(trigger);
  if (!is_consistent(o.axioms)) throw Error("input ontology inconsistent");
  if (!is_consistent(trigger)) throw Error("trigger inconsistent");
}

inline RevisionResult bridge_revise(const Ontology& o, const AxiomSet& trigger, const SelectionStrategy& gamma,
                                    const RevisionOptions& options, bool strong) {
  const std::string op = strong ? "strong" : "weak";
  check_inputs(o, trigger);
  AxiomSet joint = o.axioms;
  joint.insert(trigger.begin(), trigger.end());
  if (is_consistent(joint)) return expansion(o, trigger, op);

  const SymbolSet vocab = o.vocabulary();
  SymbolSet targets;
  if (options.mode == InternalizationMode::Full) {
    targets = vocab;
  } else {
    const McsResult m = mcs(o.axioms, trigger, options.mcs);
    if (!m.resolvable) throw Error("not reinterpretation compatible");
    for (const auto& s : gamma.symbols(m.families)) targets.insert(s.begin(), s.end());
  }
  const Substitution sigma = internalization(targets, vocab);

  AxiomSet base = apply_substitution(o.axioms, sigma);
  base.insert(trigger.begin(), trigger.end());
  const AxiomSet pool =
      strong ? strong_bridging(sigma, o.axioms, options.depth_bridge).axioms : simple_bridging(sigma).axioms;
  AxiomSet bridging;
  std::size_t candidates = 0;
  if (gamma.ranking) {
    bridging = greedy_remainder(gamma.ranking(pool), base);
  } else {
    const AxiomFamily family = dual_remainders(pool, base, options.max_remainders);
    if (family.empty()) throw Error("trigger inconsistent");
    candidates = family.size();
    const AxiomFamily chosen = gamma.bridging(family, pool);
    if (chosen.empty()) throw Error("selection returned no candidate");
    bridging = chosen.front();
    for (const auto& x : chosen) {
      AxiomSet keep;
      for (const auto& ax : bridging)
        if (x.count(ax)) keep.insert(ax);
      bridging = std::move(keep);
    }
  }

  AxiomSet result = base;
  result.insert(bridging.begin(), bridging.end());
  RevisionResult r{make_result(std::move(result), o, trigger), {}, sigma};
  r.trace.push_back(StepRecord{op, trigger, true, sigma, std::move(bridging), candidates});
  return r;
}

}  // namespace detail

/// O ⊗γ O2. Mcs mode internalizes the union of the selected minimal
/// conflicting symbol sets; Full mode internalizes the whole vocabulary.
inline RevisionResult weak_revise(const Ontology& o, const AxiomSet& trigger, const SelectionStrategy& gamma,
                                  const RevisionOptions& options = {}) {
  return detail::bridge_revise(o, trigger, gamma, options, false);
}

/// O ⊙γ O2: as weak_revise with strong bridging axioms.
inline RevisionResult strong_revise(const Ontology& o, const AxiomSet& trigger, const SelectionStrategy& gamma,
                                    const RevisionOptions& options = {}) {
  return detail::bridge_revise(o, trigger, gamma, options, true);
}

/// Options for the literal weak operator ⊗: only concept and role symbols
/// are reinterpreted, so a literal conflict yields σ = [A/A'].
inline RevisionOptions literal_options(RevisionOptions base = {}) {
  base.mode = InternalizationMode::Mcs;
  base.mcs.reinterpret_individuals = false;
  return base;
}

/// msc-based strong operator for a literal A(b) or ¬A(b).
inline RevisionResult msc_revise_literal(const Ontology& o, const SignedLiteral& literal,
                                         const RevisionOptions& options = {}) {
  const AxiomSet trigger{literal.axiom()};
  detail::check_inputs(o, trigger);
  AxiomSet joint = o.axioms;
  joint.insert(trigger.begin(), trigger.end());
  if (is_consistent(joint)) return detail::expansion(o, trigger, "msc-literal");

  const Substitution sigma = internalization({literal.name}, o.vocabulary());
  AxiomSet result = apply_substitution(o.axioms, sigma);
  const auto m = msc(result, literal.individual, options.depth_msc, options.msc);
  if (!m) throw Error("msc unavailable at the configured depth");
  const Concept a = Concept::atom(literal.name), a1 = Concept::atom(sigma(literal.name));
  AxiomSet bridging;
  if (literal.positive) {
    bridging = {subsumption(a1, a), subsumption(a, a1 | *m)};
  } else {
    bridging = {subsumption(a, a1), subsumption(a1, a | *m)};
  }
  result.insert(trigger.begin(), trigger.end());
  result.insert(bridging.begin(), bridging.end());
  RevisionResult r{detail::make_result(std::move(result), o, trigger), {}, sigma};
  r.trace.push_back(StepRecord{"msc-literal", trigger, true, sigma, std::move(bridging), 1});
  return r;
}

/// Selection-based strong operator ⊕sel for a literal: the literal weak
/// result plus sel(oa(O, α, A')).
inline RevisionResult sel_revise_literal(const Ontology& o, const SignedLiteral& literal,
                                         const SelectionStrategy& sel, const RevisionOptions& options = {}) {
  const AxiomSet trigger{literal.axiom()};
  detail::check_inputs(o, trigger);
  AxiomSet joint = o.axioms;
  joint.insert(trigger.begin(), trigger.end());
  if (is_consistent(joint)) return detail::expansion(o, trigger, "sel-literal");

  RevisionResult r = weak_revise(o, trigger, sel, literal_options(options));
  const auto& sigma = r.composed;
  const AxiomSet extra = sel.auxiliary(oa(o.axioms, literal, sigma, options.depth_bridge).axioms);
  AxiomSet result = r.ontology.axioms;
  result.insert(extra.begin(), extra.end());
  r.ontology = detail::make_result(std::move(result), o, trigger);
  r.trace.back().op = "sel-literal";
  r.trace.back().bridging.insert(extra.begin(), extra.end());
  return r;
}

enum class OperatorKind { Weak, Strong, MscLiteral, SelLiteral };

inline std::string_view to_string(OperatorKind k) {
  switch (k) {
    case OperatorKind::Weak:
      return "weak";
    case OperatorKind::Strong:
      return "strong";
    case OperatorKind::MscLiteral:
      return "msc-literal";
    case OperatorKind::SelLiteral:
      return "sel-literal";
  }
  return "?";
}

inline OperatorKind parse_operator(std::string_view name) {
  for (auto k : {OperatorKind::Weak, OperatorKind::Strong, OperatorKind::MscLiteral, OperatorKind::SelLiteral})
    if (to_string(k) == name) return k;
  throw Error("unknown operator: " + std::string(name));
}

/// A revision operator ready to apply: kind, selection functions, options.
struct Operator {
  OperatorKind kind = OperatorKind::Weak;
  SelectionStrategy strategy = canonical_selection();
  RevisionOptions options;

  std::string name() const { return std::string(to_string(kind)) + "/" + strategy.name; }

  RevisionResult operator()(const Ontology& o, const AxiomSet& trigger) const {
    switch (kind) {
      case OperatorKind::Weak:
        return weak_revise(o, trigger, strategy, options);
      case OperatorKind::Strong:
        return strong_revise(o, trigger, strategy, options);
      case OperatorKind::MscLiteral:
        return msc_revise_literal(o, detail::require_literal(trigger), options);
      case OperatorKind::SelLiteral:
        return sel_revise_literal(o, detail::require_literal(trigger), strategy, options);
    }
    throw Error("unknown operator");
  }
};

/// Left fold of `op` over `seq`, keeping every step in the trace.
inline RevisionResult iterate(const Ontology& o, const std::vector<AxiomSet>& seq, const Operator& op) {
  RevisionResult acc{o, {}, {}};
  for (std::size_t i = 0; i < seq.size(); ++i) {
    RevisionResult step;
    try {
      step = op(acc.ontology, seq[i]);
    } catch (const Error& e) {
      throw Error("step " + std::to_string(i + 1) + ": " + e.what());
    }
    acc.ontology = std::move(step.ontology);
    acc.composed = compose(acc.composed, step.composed);
    for (auto& rec : step.trace) acc.trace.push_back(std::move(rec));
  }
  return acc;
}

}  // namespace reinterp

#endif  // REINTERP_OPERATORS_HPP

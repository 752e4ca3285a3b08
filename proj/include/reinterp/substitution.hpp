#ifndef REINTERP_SUBSTITUTION_HPP
#define REINTERP_SUBSTITUTION_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "reinterp/axiom.hpp"

namespace reinterp {

/// Kind-preserving renaming with finite support. Only non-identity entries
/// are stored, so support() is exactly the key set.
class Substitution {
 public:
  Substitution() = default;

  /// Throws on kind-changing mappings.
  explicit Substitution(const std::map<Symbol, Symbol>& mapping) {
    for (const auto& [from, to] : mapping) {
      if (from.kind != to.kind) throw Error("substitution must preserve symbol kinds: " + from.render());
      if (from != to) mapping_.emplace(from, to);
    }
  }

  /// No two support symbols share a target.
  bool is_injective() const {
    SymbolSet seen;
    for (const auto& [from, to] : mapping_)
      if (!seen.insert(to).second) return false;
    return true;
  }

  Symbol operator()(const Symbol& s) const {
    auto it = mapping_.find(s);
    return it == mapping_.end() ? s : it->second;
  }

  const std::map<Symbol, Symbol>& mapping() const { return mapping_; }
  bool is_identity() const { return mapping_.empty(); }

  SymbolSet support() const {
    SymbolSet out;
    for (const auto& [from, to] : mapping_) out.insert(from);
    return out;
  }
  /// sp_i: individuals in the support.
  SymbolSet individual_support() const { return filter_kind(support(), SymbolKind::Individual); }
  /// sp_CR: concept and role symbols in the support.
  SymbolSet concept_role_support() const {
    SymbolSet out;
    for (const auto& s : support())
      if (s.kind != SymbolKind::Individual) out.insert(s);
    return out;
  }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<Symbol, Symbol> mapping_;
};

/// The disambiguation schema: every s in S goes to its next prime level.
inline Substitution make_substitution(const SymbolSet& support) {
  std::map<Symbol, Symbol> m;
  for (const auto& s : support) m.emplace(s, s.primed(1));
  return Substitution(m);
}

/// Internalizes `targets` inside an ontology with vocabulary `vocabulary`.
/// Symbols of `vocabulary` sharing a base name with a target at or above its
/// prime level are shifted up as well, so the renaming stays injective on
/// ontologies that already carry internal symbols.
inline Substitution internalization(const SymbolSet& targets, const SymbolSet& vocabulary) {
  std::map<std::pair<SymbolKind, std::string>, unsigned> lowest;
  for (const auto& s : targets) {
    auto [it, fresh] = lowest.emplace(std::pair{s.kind, s.name}, s.prime);
    if (!fresh) it->second = std::min(it->second, s.prime);
  }
  SymbolSet support = targets;
  for (const auto& s : vocabulary) {
    auto it = lowest.find({s.kind, s.name});
    if (it != lowest.end() && s.prime >= it->second) support.insert(s);
  }
  return make_substitution(support);
}

inline Concept apply_substitution(const Concept& c, const Substitution& sigma) {
  using Op = Concept::Op;
  if (sigma.is_identity()) return c;
  switch (c.op()) {
    case Op::Top:
    case Op::Bot:
      return c;
    case Op::Atom:
      return Concept::atom(sigma(c.symbol()));
    case Op::Not:
      return !apply_substitution(c.arg(), sigma);
    case Op::And:
    case Op::Or: {
      std::vector<Concept> args;
      for (const auto& a : c.args()) args.push_back(apply_substitution(a, sigma));
      return c.is(Op::And) ? Concept::conjunction(std::move(args)) : Concept::disjunction(std::move(args));
    }
    case Op::Exists:
      return Concept::exists(sigma(c.symbol()), apply_substitution(c.arg(), sigma));
  }
  return c;
}

inline Literal apply_substitution(const Literal& l, const Substitution& sigma) {
  if (const auto* ca = std::get_if<ConceptAssertion>(&l))
    return concept_assertion(apply_substitution(ca->description, sigma), sigma(ca->individual));
  const auto& ra = std::get<RoleAssertion>(l);
  return role_assertion(sigma(ra.role), sigma(ra.subject), sigma(ra.object), ra.positive);
}

inline Axiom apply_substitution(const Axiom& ax, const Substitution& sigma) {
  return std::visit(
      [&](const auto& a) -> Axiom {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Subsumption>) {
          return subsumption(apply_substitution(a.sub, sigma), apply_substitution(a.super, sigma));
        } else if constexpr (std::is_same_v<T, RoleInclusion>) {
          return role_inclusion(sigma(a.sub), sigma(a.super));
        } else if constexpr (std::is_same_v<T, ConceptAssertion> || std::is_same_v<T, RoleAssertion>) {
          return to_axiom(apply_substitution(Literal{a}, sigma));
        } else if constexpr (std::is_same_v<T, Equality>) {
          return equality(sigma(a.lhs), sigma(a.rhs));
        } else if constexpr (std::is_same_v<T, Inequality>) {
          return inequality(sigma(a.lhs), sigma(a.rhs));
        } else {
          std::vector<Literal> ls;
          for (const auto& l : a.literals) ls.push_back(apply_substitution(l, sigma));
          return clause(std::move(ls));
        }
      },
      ax);
}

inline AxiomSet apply_substitution(const AxiomSet& axioms, const Substitution& sigma) {
  if (sigma.is_identity()) return axioms;
  AxiomSet out;
  for (const auto& ax : axioms) out.insert(apply_substitution(ax, sigma));
  return out;
}

/// σ1 ≤ σ2 iff sp(σ1) ⊆ sp(σ2).
inline bool support_leq(const Substitution& s1, const Substitution& s2) {
  const auto a = s1.support(), b = s2.support();
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// `first` then `second`.
inline Substitution compose(const Substitution& first, const Substitution& second) {
  std::map<Symbol, Symbol> m;
  for (const auto& [from, to] : first.mapping()) m[from] = second(to);
  for (const auto& [from, to] : second.mapping()) m.emplace(from, to);
  return Substitution(m);
}

/// ρ for an internalization history: every symbol produced along the way is
/// sent back to the symbol it started from.
inline Substitution inverse_renaming(const std::vector<Substitution>& history) {
  std::map<Symbol, Symbol> origin;  // current name -> original name
  for (const auto& step : history) {
    std::map<Symbol, Symbol> next;
    for (const auto& [name, from] : origin)
      if (!step.mapping().count(name)) next.emplace(name, from);
    for (const auto& [from, to] : step.mapping()) {
      auto it = origin.find(from);
      next[to] = it == origin.end() ? from : it->second;
    }
    origin = std::move(next);
  }
  std::map<Symbol, Symbol> rho;
  for (const auto& [name, from] : origin)
    if (name != from) rho.emplace(name, from);
  return Substitution(rho);
}

inline std::string render(const Substitution& sigma) {
  std::string out = "{";
  bool first = true;
  for (const auto& [from, to] : sigma.mapping()) {
    if (!first) out += ", ";
    first = false;
    out += from.render() + " -> " + to.render();
  }
  return out + "}";
}

}  // namespace reinterp

#endif  // REINTERP_SUBSTITUTION_HPP

#ifndef REINTERP_AXIOM_HPP
#define REINTERP_AXIOM_HPP

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "reinterp/concept.hpp"
#include "reinterp/symbol.hpp"

namespace reinterp {

/// C ⊑ D
struct Subsumption {
  Concept sub;
  Concept super;
  friend auto operator<=>(const Subsumption&, const Subsumption&) = default;
  friend bool operator==(const Subsumption&, const Subsumption&) = default;
};

/// R ⊑ S
struct RoleInclusion {
  Symbol sub;
  Symbol super;
  friend auto operator<=>(const RoleInclusion&, const RoleInclusion&) = default;
  friend bool operator==(const RoleInclusion&, const RoleInclusion&) = default;
};

/// C(a)
struct ConceptAssertion {
  Concept description;
  Symbol individual;
  friend auto operator<=>(const ConceptAssertion&, const ConceptAssertion&) = default;
  friend bool operator==(const ConceptAssertion&, const ConceptAssertion&) = default;
};

/// R(a, b) or ¬R(a, b)
struct RoleAssertion {
  Symbol role;
  Symbol subject;
  Symbol object;
  bool positive = true;
  friend auto operator<=>(const RoleAssertion&, const RoleAssertion&) = default;
  friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
};

/// a ≐ b, stored with lhs <= rhs.
struct Equality {
  Symbol lhs;
  Symbol rhs;
  friend auto operator<=>(const Equality&, const Equality&) = default;
  friend bool operator==(const Equality&, const Equality&) = default;
};

/// a ≠ b, stored with lhs < rhs.
struct Inequality {
  Symbol lhs;
  Symbol rhs;
  friend auto operator<=>(const Inequality&, const Inequality&) = default;
  friend bool operator==(const Inequality&, const Inequality&) = default;
};

using Literal = std::variant<ConceptAssertion, RoleAssertion>;

/// Disjunction of assertions (boolean ABox). Literals are sorted and
/// pairwise distinct; at least two of them.
struct Clause {
  std::vector<Literal> literals;
  friend auto operator<=>(const Clause&, const Clause&) = default;
  friend bool operator==(const Clause&, const Clause&) = default;
};

using Axiom = std::variant<Subsumption, RoleInclusion, ConceptAssertion, RoleAssertion,
                           Equality, Inequality, Clause>;

/// Canonically ordered axiom set; all set-level equalities in the library
/// are equalities of these.
using AxiomSet = std::set<Axiom>;

// ---------------------------------------------------------------------------
// Checked constructors.

inline Axiom subsumption(Concept sub, Concept super) {
  return Subsumption{std::move(sub), std::move(super)};
}

inline Axiom role_inclusion(Symbol sub, Symbol super) {
  require_kind(sub, SymbolKind::Role);
  require_kind(super, SymbolKind::Role);
  return RoleInclusion{std::move(sub), std::move(super)};
}

inline ConceptAssertion concept_assertion(Concept c, Symbol a) {
  require_kind(a, SymbolKind::Individual);
  return ConceptAssertion{std::move(c), std::move(a)};
}

inline RoleAssertion role_assertion(Symbol r, Symbol a, Symbol b, bool positive = true) {
  require_kind(r, SymbolKind::Role);
  require_kind(a, SymbolKind::Individual);
  require_kind(b, SymbolKind::Individual);
  return RoleAssertion{std::move(r), std::move(a), std::move(b), positive};
}

inline Axiom equality(Symbol a, Symbol b) {
  require_kind(a, SymbolKind::Individual);
  require_kind(b, SymbolKind::Individual);
  if (b < a) std::swap(a, b);
  return Equality{std::move(a), std::move(b)};
}

inline Axiom inequality(Symbol a, Symbol b) {
  require_kind(a, SymbolKind::Individual);
  require_kind(b, SymbolKind::Individual);
  if (a == b) throw Error("inequality " + a.render() + " != " + a.render() + " is not allowed");
  if (b < a) std::swap(a, b);
  return Inequality{std::move(a), std::move(b)};
}

inline Axiom to_axiom(const Literal& l) {
  return std::visit([](const auto& x) -> Axiom { return x; }, l);
}

/// Builds a clause. Duplicates are removed; a single remaining literal is
/// returned as a plain assertion.
inline Axiom clause(std::vector<Literal> literals) {
  if (literals.empty()) throw Error("clause must have at least one literal");
  std::sort(literals.begin(), literals.end());
  literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
  if (literals.size() == 1) return to_axiom(literals.front());
  return Clause{std::move(literals)};
}

// ---------------------------------------------------------------------------
// Vocabulary.

template <class Fn>
void for_each_symbol(const Axiom& ax, Fn&& fn) {
  struct Visitor {
    Fn& fn;
    void operator()(const Subsumption& s) const {
      s.sub.for_each_symbol(fn);
      s.super.for_each_symbol(fn);
    }
    void operator()(const RoleInclusion& r) const {
      fn(r.sub);
      fn(r.super);
    }
    void operator()(const ConceptAssertion& c) const {
      c.description.for_each_symbol(fn);
      fn(c.individual);
    }
    void operator()(const RoleAssertion& r) const {
      fn(r.role);
      fn(r.subject);
      fn(r.object);
    }
    void operator()(const Equality& e) const {
      fn(e.lhs);
      fn(e.rhs);
    }
    void operator()(const Inequality& e) const {
      fn(e.lhs);
      fn(e.rhs);
    }
    void operator()(const Clause& c) const {
      for (const auto& l : c.literals) std::visit(*this, l);
    }
  };
  std::visit(Visitor{fn}, ax);
}

inline SymbolSet signature(const Axiom& ax) {
  SymbolSet out;
  for_each_symbol(ax, [&](const Symbol& s) { out.insert(s); });
  return out;
}

template <class Range>
SymbolSet signature(const Range& axioms) {
  SymbolSet out;
  for (const Axiom& ax : axioms) for_each_symbol(ax, [&](const Symbol& s) { out.insert(s); });
  return out;
}

inline bool mentions(const Axiom& ax, const Symbol& s) {
  bool found = false;
  for_each_symbol(ax, [&](const Symbol& t) { found = found || t == s; });
  return found;
}

inline SymbolSet filter_kind(const SymbolSet& symbols, SymbolKind kind) {
  SymbolSet out;
  for (const auto& s : symbols)
    if (s.kind == kind) out.insert(s);
  return out;
}

// ---------------------------------------------------------------------------
// Rendering in the ontology text format.

inline std::string render(const ConceptAssertion& c) {
  std::string inner = render(c.description);
  return inner + "(" + c.individual.render() + ")";
}

inline std::string render(const RoleAssertion& r) {
  return (r.positive ? "" : "!") + r.role.render() + "(" + r.subject.render() + ", " +
         r.object.render() + ")";
}

inline std::string render(const Literal& l) {
  return std::visit([](const auto& x) { return render(x); }, l);
}

inline std::string render(const Axiom& ax) {
  struct Visitor {
    std::string operator()(const Subsumption& s) const {
      return render(s.sub) + " [= " + render(s.super);
    }
    std::string operator()(const RoleInclusion& r) const {
      return r.sub.render() + " [=r " + r.super.render();
    }
    std::string operator()(const ConceptAssertion& c) const { return render(c); }
    std::string operator()(const RoleAssertion& r) const { return render(r); }
    std::string operator()(const Equality& e) const {
      return e.lhs.render() + " == " + e.rhs.render();
    }
    std::string operator()(const Inequality& e) const {
      return e.lhs.render() + " != " + e.rhs.render();
    }
    std::string operator()(const Clause& c) const {
      std::string out = "clause { ";
      for (std::size_t i = 0; i < c.literals.size(); ++i) {
        if (i) out += " | ";
        out += render(c.literals[i]);
      }
      return out + " }";
    }
  };
  return std::visit(Visitor{}, ax);
}

// ---------------------------------------------------------------------------
// Convenience for literal triggers A(b) / ¬A(b).

struct SignedLiteral {
  Symbol name;        // atomic concept A
  Symbol individual;  // b
  bool positive = true;

  Axiom axiom() const {
    Concept a = Concept::atom(name);
    return concept_assertion(positive ? a : !a, individual);
  }
};

/// Recognizes A(b) and ¬A(b) with atomic A.
inline std::optional<SignedLiteral> as_signed_literal(const Axiom& ax) {
  const auto* ca = std::get_if<ConceptAssertion>(&ax);
  if (!ca) return std::nullopt;
  const Concept& c = ca->description;
  if (c.is(Concept::Op::Atom)) return SignedLiteral{c.symbol(), ca->individual, true};
  if (c.is(Concept::Op::Not) && c.arg().is(Concept::Op::Atom))
    return SignedLiteral{c.arg().symbol(), ca->individual, false};
  return std::nullopt;
}

}  // namespace reinterp

#endif  // REINTERP_AXIOM_HPP

#ifndef REINTERP_CONCEPT_HPP
#define REINTERP_CONCEPT_HPP

#include <algorithm>
#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "reinterp/symbol.hpp"

namespace reinterp {

/// Immutable concept description over ⊤, ⊥, atoms, ¬, ⊓, ⊔ and ∃R.C.
///
/// Values are always in canonical form: nested conjunctions and
/// disjunctions are flattened, their operands sorted and deduplicated, and
/// double negation is collapsed. Structural equality is therefore a sound
/// (though incomplete) test for logical equivalence, and sets of concepts
/// and axioms deduplicate deterministically.
class Concept {
 public:
  // Declaration order is the canonical order between constructors.
  enum class Op : unsigned char { Top, Bot, Atom, Not, And, Or, Exists };

  Concept() : Concept(top()) {}

  static Concept top() {
    static const Concept t(std::make_shared<Node>(Node{Op::Top, {}, {}}));
    return t;
  }
  static Concept bot() {
    static const Concept b(std::make_shared<Node>(Node{Op::Bot, {}, {}}));
    return b;
  }
  static Concept atom(Symbol s) {
    require_kind(s, SymbolKind::Concept);
    return Concept(std::make_shared<Node>(Node{Op::Atom, std::move(s), {}}));
  }
  static Concept negation(const Concept& c) {
    if (c.op() == Op::Not) return c.arg();
    return Concept(std::make_shared<Node>(Node{Op::Not, {}, {c}}));
  }
  static Concept conjunction(std::vector<Concept> operands) {
    return make_nary(Op::And, std::move(operands));
  }
  static Concept disjunction(std::vector<Concept> operands) {
    return make_nary(Op::Or, std::move(operands));
  }
  static Concept exists(Symbol role, const Concept& filler) {
    require_kind(role, SymbolKind::Role);
    return Concept(std::make_shared<Node>(Node{Op::Exists, std::move(role), {filler}}));
  }

  Op op() const { return node_->op; }
  bool is(Op o) const { return node_->op == o; }
  /// The concept name of an atom or the role of an existential.
  const Symbol& symbol() const { return node_->symbol; }
  std::span<const Concept> args() const { return node_->args; }
  /// Single operand of ¬ and the filler of ∃.
  const Concept& arg() const { return node_->args.front(); }

  /// Constructor depth: atoms, ⊤ and ⊥ have depth 0.
  unsigned depth() const {
    unsigned d = 0;
    for (const auto& a : args()) d = std::max(d, a.depth() + 1);
    return d;
  }

  template <class Fn>
  void for_each_symbol(Fn&& fn) const {
    if (is(Op::Atom) || is(Op::Exists)) fn(symbol());
    for (const auto& a : args()) a.for_each_symbol(fn);
  }

  bool mentions(const Symbol& s) const {
    bool found = false;
    for_each_symbol([&](const Symbol& t) { found = found || t == s; });
    return found;
  }

  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.op() <=> b.op(); c != 0) return c;
    if (auto c = a.symbol() <=> b.symbol(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.args().begin(), a.args().end(),
                                                  b.args().begin(), b.args().end());
  }
  friend bool operator==(const Concept& a, const Concept& b) { return (a <=> b) == 0; }

 private:
  struct Node {
    Op op;
    Symbol symbol;
    std::vector<Concept> args;
  };

  explicit Concept(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Concept make_nary(Op op, std::vector<Concept> operands) {
    std::vector<Concept> flat;
    flat.reserve(operands.size());
    for (auto& c : operands) {
      if (c.op() == op) {
        flat.insert(flat.end(), c.args().begin(), c.args().end());
      } else {
        flat.push_back(std::move(c));
      }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) return op == Op::And ? top() : bot();
    if (flat.size() == 1) return flat.front();
    return Concept(std::make_shared<Node>(Node{op, {}, std::move(flat)}));
  }

  std::shared_ptr<const Node> node_;
};

inline Concept operator!(const Concept& c) { return Concept::negation(c); }
inline Concept operator&(const Concept& a, const Concept& b) {
  return Concept::conjunction({a, b});
}
inline Concept operator|(const Concept& a, const Concept& b) {
  return Concept::disjunction({a, b});
}

inline Concept atom(std::string name, unsigned prime = 0) {
  return Concept::atom(concept_name(std::move(name), prime));
}

/// Renders in the ontology text format. N-ary operators are written as
/// right-nested binary ones so the output stays inside the grammar.
inline std::string render(const Concept& c) {
  using Op = Concept::Op;
  switch (c.op()) {
    case Op::Top:
      return "Top";
    case Op::Bot:
      return "Bot";
    case Op::Atom:
      return c.symbol().render();
    case Op::Not:
      return "!" + render(c.arg());
    case Op::Exists:
      return "exists " + c.symbol().render() + "." + render(c.arg());
    case Op::And:
    case Op::Or: {
      const std::string sep = c.is(Op::And) ? " & " : " | ";
      auto args = c.args();
      std::string out = render(args.back());
      for (auto i = args.size() - 1; i-- > 0;) {
        out = "(" + render(args[i]) + sep + out + ")";
      }
      return out;
    }
  }
  return "?";
}

}  // namespace reinterp

#endif  // REINTERP_CONCEPT_HPP

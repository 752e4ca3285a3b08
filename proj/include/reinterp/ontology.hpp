#ifndef REINTERP_ONTOLOGY_HPP
#define REINTERP_ONTOLOGY_HPP

#include <string>

#include "reinterp/axiom.hpp"

namespace reinterp {

/// Axiom set together with its public and internal vocabularies.
struct Ontology {
  AxiomSet axioms;
  SymbolSet public_vocab;
  SymbolSet internal_vocab;

  /// Builds an ontology whose vocabularies are exactly the symbols used,
  /// split by prime level, plus any extra public symbols.
  static Ontology from_axioms(AxiomSet axioms, const SymbolSet& extra_public = {}) {
    Ontology o;
    o.axioms = std::move(axioms);
    o.public_vocab = extra_public;
    for (const auto& s : signature(o.axioms)) {
      (s.is_public() ? o.public_vocab : o.internal_vocab).insert(s);
    }
    o.validate();
    return o;
  }

  SymbolSet vocabulary() const {
    SymbolSet all = public_vocab;
    all.insert(internal_vocab.begin(), internal_vocab.end());
    return all;
  }

  void validate() const {
    for (const auto& s : public_vocab) {
      if (!s.is_public()) throw Error("internal symbol " + s.render() + " in public vocabulary");
      if (internal_vocab.count(s)) throw Error("symbol " + s.render() + " is both public and internal");
    }
    for (const auto& s : internal_vocab) {
      if (s.is_public()) throw Error("public symbol " + s.render() + " in internal vocabulary");
    }
    for (const auto& s : signature(axioms)) {
      if (!public_vocab.count(s) && !internal_vocab.count(s)) {
        throw Error("symbol " + s.render() + " is not declared in the ontology vocabulary");
      }
    }
  }

  friend bool operator==(const Ontology&, const Ontology&) = default;
};

/// Renders an ontology in the text format: axioms one per line in
/// canonical order.
inline std::string render(const Ontology& o, const std::string& name = "result") {
  std::string out = "ontology " + name + " {\n";
  if (!o.public_vocab.empty()) {
    out += "  public:";
    bool first = true;
    for (const auto& s : o.public_vocab) {
      out += first ? " " : ", ";
      out += s.render();
      first = false;
    }
    out += ";\n";
  }
  for (const auto& ax : o.axioms) out += "  " + render(ax) + "\n";
  out += "}\n";
  return out;
}

}  // namespace reinterp

#endif  // REINTERP_ONTOLOGY_HPP

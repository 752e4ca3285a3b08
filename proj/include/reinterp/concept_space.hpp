#ifndef REINTERP_CONCEPT_SPACE_HPP
#define REINTERP_CONCEPT_SPACE_HPP

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "reinterp/ontology.hpp"
#include "reinterp/reasoner.hpp"

namespace reinterp {

using ConceptSet = std::set<Concept>;

/// Finite slice of the concept language over a signature.
///
/// Level 0 holds ⊤, ⊥, every atom and its negation. Each further level first
/// adds ∃R.C for every role R and every C built so far, then the pairwise
/// conjunctions and disjunctions of everything built so far. One level thus
/// reaches forms such as A ⊓ ∃R.B.
inline ConceptSet concept_space(const SymbolSet& signature, unsigned depth) {
  ConceptSet space{Concept::top(), Concept::bot()};
  for (const auto& s : signature) {
    if (s.kind != SymbolKind::Concept) continue;
    const Concept a = Concept::atom(s);
    space.insert(a);
    space.insert(!a);
  }
  for (unsigned level = 0; level < depth; ++level) {
    const std::vector<Concept> prev(space.begin(), space.end());
    for (const auto& r : signature) {
      if (r.kind != SymbolKind::Role) continue;
      for (const auto& c : prev) space.insert(Concept::exists(r, c));
    }
    const std::vector<Concept> mid(space.begin(), space.end());
    for (std::size_t i = 0; i < mid.size(); ++i) {
      for (std::size_t j = i + 1; j < mid.size(); ++j) {
        space.insert(mid[i] & mid[j]);
        space.insert(mid[i] | mid[j]);
      }
    }
  }
  return space;
}

inline ConceptSet concept_space(const Ontology& o, unsigned depth) {
  return concept_space(o.vocabulary(), depth);
}

/// Hasse diagram of the entailed subsumption order, after collapsing
/// equivalent concepts. Each class is represented by its canonically
/// smallest member.
struct SubsumptionLattice {
  std::map<Concept, ConceptSet> classes;            // representative -> members
  std::set<std::pair<Concept, Concept>> edges;      // (lower, upper) covering pairs
};

inline SubsumptionLattice subsumption_lattice(const AxiomSet& axioms, const ConceptSet& concepts) {
  const std::vector<Concept> cs(concepts.begin(), concepts.end());
  const std::size_t n = cs.size();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = i == j || subsumes(axioms, cs[i], cs[j]);

  std::vector<std::size_t> rep(n);
  for (std::size_t i = 0; i < n; ++i) {
    rep[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (leq[i][j] && leq[j][i]) {
        rep[i] = rep[j];
        break;
      }
    }
  }

  SubsumptionLattice out;
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    out.classes[cs[rep[i]]].insert(cs[i]);
    if (rep[i] == i) reps.push_back(i);
  }
  for (std::size_t u : reps) {
    for (std::size_t v : reps) {
      if (u == v || !leq[u][v]) continue;
      bool covered = true;
      for (std::size_t w : reps) {
        if (w != u && w != v && leq[u][w] && leq[w][v]) {
          covered = false;
          break;
        }
      }
      if (covered) out.edges.emplace(cs[u], cs[v]);
    }
  }
  return out;
}

}  // namespace reinterp

#endif  // REINTERP_CONCEPT_SPACE_HPP

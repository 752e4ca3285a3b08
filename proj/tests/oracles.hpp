// Independent reference procedures used to freeze and cross-check expected
// values. Nothing here calls into the tableau.
#ifndef REINTERP_TESTS_ORACLES_HPP
#define REINTERP_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "printers.hpp"
#include "reinterp/axiom.hpp"
#include "reinterp/substitution.hpp"

namespace oracle {

using namespace reinterp;

/// A finite interpretation over the domain {0, ..., size-1}.
struct Interpretation {
  int size = 1;
  std::map<Symbol, std::vector<bool>> concepts;
  std::map<Symbol, std::vector<std::vector<bool>>> roles;
  std::map<Symbol, int> individuals;

  bool in(const Concept& c, int x) const {
    using Op = Concept::Op;
    switch (c.op()) {
      case Op::Top:
        return true;
      case Op::Bot:
        return false;
      case Op::Atom: {
        auto it = concepts.find(c.symbol());
        return it != concepts.end() && it->second[x];
      }
      case Op::Not:
        return !in(c.arg(), x);
      case Op::And:
        for (const auto& a : c.args())
          if (!in(a, x)) return false;
        return true;
      case Op::Or:
        for (const auto& a : c.args())
          if (in(a, x)) return true;
        return false;
      case Op::Exists: {
        auto it = roles.find(c.symbol());
        if (it == roles.end()) return false;
        for (int y = 0; y < size; ++y)
          if (it->second[x][y] && in(c.arg(), y)) return true;
        return false;
      }
    }
    return false;
  }

  bool edge(const Symbol& r, int x, int y) const {
    auto it = roles.find(r);
    return it != roles.end() && it->second[x][y];
  }

  bool satisfies(const Literal& l) const {
    if (const auto* ca = std::get_if<ConceptAssertion>(&l))
      return in(ca->description, individuals.at(ca->individual));
    const auto& ra = std::get<RoleAssertion>(l);
    return edge(ra.role, individuals.at(ra.subject), individuals.at(ra.object)) == ra.positive;
  }

  bool satisfies(const Axiom& ax) const {
    if (const auto* s = std::get_if<Subsumption>(&ax)) {
      for (int x = 0; x < size; ++x)
        if (in(s->sub, x) && !in(s->super, x)) return false;
      return true;
    }
    if (const auto* r = std::get_if<RoleInclusion>(&ax)) {
      for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y)
          if (edge(r->sub, x, y) && !edge(r->super, x, y)) return false;
      return true;
    }
    if (const auto* ca = std::get_if<ConceptAssertion>(&ax)) return satisfies(Literal{*ca});
    if (const auto* ra = std::get_if<RoleAssertion>(&ax)) return satisfies(Literal{*ra});
    if (const auto* e = std::get_if<Equality>(&ax))
      return individuals.at(e->lhs) == individuals.at(e->rhs);
    if (const auto* e = std::get_if<Inequality>(&ax))
      return individuals.at(e->lhs) != individuals.at(e->rhs);
    const auto& cl = std::get<Clause>(ax);
    for (const auto& l : cl.literals)
      if (satisfies(l)) return true;
    return false;
  }
};

/// Calls `visit` on every interpretation of the signature with domain sizes
/// 1..max_size; stops early when `visit` returns true.
inline bool any_interpretation(const SymbolSet& sig, int max_size,
                               const std::function<bool(const Interpretation&)>& visit) {
  std::vector<Symbol> cs, rs, is;
  for (const auto& s : sig) {
    if (s.kind == SymbolKind::Concept) cs.push_back(s);
    if (s.kind == SymbolKind::Role) rs.push_back(s);
    if (s.kind == SymbolKind::Individual) is.push_back(s);
  }
  for (int n = 1; n <= max_size; ++n) {
    const int bits = n * static_cast<int>(cs.size()) + n * n * static_cast<int>(rs.size());
    std::uint64_t ind_maps = 1;
    for (std::size_t i = 0; i < is.size(); ++i) ind_maps *= n;
    for (std::uint64_t im = 0; im < ind_maps; ++im) {
      Interpretation I;
      I.size = n;
      std::uint64_t code = im;
      for (const auto& a : is) {
        I.individuals[a] = static_cast<int>(code % n);
        code /= n;
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        int bit = 0;
        for (const auto& c : cs) {
          auto& ext = I.concepts[c];
          ext.assign(n, false);
          for (int x = 0; x < n; ++x) ext[x] = (mask >> bit++) & 1U;
        }
        for (const auto& r : rs) {
          auto& ext = I.roles[r];
          ext.assign(n, std::vector<bool>(n, false));
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) ext[x][y] = (mask >> bit++) & 1U;
        }
        if (visit(I)) return true;
      }
    }
  }
  return false;
}

/// Brute-force satisfiability over domains of size <= max_size. Complete
/// for ∃-free inputs whose individuals number at most max_size.
inline bool has_small_model(const AxiomSet& axioms, int max_size = 3) {
  return any_interpretation(signature(axioms), max_size, [&](const Interpretation& I) {
    for (const auto& ax : axioms)
      if (!I.satisfies(ax)) return false;
    return true;
  });
}

/// Maximal subsets of `candidates` consistent with `base`, by scanning the
/// whole powerset.
template <class Consistent>
std::set<AxiomSet> powerset_remainders(const AxiomSet& candidates, const AxiomSet& base,
                                       Consistent&& consistent) {
  const std::vector<Axiom> items(candidates.begin(), candidates.end());
  const std::size_t n = items.size();
  std::vector<char> ok(std::size_t{1} << n, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    AxiomSet x = base;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) x.insert(items[i]);
    ok[mask] = consistent(x);
  }
  std::set<AxiomSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!ok[mask]) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i)
      if (!((mask >> i) & 1U) && ok[mask | (std::uint64_t{1} << i)]) maximal = false;
    if (!maximal) continue;
    AxiomSet x;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) x.insert(items[i]);
    out.insert(x);
  }
  return out;
}

/// Inclusion-minimal shared symbol sets whose priming makes O1 and O2
/// jointly consistent, by scanning every subset of the shared pool.
template <class Consistent>
std::set<SymbolSet> powerset_mcs(const AxiomSet& o1, const AxiomSet& o2, bool individuals, Consistent&& consistent) {
  std::vector<Symbol> pool;
  const SymbolSet v2 = signature(o2);
  for (const auto& s : signature(o1))
    if (v2.count(s) && (individuals || s.kind != SymbolKind::Individual)) pool.push_back(s);
  std::vector<SymbolSet> ok;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
    std::map<Symbol, Symbol> m;
    SymbolSet s;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if ((mask >> i) & 1U) {
        s.insert(pool[i]);
        m.emplace(pool[i], pool[i].primed(1));
      }
    AxiomSet joint = apply_substitution(o1, Substitution(m));
    joint.insert(o2.begin(), o2.end());
    if (consistent(joint)) ok.push_back(s);
  }
  std::set<SymbolSet> out;
  for (const auto& s : ok) {
    bool minimal = true;
    for (const auto& t : ok)
      if (t != s && std::includes(s.begin(), s.end(), t.begin(), t.end())) minimal = false;
    if (minimal) out.insert(s);
  }
  return out;
}

}  // namespace oracle

#endif  // REINTERP_TESTS_ORACLES_HPP

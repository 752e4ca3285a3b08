#ifndef REINTERP_SELECTION_HPP
#define REINTERP_SELECTION_HPP

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reinterp/conflict.hpp"

namespace reinterp {

/// Picks among remainder candidates. `pool` is the bridging set the
/// candidates were carved from.
using BridgingChoice = std::function<AxiomFamily(const AxiomFamily& family, const AxiomSet& pool)>;
/// Picks among minimal conflicting symbol sets.
using SymbolChoice = std::function<std::vector<SymbolSet>(const std::vector<SymbolSet>& family)>;
/// Picks auxiliary axioms; an empty pick is allowed.
using AuxiliaryChoice = std::function<AxiomSet(const AxiomSet& candidates)>;

/// Ranks a bridging pool, best first, for selections that always keep the
/// remainder winning the first membership difference in rank order.
using BridgingRanking = std::function<std::vector<Axiom>(const AxiomSet& pool)>;

/// A bundle of the selection functions the operators consult. With a
/// ranking the operators grow the chosen remainder directly instead of
/// enumerating the whole family.
struct SelectionStrategy {
  std::string name;
  BridgingChoice bridging;
  SymbolChoice symbols;
  AuxiliaryChoice auxiliary;
  BridgingRanking ranking = {};
};

namespace detail {

inline std::vector<SymbolSet> first_symbol_set(const std::vector<SymbolSet>& family) {
  if (family.empty()) return {};
  return {family.front()};
}

inline AxiomSet choose_all(const AxiomSet& x) { return x; }

// Largest member first, then the canonically smallest among equals.
inline AxiomFamily canonical_pick(const AxiomFamily& family) {
  if (family.empty()) return {};
  const auto best = std::min_element(family.begin(), family.end(), [](const AxiomSet& x, const AxiomSet& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  });
  return {*best};
}

inline bool contains_all(const AxiomSet& x, const AxiomSet& needed) {
  return std::includes(x.begin(), x.end(), needed.begin(), needed.end());
}

}  // namespace detail

/// Deterministic default: the largest candidate, ties broken canonically.
inline SelectionStrategy canonical_selection() {
  return {"canonical", [](const AxiomFamily& f, const AxiomSet&) { return detail::canonical_pick(f); },
          detail::first_symbol_set, detail::choose_all};
}

/// Selection keeping the candidate that wins the first membership
/// difference in the order given by `ranking`.
inline SelectionStrategy ranked_selection(BridgingRanking ranking, std::string name) {
  auto choose = [ranking](const AxiomFamily& family, const AxiomSet& pool) -> AxiomFamily {
    std::vector<const AxiomSet*> alive;
    for (const auto& x : family) alive.push_back(&x);
    for (const auto& ax : ranking(pool)) {
      if (alive.size() <= 1) break;
      std::vector<const AxiomSet*> with;
      for (const auto* x : alive)
        if (x->count(ax)) with.push_back(x);
      if (!with.empty()) alive = std::move(with);
    }
    if (alive.empty()) return {};
    return {*alive.front()};
  };
  return {std::move(name), choose, detail::first_symbol_set, detail::choose_all, std::move(ranking)};
}

/// Maximum-based selection. Axioms earlier in `priority` weigh more; the
/// rest follow in canonical order below all listed ones.
inline SelectionStrategy max_based_selection(std::vector<Axiom> priority, std::string name = "max-based") {
  auto ranking = [priority = std::move(priority)](const AxiomSet& pool) {
    std::vector<Axiom> order;
    for (const auto& ax : priority)
      if (pool.count(ax) && std::find(order.begin(), order.end(), ax) == order.end()) order.push_back(ax);
    for (const auto& ax : pool)
      if (std::find(order.begin(), order.end(), ax) == order.end()) order.push_back(ax);
    return order;
  };
  return ranked_selection(std::move(ranking), std::move(name));
}

/// Maximum-based selection ranking identities a ≐ a' first, then the
/// rest canonically. It meets the γ^CR condition without needing the whole
/// remainder family.
inline SelectionStrategy identities_first_selection() {
  return ranked_selection(
      [](const AxiomSet& pool) {
        std::vector<Axiom> order;
        for (const auto& ax : pool)
          if (std::holds_alternative<Equality>(ax)) order.push_back(ax);
        for (const auto& ax : pool)
          if (!std::holds_alternative<Equality>(ax)) order.push_back(ax);
        return order;
      },
      "identities-first");
}

/// γ^CR: keeps only candidates holding every identity a ≐ a' of the pool,
/// when there are any, then picks canonically.
inline SelectionStrategy gamma_cr() {
  auto choose = [](const AxiomFamily& family, const AxiomSet& pool) {
    AxiomSet identities;
    for (const auto& ax : pool)
      if (std::holds_alternative<Equality>(ax)) identities.insert(ax);
    AxiomFamily keep;
    for (const auto& x : family)
      if (detail::contains_all(x, identities)) keep.push_back(x);
    return detail::canonical_pick(keep.empty() ? family : keep);
  };
  return {"gamma-cr", choose, detail::first_symbol_set, detail::choose_all};
}

/// Fixed answers for specific candidate families, canonical elsewhere.
inline SelectionStrategy scripted_selection(std::map<AxiomFamily, AxiomFamily> script,
                                            std::string name = "scripted") {
  auto choose = [script = std::move(script)](const AxiomFamily& family, const AxiomSet&) {
    auto it = script.find(family);
    return it == script.end() ? detail::canonical_pick(family) : it->second;
  };
  return {std::move(name), choose, detail::first_symbol_set, detail::choose_all};
}

/// Returns `base` with a different auxiliary-axiom rule.
inline SelectionStrategy with_auxiliary(SelectionStrategy base, AuxiliaryChoice choice, std::string suffix) {
  base.auxiliary = std::move(choice);
  base.name += "+" + suffix;
  return base;
}

inline AuxiliaryChoice choose_no_auxiliary() {
  return [](const AxiomSet&) { return AxiomSet{}; };
}
inline AuxiliaryChoice choose_all_auxiliary() { return detail::choose_all; }
/// Keeps exactly the candidates that also occur in `wanted`.
inline AuxiliaryChoice choose_auxiliary_from(AxiomSet wanted) {
  return [wanted = std::move(wanted)](const AxiomSet& x) {
    AxiomSet out;
    std::set_intersection(x.begin(), x.end(), wanted.begin(), wanted.end(), std::inserter(out, out.end()));
    return out;
  };
}

}  // namespace reinterp

#endif  // REINTERP_SELECTION_HPP

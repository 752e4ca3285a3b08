#ifndef REINTERP_MSC_HPP
#define REINTERP_MSC_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "reinterp/concept_space.hpp"
#include "reinterp/reasoner.hpp"

namespace reinterp {

struct MscOptions {
  /// Upper bound on entailment checks for a single msc computation.
  std::size_t max_checks = 200000;
};

namespace detail {

class MscBuilder {
 public:
  MscBuilder(const AxiomSet& axioms, MscOptions options)
      : axioms_(axioms), options_(options), sig_(signature(axioms)) {}

  std::optional<Concept> run(const Symbol& b, unsigned depth) {
    auto core = literal_core(b, depth);
    if (!core) return std::nullopt;
    Concept m = *core;
    // Close the gap to the concept space at this depth.
    for (const auto& c : concept_space(sig_, depth)) {
      if (!check(Axiom{concept_assertion(c, b)})) continue;
      if (exhausted_) return std::nullopt;
      if (!check(subsumption(m, c))) m = m & c;
      if (exhausted_) return std::nullopt;
    }
    return m;
  }

 private:
  bool check(const Axiom& goal) {
    if (++checks_ > options_.max_checks) {
      exhausted_ = true;
      return false;
    }
    return entails(axioms_, goal);
  }

  std::optional<Concept> literal_core(const Symbol& b, unsigned depth) {
    std::vector<Concept> conjuncts;
    for (const auto& s : sig_) {
      if (s.kind != SymbolKind::Concept) continue;
      const Concept a = Concept::atom(s);
      if (check(Axiom{concept_assertion(a, b)})) {
        conjuncts.push_back(a);
      } else if (check(Axiom{concept_assertion(!a, b)})) {
        conjuncts.push_back(!a);
      }
    }
    if (depth > 0) {
      for (const auto& r : sig_) {
        if (r.kind != SymbolKind::Role) continue;
        for (const auto& c : sig_) {
          if (c.kind != SymbolKind::Individual) continue;
          if (!check(Axiom{role_assertion(r, b, c)})) continue;
          auto filler = literal_core(c, depth - 1);
          if (!filler) return std::nullopt;
          conjuncts.push_back(Concept::exists(r, *filler));
        }
      }
    }
    if (exhausted_) return std::nullopt;
    return Concept::conjunction(std::move(conjuncts));
  }

  const AxiomSet& axioms_;
  MscOptions options_;
  SymbolSet sig_;
  std::size_t checks_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

/// Depth-bounded most specific concept of `b`.
///
/// The result conjoins every entailed literal over the signature and, while
/// depth remains, ∃R.msc(c) for every entailed edge R(b, c). Any concept of
/// the same depth that is entailed for `b` but not yet implied is then
/// conjoined, so the result is the ⊑-least entailed member relative to
/// concept_space(signature, depth). Returns nullopt when the check budget
/// runs out.
inline std::optional<Concept> msc(const AxiomSet& axioms, const Symbol& b, unsigned depth,
                                  MscOptions options = {}) {
  require_kind(b, SymbolKind::Individual);
  if (!is_consistent(axioms)) throw Error("msc undefined on inconsistent ontology");
  return detail::MscBuilder(axioms, options).run(b, depth);
}

}  // namespace reinterp

#endif  // REINTERP_MSC_HPP

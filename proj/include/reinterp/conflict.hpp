#ifndef REINTERP_CONFLICT_HPP
#define REINTERP_CONFLICT_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "reinterp/reasoner.hpp"
#include "reinterp/substitution.hpp"

namespace reinterp {

/// Orders families by cardinality first, then lexicographically.
struct BySizeThenValue {
  template <class Set>
  bool operator()(const Set& x, const Set& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

struct McsOptions {
  /// Whether individual constants may be reinterpreted.
  bool reinterpret_individuals = true;
  /// Largest shared pool the subset search accepts.
  std::size_t max_pool = 16;
};

struct McsResult {
  std::vector<SymbolSet> families;  // sorted by (size, value)
  bool resolvable = false;
};

/// Inclusion-minimal S with O1·σ_S ∪ O2 consistent, where σ_S internalizes S.
inline McsResult mcs(const AxiomSet& o1, const AxiomSet& o2, McsOptions options = {}) {
  if (!is_consistent(o1) || !is_consistent(o2)) throw Error("input ontology inconsistent");
  const SymbolSet v1 = signature(o1), v2 = signature(o2);
  std::vector<Symbol> pool;
  for (const auto& s : v1) {
    if (!v2.count(s)) continue;
    if (s.kind == SymbolKind::Individual && !options.reinterpret_individuals) continue;
    pool.push_back(s);
  }
  if (pool.size() > options.max_pool) throw Error("search budget exceeded");

  McsResult result;
  std::vector<std::uint64_t> found;  // masks of solutions
  const std::size_t n = pool.size();
  for (std::size_t k = 0; k <= n; ++k) {
    // Walk every mask of popcount k in increasing order.
    std::vector<std::uint64_t> level;
    if (k == 0) {
      level.push_back(0);
    } else {
      std::uint64_t mask = (std::uint64_t{1} << k) - 1;
      while (mask < (std::uint64_t{1} << n)) {
        level.push_back(mask);
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
      }
    }
    for (std::uint64_t mask : level) {
      if (std::any_of(found.begin(), found.end(), [&](std::uint64_t f) { return (mask & f) == f; })) continue;
      SymbolSet s;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U) s.insert(pool[i]);
      AxiomSet joint = apply_substitution(o1, internalization(s, v1));
      joint.insert(o2.begin(), o2.end());
      if (is_consistent(joint)) {
        found.push_back(mask);
        result.families.push_back(std::move(s));
      }
    }
    if (k == 0 && !found.empty()) break;  // no conflict at all
  }
  std::sort(result.families.begin(), result.families.end(), BySizeThenValue{});
  result.resolvable = !result.families.empty();
  return result;
}

using AxiomFamily = std::vector<AxiomSet>;  // sorted by (size, value)

namespace detail {

// Enumerates maximal consistent subsets by forcing members in. A node is a
// consistent forced set F. When no known remainder contains F, F is grown
// greedily into a new one; otherwise any remainder other than the known
// R ⊇ F must add some axiom outside R, so the node branches on those.
class RemainderSearch {
 public:
  using Mask = std::vector<bool>;

  RemainderSearch(const AxiomSet& candidates, const AxiomSet& base, std::size_t limit)
      : base_(base), limit_(limit) {
    for (const auto& ax : candidates) {
      AxiomSet x = base;
      x.insert(ax);
      if (!is_consistent(x)) continue;  // self-clashing axioms are in no remainder
      // Axioms the base already entails can join any consistent set.
      if (entails(base, ax)) {
        free_.insert(ax);
      } else {
        items_.push_back(ax);
      }
    }
  }

  AxiomFamily run() {
    visit(Mask(items_.size(), false));
    AxiomFamily out;
    for (const Mask& r : found_) {
      AxiomSet x = free_;
      for (std::size_t i = 0; i < items_.size(); ++i)
        if (r[i]) x.insert(items_[i]);
      out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end(), BySizeThenValue{});
    return out;
  }

 private:
  static bool subset(const Mask& x, const Mask& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] && !y[i]) return false;
    return true;
  }

  void visit(const Mask& forced) {
    if (!seen_.insert(forced).second) return;
    const Mask* cover = nullptr;
    for (const auto& r : found_) {
      if (subset(forced, r)) {
        cover = &r;
        break;
      }
    }
    if (!cover) {
      if (found_.size() == limit_) throw Error("search budget exceeded");
      found_.push_back(grow(forced));
      cover = &found_.back();
    }
    const Mask outside = [&] {
      Mask m = *cover;
      m.flip();
      return m;
    }();
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (!outside[i]) continue;
      Mask child = forced;
      child[i] = true;
      if (consistent(child)) visit(child);
    }
  }

  Mask grow(Mask mask) {
    if (const Mask all(mask.size(), true); consistent(all)) return all;
    constexpr std::size_t block = 32;
    for (std::size_t lo = 0; lo < mask.size(); lo += block) grow_block(mask, lo, std::min(mask.size(), lo + block));
    return mask;
  }

  // Adds order[lo, hi) greedily, a whole consistent block at a time.
  void grow_block(Mask& mask, std::size_t lo, std::size_t hi) {
    Mask trial = mask;
    bool added = false;
    for (std::size_t i = lo; i < hi; ++i) {
      added = added || !trial[i];
      trial[i] = true;
    }
    if (!added) return;
    if (consistent(trial)) {
      mask = std::move(trial);
      return;
    }
    if (hi - lo == 1) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    grow_block(mask, lo, mid);
    grow_block(mask, mid, hi);
  }

  bool consistent(const Mask& mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    AxiomSet x = base_;
    for (std::size_t i = 0; i < items_.size(); ++i)
      if (mask[i]) x.insert(items_[i]);
    const bool ok = is_consistent(x);
    memo_.emplace(mask, ok);
    return ok;
  }

  std::vector<Axiom> items_;
  AxiomSet free_;
  const AxiomSet& base_;
  std::size_t limit_;
  std::deque<Mask> found_;
  std::set<Mask> seen_;
  std::unordered_map<Mask, bool> memo_;
};

}  // namespace detail

/// Inclusion-maximal subsets of `candidates` consistent with `base`.
/// Empty when `base` itself is inconsistent. More than `limit` members
/// raise "search budget exceeded".
inline AxiomFamily dual_remainders(const AxiomSet& candidates, const AxiomSet& base,
                                   std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  if (!is_consistent(base)) return {};
  return detail::RemainderSearch(candidates, base, limit).run();
}

/// The remainder that wins every membership comparison in `order`: each
/// axiom is kept when it is consistent with `base` and the axioms kept
/// before it. `order` should list every candidate once.
namespace detail {

// Greedy pass over order[lo, hi): a consistent block is kept whole,
// otherwise its halves are tried in turn. Same result as one at a time.
inline void greedy_block(const std::vector<Axiom>& order, std::size_t lo, std::size_t hi, AxiomSet& joint,
                         AxiomSet& kept) {
  AxiomSet trial = joint;
  for (std::size_t i = lo; i < hi; ++i) trial.insert(order[i]);
  if (trial.size() == joint.size() || is_consistent(trial)) {
    for (std::size_t i = lo; i < hi; ++i) kept.insert(order[i]);
    joint = std::move(trial);
    return;
  }
  if (hi - lo == 1) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  greedy_block(order, lo, mid, joint, kept);
  greedy_block(order, mid, hi, joint, kept);
}

}  // namespace detail

inline AxiomSet greedy_remainder(const std::vector<Axiom>& order, const AxiomSet& base) {
  if (!is_consistent(base)) throw Error("trigger inconsistent");
  constexpr std::size_t block = 32;
  AxiomSet kept, joint = base;
  for (std::size_t lo = 0; lo < order.size(); lo += block)
    detail::greedy_block(order, lo, std::min(order.size(), lo + block), joint, kept);
  return kept;
}

}  // namespace reinterp

#endif  // REINTERP_CONFLICT_HPP

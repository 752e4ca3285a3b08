#ifndef REINTERP_REASONER_HPP
#define REINTERP_REASONER_HPP

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "reinterp/axiom.hpp"

namespace reinterp {

namespace detail {

/// Hash-consed negation normal form. Entries are created while the problem
/// is built; the search itself never interns.
class NnfTable {
 public:
  enum class Op : unsigned char { Top, Bot, Atom, NegAtom, And, Or, Exists, Forall };

  struct Entry {
    Op op;
    int sym;  // atom id for Atom/NegAtom, role id for Exists/Forall
    std::vector<int> args;
  };

  int atom_id(const Symbol& s) { return lookup(atoms_, s); }
  int role_id(const Symbol& s) { return lookup(roles_, s); }
  int atom_count() const { return static_cast<int>(atoms_.size()); }
  int role_count() const { return static_cast<int>(roles_.size()); }

  int nnf(const Concept& c, bool negated) {
    using COp = Concept::Op;
    switch (c.op()) {
      case COp::Top:
        return intern(negated ? Op::Bot : Op::Top, -1, {});
      case COp::Bot:
        return intern(negated ? Op::Top : Op::Bot, -1, {});
      case COp::Atom:
        return intern(negated ? Op::NegAtom : Op::Atom, atom_id(c.symbol()), {});
      case COp::Not:
        return nnf(c.arg(), !negated);
      case COp::And:
      case COp::Or: {
        std::vector<int> args;
        for (const auto& a : c.args()) args.push_back(nnf(a, negated));
        const bool conj = c.is(COp::And) != negated;
        return intern(conj ? Op::And : Op::Or, -1, std::move(args));
      }
      case COp::Exists:
        return intern(negated ? Op::Forall : Op::Exists, role_id(c.symbol()),
                      {nnf(c.arg(), negated)});
    }
    return -1;
  }

  int intern(Op op, int sym, std::vector<int> args) {
    if (op == Op::And || op == Op::Or) {
      std::sort(args.begin(), args.end());
      args.erase(std::unique(args.begin(), args.end()), args.end());
      if (args.size() == 1) return args.front();
    }
    auto key = std::make_tuple(op, sym, args);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    const int id = static_cast<int>(entries_.size());
    entries_.push_back(Entry{op, sym, std::move(args)});
    index_.emplace(std::move(key), id);
    if (op == Op::Atom || op == Op::NegAtom) {
      auto& slot = op == Op::Atom ? pos_atom_ : neg_atom_;
      if (static_cast<int>(slot.size()) <= sym) slot.resize(sym + 1, -1);
      slot[sym] = id;
    }
    return id;
  }

  const Entry& operator[](int id) const { return entries_[id]; }
  int size() const { return static_cast<int>(entries_.size()); }

  /// Id of the complementary literal if it has been interned, else -1.
  int complement(int id) const {
    const Entry& e = entries_[id];
    const auto& slot = e.op == Op::Atom ? neg_atom_ : pos_atom_;
    if (e.op != Op::Atom && e.op != Op::NegAtom) return -1;
    return e.sym < static_cast<int>(slot.size()) ? slot[e.sym] : -1;
  }

  int atom_literal(int atom) const {
    return atom < static_cast<int>(pos_atom_.size()) ? pos_atom_[atom] : -1;
  }

 private:
  static int lookup(std::map<Symbol, int>& m, const Symbol& s) {
    auto [it, inserted] = m.emplace(s, static_cast<int>(m.size()));
    return it->second;
  }

  std::map<Symbol, int> atoms_;
  std::map<Symbol, int> roles_;
  std::vector<Entry> entries_;
  std::map<std::tuple<Op, int, std::vector<int>>, int> index_;
  std::vector<int> pos_atom_;
  std::vector<int> neg_atom_;
};

/// Completion-graph search for ALC with role hierarchies, a static
/// equality relation between named individuals, negative role assertions
/// and boolean ABox clauses.
class Tableau {
 public:
  struct LiteralRef {
    enum class Kind : unsigned char { Concept, PosRole, NegRole } kind;
    int subject;
    int value;  // concept id or role id
    int object;
  };

  NnfTable table;
  std::vector<int> universal;                // concepts added to every node
  std::vector<std::vector<int>> unfold;      // atom id -> consequences
  std::vector<std::vector<char>> subrole;    // subrole[r][s]: r ⊑* s
  std::vector<std::vector<LiteralRef>> clauses;
  std::vector<std::pair<int, int>> concept_asserts;  // (node, concept)
  std::vector<LiteralRef> role_asserts;
  int named = 0;
  bool trivially_inconsistent = false;

  bool satisfiable() {
    if (trivially_inconsistent) return false;
    State s;
    s.nodes.resize(std::max(named, 1));
    for (auto& n : s.nodes) n.bits.assign(words(), 0);
    for (int x = 0; x < static_cast<int>(s.nodes.size()); ++x)
      for (int c : universal) add_concept(s, x, c, {});
    for (auto [x, c] : concept_asserts) add_concept(s, x, c, {});
    for (const auto& r : role_asserts) add_literal(s, r, {});
    Deps clash;
    return search(s, clash);
  }

 private:
  using Op = NnfTable::Op;
  // Branch points a fact depends on. Points past the last bit are never
  // recorded; branching there simply tries every option.
  static constexpr int kTrackedPoints = 256;
  using Deps = std::bitset<kTrackedPoints>;

  static Deps join(const Deps& a, const Deps& b) { return a | b; }

  struct Edge {
    int role;
    int target;
    Deps deps;
  };

  struct Node {
    std::vector<std::uint64_t> bits;
    std::vector<int> concepts;
    std::vector<Deps> deps;  // parallel to concepts
    std::vector<Edge> edges;
    int parent = -1;
    bool generated = false;
  };

  struct NegEdge {
    int subject, role, object;
    Deps deps;
  };

  struct Task {
    int node;
    int concept_id;
  };

  struct State {
    std::vector<Node> nodes;
    std::vector<NegEdge> neg_edges;
    std::vector<Task> todo;
    int branches = 0;
    bool clash = false;
    Deps clash_deps;
  };

  std::size_t words() const { return (static_cast<std::size_t>(table.size()) + 63) / 64; }

  static bool has(const Node& n, int c) { return (n.bits[c >> 6] >> (c & 63)) & 1U; }

  static const Deps& deps_of(const Node& n, int c) {
    const auto it = std::find(n.concepts.begin(), n.concepts.end(), c);
    return n.deps[static_cast<std::size_t>(it - n.concepts.begin())];
  }

  bool sub(int r, int s) const { return subrole[r][s] != 0; }

  static void raise(State& s, Deps deps) {
    if (s.clash) return;
    s.clash = true;
    s.clash_deps = std::move(deps);
  }

  void add_concept(State& s, int x, int c, const Deps& deps) {
    Node& n = s.nodes[x];
    if (has(n, c)) return;
    n.bits[c >> 6] |= std::uint64_t{1} << (c & 63);
    n.concepts.push_back(c);
    n.deps.push_back(deps);
    const auto& e = table[c];
    if (e.op == Op::Bot) raise(s, deps);
    if (int comp = table.complement(c); comp >= 0 && has(n, comp)) raise(s, join(deps, deps_of(n, comp)));
    s.todo.push_back({x, c});
  }

  void add_edge(State& s, int x, int r, int y, const Deps& deps) {
    s.nodes[x].edges.push_back({r, y, deps});
    // Index loop: with a self-loop (x == y) add_concept grows this vector.
    for (std::size_t i = 0; i < s.nodes[x].concepts.size(); ++i) {
      const int c = s.nodes[x].concepts[i];
      const auto& e = table[c];
      if (e.op == Op::Forall && sub(r, e.sym)) add_concept(s, y, e.args[0], join(deps, s.nodes[x].deps[i]));
    }
    for (const auto& ne : s.neg_edges)
      if (ne.subject == x && ne.object == y && sub(r, ne.role)) raise(s, join(deps, ne.deps));
  }

  void add_neg_edge(State& s, int x, int r, int y, const Deps& deps) {
    s.neg_edges.push_back({x, r, y, deps});
    for (const auto& e : s.nodes[x].edges)
      if (e.target == y && sub(e.role, r)) raise(s, join(deps, e.deps));
  }

  bool has_edge(const State& s, int x, int r, int y) const {
    for (const auto& e : s.nodes[x].edges)
      if (e.target == y && sub(e.role, r)) return true;
    return false;
  }

  bool has_neg_edge(const State& s, int x, int r, int y) const {
    for (const auto& ne : s.neg_edges)
      if (ne.subject == x && ne.role == r && ne.object == y) return true;
    return false;
  }

  void add_literal(State& s, const LiteralRef& l, const Deps& deps) {
    switch (l.kind) {
      case LiteralRef::Kind::Concept:
        add_concept(s, l.subject, l.value, deps);
        break;
      case LiteralRef::Kind::PosRole:
        if (!has_edge(s, l.subject, l.value, l.object)) add_edge(s, l.subject, l.value, l.object, deps);
        break;
      case LiteralRef::Kind::NegRole:
        if (!has_neg_edge(s, l.subject, l.value, l.object)) add_neg_edge(s, l.subject, l.value, l.object, deps);
        break;
    }
  }

  bool holds(const State& s, const LiteralRef& l) const {
    switch (l.kind) {
      case LiteralRef::Kind::Concept:
        return has(s.nodes[l.subject], l.value);
      case LiteralRef::Kind::PosRole:
        return has_edge(s, l.subject, l.value, l.object);
      case LiteralRef::Kind::NegRole:
        return has_neg_edge(s, l.subject, l.value, l.object);
    }
    return false;
  }

  /// Applies ⊓, ∀, and unfolding until nothing changes.
  bool propagate(State& s) {
    while (!s.todo.empty() && !s.clash) {
      const Task t = s.todo.back();
      s.todo.pop_back();
      const auto& e = table[t.concept_id];
      const Deps deps = deps_of(s.nodes[t.node], t.concept_id);
      switch (e.op) {
        case Op::And:
          for (int a : e.args) add_concept(s, t.node, a, deps);
          break;
        case Op::Atom:
          if (e.sym < static_cast<int>(unfold.size()))
            for (int d : unfold[e.sym]) add_concept(s, t.node, d, deps);
          break;
        case Op::Forall: {
          const auto edges = s.nodes[t.node].edges;
          for (const auto& edge : edges)
            if (sub(edge.role, e.sym)) add_concept(s, edge.target, e.args[0], join(deps, edge.deps));
          break;
        }
        default:
          break;
      }
    }
    return !s.clash;
  }

  std::vector<char> blocked(const State& s) const {
    const int n = static_cast<int>(s.nodes.size());
    std::vector<char> out(n, 0);
    for (int x = 0; x < n; ++x) {
      const Node& nx = s.nodes[x];
      if (!nx.generated) continue;
      if (out[nx.parent]) {
        out[x] = 1;
        continue;
      }
      for (int y = 0; y < x && !out[x]; ++y) {
        const Node& ny = s.nodes[y];
        if (!ny.generated || out[y]) continue;
        bool subset = true;
        for (std::size_t w = 0; w < nx.bits.size() && subset; ++w)
          subset = (nx.bits[w] & ~ny.bits[w]) == 0;
        if (subset) out[x] = 1;
      }
    }
    return out;
  }

  /// True when satisfiable; otherwise `clash` holds the branch points the
  /// failure depends on.
  bool search(State& s, Deps& clash) {
    while (true) {
      if (!propagate(s)) {
        clash = s.clash_deps;
        return false;
      }

      // ⊔-rule
      for (int x = 0; x < static_cast<int>(s.nodes.size()); ++x) {
        const Node& n = s.nodes[x];
        for (std::size_t i = 0; i < n.concepts.size(); ++i) {
          const auto& e = table[n.concepts[i]];
          if (e.op != Op::Or) continue;
          bool done = false;
          for (int a : e.args) done = done || has(n, a);
          if (done) continue;
          std::vector<LiteralRef> options;
          for (int a : e.args) options.push_back({LiteralRef::Kind::Concept, x, a, -1});
          const Deps base = n.deps[i];
          return branch(s, options, base, clash);
        }
      }

      // clause rule
      for (const auto& cl : clauses) {
        bool done = false;
        for (const auto& l : cl) done = done || holds(s, l);
        if (!done) return branch(s, cl, {}, clash);
      }

      // ∃-rule
      const auto blk = blocked(s);
      bool expanded = false;
      for (int x = 0; x < static_cast<int>(s.nodes.size()) && !expanded; ++x) {
        if (blk[x]) continue;
        for (std::size_t i = 0; i < s.nodes[x].concepts.size(); ++i) {
          const int c = s.nodes[x].concepts[i];
          const auto& e = table[c];
          if (e.op != Op::Exists) continue;
          bool witnessed = false;
          for (const auto& edge : s.nodes[x].edges)
            witnessed = witnessed || (sub(edge.role, e.sym) && has(s.nodes[edge.target], e.args[0]));
          if (witnessed) continue;
          const Deps deps = s.nodes[x].deps[i];
          const int y = static_cast<int>(s.nodes.size());
          Node fresh;
          fresh.bits.assign(words(), 0);
          fresh.parent = x;
          fresh.generated = true;
          s.nodes.push_back(std::move(fresh));
          add_concept(s, y, e.args[0], deps);
          for (int u : universal) add_concept(s, y, u, deps);
          add_edge(s, x, e.sym, y, deps);
          expanded = true;
          break;
        }
      }
      if (!expanded) return true;
    }
  }

  // Tries each option under a new branch point. A failure that does not
  // depend on the branch point is returned at once: the other options
  // would fail the same way.
  bool branch(State& s, const std::vector<LiteralRef>& options, const Deps& base, Deps& clash) {
    const int point = s.branches++;
    const bool tracked = point < kTrackedPoints;
    Deps with_point = base;
    if (tracked) with_point.set(static_cast<std::size_t>(point));
    Deps failed;
    for (std::size_t i = 0; i < options.size(); ++i) {
      Deps why;
      bool ok;
      if (i + 1 == options.size()) {
        add_literal(s, options[i], with_point);
        ok = search(s, why);
      } else {
        State t = s;
        add_literal(t, options[i], with_point);
        ok = search(t, why);
      }
      if (ok) return true;
      if (tracked && !why.test(static_cast<std::size_t>(point))) {
        clash = why;
        return false;
      }
      if (tracked) why.reset(static_cast<std::size_t>(point));
      failed |= why;
    }
    clash = failed | base;
    return false;
  }
};

inline std::string fresh_individual_name(int i) { return "$" + std::to_string(i); }

}  // namespace detail

/// Collects axioms, and negations of goal axioms, into one satisfiability
/// problem.
class ConsistencyProblem {
 public:
  void add(const Axiom& ax) {
    struct Visitor {
      ConsistencyProblem& p;
      void operator()(const Subsumption& s) const { p.gcis_.emplace_back(s.sub, s.super); }
      void operator()(const RoleInclusion& r) const { p.role_incs_.emplace_back(r.sub, r.super); }
      void operator()(const ConceptAssertion& c) const {
        p.concept_asserts_.push_back({c.description, false, c.individual});
      }
      void operator()(const RoleAssertion& r) const { p.role_asserts_.push_back(r); }
      void operator()(const Equality& e) const { p.eqs_.emplace_back(e.lhs, e.rhs); }
      void operator()(const Inequality& e) const { p.neqs_.emplace_back(e.lhs, e.rhs); }
      void operator()(const Clause& c) const { p.clauses_.push_back(c.literals); }
    };
    std::visit(Visitor{*this}, ax);
  }

  template <class Range>
  void add_all(const Range& axioms) {
    for (const Axiom& ax : axioms) add(ax);
  }

  /// Adds axioms whose joint satisfiability with the rest refutes `goal`.
  void add_negation(const Axiom& goal) {
    struct Visitor {
      ConsistencyProblem& p;
      void operator()(const Subsumption& s) const {
        p.concept_asserts_.push_back({s.sub & !s.super, false, p.fresh()});
      }
      void operator()(const RoleInclusion& r) const {
        Symbol x = p.fresh(), y = p.fresh();
        p.role_asserts_.push_back(RoleAssertion{r.sub, x, y, true});
        p.role_asserts_.push_back(RoleAssertion{r.super, x, y, false});
      }
      void operator()(const ConceptAssertion& c) const {
        p.concept_asserts_.push_back({c.description, true, c.individual});
      }
      void operator()(const RoleAssertion& r) const {
        RoleAssertion n = r;
        n.positive = !r.positive;
        p.role_asserts_.push_back(n);
      }
      void operator()(const Equality& e) const { p.neqs_.emplace_back(e.lhs, e.rhs); }
      void operator()(const Inequality& e) const { p.eqs_.emplace_back(e.lhs, e.rhs); }
      void operator()(const Clause& c) const {
        for (const auto& l : c.literals) std::visit(*this, l);
      }
    };
    std::visit(Visitor{*this}, goal);
  }

  bool satisfiable() const { return build().satisfiable(); }

 private:
  struct Assert {
    Concept description;
    bool negated;
    Symbol individual;
  };

  Symbol fresh() { return individual(detail::fresh_individual_name(fresh_count_++)); }

  detail::Tableau build() const {
    using detail::Tableau;
    Tableau t;

    // Individuals and the static equality relation.
    std::map<Symbol, int> ids;
    auto id_of = [&](const Symbol& s) {
      auto [it, inserted] = ids.emplace(s, static_cast<int>(ids.size()));
      return it->second;
    };
    for (const auto& a : concept_asserts_) id_of(a.individual);
    for (const auto& r : role_asserts_) id_of(r.subject), id_of(r.object);
    for (const auto& [a, b] : eqs_) id_of(a), id_of(b);
    for (const auto& [a, b] : neqs_) id_of(a), id_of(b);
    for (const auto& c : clauses_)
      for (const auto& l : c) {
        if (const auto* ca = std::get_if<ConceptAssertion>(&l)) id_of(ca->individual);
        if (const auto* ra = std::get_if<RoleAssertion>(&l)) id_of(ra->subject), id_of(ra->object);
      }
    std::vector<int> parent(ids.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [a, b] : eqs_) parent[find(ids.at(a))] = find(ids.at(b));
    std::vector<int> node_of(ids.size(), -1);
    int named = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const int root = find(static_cast<int>(i));
      if (node_of[root] < 0) node_of[root] = named++;
      node_of[i] = node_of[root];
    }
    auto node = [&](const Symbol& s) { return node_of[ids.at(s)]; };
    t.named = named;
    for (const auto& [a, b] : neqs_)
      if (node(a) == node(b)) t.trivially_inconsistent = true;

    // Roles first so the hierarchy matrix covers every id.
    for (const auto& [r, s] : role_incs_) t.table.role_id(r), t.table.role_id(s);
    for (const auto& r : role_asserts_) t.table.role_id(r.role);

    // Concepts.
    for (const auto& [lhs, rhs] : gcis_) absorb(t, lhs, rhs);
    for (const auto& a : concept_asserts_)
      t.concept_asserts.emplace_back(node(a.individual), t.table.nnf(a.description, a.negated));
    auto literal_ref = [&](const Literal& l) {
      if (const auto* ca = std::get_if<ConceptAssertion>(&l))
        return Tableau::LiteralRef{Tableau::LiteralRef::Kind::Concept, node(ca->individual),
                                   t.table.nnf(ca->description, false), -1};
      const auto& ra = std::get<RoleAssertion>(l);
      return Tableau::LiteralRef{ra.positive ? Tableau::LiteralRef::Kind::PosRole
                                             : Tableau::LiteralRef::Kind::NegRole,
                                 node(ra.subject), t.table.role_id(ra.role), node(ra.object)};
    };
    for (const auto& r : role_asserts_) t.role_asserts.push_back(literal_ref(r));
    for (const auto& c : clauses_) {
      std::vector<Tableau::LiteralRef> refs;
      for (const auto& l : c) refs.push_back(literal_ref(l));
      t.clauses.push_back(std::move(refs));
    }

    // The filler ids above may have introduced new roles; size the matrix last.
    const int nroles = t.table.role_count();
    t.subrole.assign(nroles, std::vector<char>(nroles, 0));
    for (int r = 0; r < nroles; ++r) t.subrole[r][r] = 1;
    std::vector<std::pair<int, int>> edges;
    for (const auto& [r, s] : role_incs_) {
      edges.emplace_back(t.table.role_id(r), t.table.role_id(s));
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (auto [r, s] : edges)
        for (int q = 0; q < nroles; ++q)
          if (t.subrole[q][r] && !t.subrole[q][s]) t.subrole[q][s] = 1, changed = true;
    }
    return t;
  }

  /// Lazy unfolding for GCIs with an atom (or a conjunction containing an
  /// atom, or a disjunction) on the left; everything else is internalized.
  static void absorb(detail::Tableau& t, const Concept& lhs, const Concept& rhs) {
    using COp = Concept::Op;
    switch (lhs.op()) {
      case COp::Bot:
        return;
      case COp::Top:
        t.universal.push_back(t.table.nnf(rhs, false));
        return;
      case COp::Atom: {
        const int a = t.table.atom_id(lhs.symbol());
        if (static_cast<int>(t.unfold.size()) <= a) t.unfold.resize(a + 1);
        t.unfold[a].push_back(t.table.nnf(rhs, false));
        return;
      }
      case COp::Or:
        for (const auto& d : lhs.args()) absorb(t, d, rhs);
        return;
      case COp::And: {
        auto args = lhs.args();
        auto it = std::find_if(args.begin(), args.end(),
                               [](const Concept& c) { return c.is(COp::Atom); });
        if (it != args.end()) {
          std::vector<Concept> rest;
          for (auto j = args.begin(); j != args.end(); ++j)
            if (j != it) rest.push_back(*j);
          absorb(t, *it, !Concept::conjunction(std::move(rest)) | rhs);
          return;
        }
        break;
      }
      default:
        break;
    }
    t.universal.push_back(t.table.nnf(!lhs | rhs, false));
  }

  std::vector<std::pair<Concept, Concept>> gcis_;
  std::vector<std::pair<Symbol, Symbol>> role_incs_;
  std::vector<Assert> concept_asserts_;
  std::vector<RoleAssertion> role_asserts_;
  std::vector<std::pair<Symbol, Symbol>> eqs_;
  std::vector<std::pair<Symbol, Symbol>> neqs_;
  std::vector<std::vector<Literal>> clauses_;
  int fresh_count_ = 0;
};

/// True iff the axioms have a model.
template <class Range = AxiomSet>
bool is_consistent(const Range& axioms) {
  ConsistencyProblem p;
  p.add_all(axioms);
  return p.satisfiable();
}

/// True iff every model of `axioms` satisfies `goal`; decided by refutation.
template <class Range = AxiomSet>
bool entails(const Range& axioms, const Axiom& goal) {
  if (const auto* e = std::get_if<Equality>(&goal); e && e->lhs == e->rhs) return true;
  ConsistencyProblem p;
  p.add_all(axioms);
  p.add_negation(goal);
  return !p.satisfiable();
}

template <class Range = AxiomSet, class Goals = AxiomSet>
bool entails_all(const Range& axioms, const Goals& goals) {
  for (const Axiom& g : goals)
    if (!entails(axioms, g)) return false;
  return true;
}

/// Subsumption C ⊑ D w.r.t. the axioms.
template <class Range = AxiomSet>
bool subsumes(const Range& axioms, const Concept& sub, const Concept& super) {
  return entails(axioms, subsumption(sub, super));
}

/// Instance check C(a).
template <class Range = AxiomSet>
bool instance_of(const Range& axioms, const Concept& c, const Symbol& a) {
  return entails(axioms, Axiom{concept_assertion(c, a)});
}

}  // namespace reinterp

#endif  // REINTERP_REASONER_HPP

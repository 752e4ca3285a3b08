#ifndef REINTERP_RANDOM_HPP
#define REINTERP_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "reinterp/axiom.hpp"

namespace reinterp {

/// Shape of randomly generated axiom sets.
struct GeneratorConfig {
  int concepts = 3;     // A, B, C
  int roles = 2;        // R, S
  int individuals = 3;  // a, b, c
  int max_axioms = 6;
  bool exists = true;        // ∃ in concepts
  bool gcis = true;
  bool role_inclusions = true;
  bool equalities = true;
  bool inequalities = false;
  bool clauses = true;
  bool negative_roles = true;
};

/// Seeded generator of small axiom sets over a fixed public signature.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed, GeneratorConfig config = {})
      : rng_(seed), config_(config) {}

  const GeneratorConfig& config() const { return config_; }
  std::mt19937_64& rng() { return rng_; }

  Symbol concept_symbol() { return concept_name(std::string(1, static_cast<char>('A' + pick(config_.concepts)))); }
  Symbol role_symbol() { return role_name(std::string(1, static_cast<char>('R' + pick(config_.roles)))); }
  Symbol individual_symbol() {
    return individual(std::string(1, static_cast<char>('a' + pick(config_.individuals))));
  }

  SymbolSet signature() const {
    SymbolSet out;
    for (int i = 0; i < config_.concepts; ++i) out.insert(concept_name(std::string(1, static_cast<char>('A' + i))));
    for (int i = 0; i < config_.roles; ++i) out.insert(role_name(std::string(1, static_cast<char>('R' + i))));
    for (int i = 0; i < config_.individuals; ++i) out.insert(individual(std::string(1, static_cast<char>('a' + i))));
    return out;
  }

  Concept literal_concept() {
    Concept a = Concept::atom(concept_symbol());
    return coin() ? a : !a;
  }

  /// Concept of constructor depth <= depth.
  Concept random_concept(int depth = 1) {
    if (depth <= 0) return literal_concept();
    switch (pick(config_.exists && config_.roles > 0 ? 5 : 4)) {
      case 0:
      case 1:
        return literal_concept();
      case 2:
        return random_concept(depth - 1) & random_concept(depth - 1);
      case 3:
        return random_concept(depth - 1) | random_concept(depth - 1);
      default:
        return coin() ? Concept::exists(role_symbol(), random_concept(depth - 1))
                      : !Concept::exists(role_symbol(), random_concept(depth - 1));
    }
  }

  SignedLiteral signed_literal() { return SignedLiteral{concept_symbol(), individual_symbol(), coin()}; }

  Literal assertion_literal() {
    if (config_.roles > 0 && pick(4) == 0) {
      return role_assertion(role_symbol(), individual_symbol(), individual_symbol(),
                            config_.negative_roles ? coin() : true);
    }
    return concept_assertion(random_concept(config_.exists ? 1 : 1), individual_symbol());
  }

  Axiom axiom() {
    std::vector<int> kinds{0, 0, 0, 1};  // concept assertions dominate
    if (config_.roles > 0) kinds.push_back(2);
    if (config_.gcis) kinds.insert(kinds.end(), {3, 3});
    if (config_.roles > 1 && config_.role_inclusions) kinds.push_back(4);
    if (config_.equalities && config_.individuals > 1) kinds.push_back(5);
    if (config_.inequalities && config_.individuals > 1) kinds.push_back(6);
    if (config_.clauses) kinds.push_back(7);
    switch (kinds[pick(static_cast<int>(kinds.size()))]) {
      case 0:
        return concept_assertion(literal_concept(), individual_symbol());
      case 1:
        return concept_assertion(random_concept(1), individual_symbol());
      case 2:
        return role_assertion(role_symbol(), individual_symbol(), individual_symbol(),
                              config_.negative_roles ? pick(4) != 0 : true);
      case 3:
        return subsumption(random_concept(pick(2)), random_concept(pick(2)));
      case 4: {
        Symbol r = role_symbol(), s = role_symbol();
        return role_inclusion(r, s);
      }
      case 5: {
        Symbol a = individual_symbol(), b = individual_symbol();
        return equality(a, b);
      }
      case 6: {
        Symbol a = individual_symbol(), b = individual_symbol();
        if (a == b) return concept_assertion(Concept::top(), a);
        return inequality(a, b);
      }
      default:
        return clause({assertion_literal(), assertion_literal()});
    }
  }

  AxiomSet axioms(int min_count = 1) {
    AxiomSet out;
    const int n = min_count + pick(config_.max_axioms - min_count + 1);
    while (static_cast<int>(out.size()) < n) out.insert(axiom());
    return out;
  }

  int pick(int n) { return n <= 1 ? 0 : static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng_)); }
  bool coin() { return pick(2) == 0; }

 private:
  std::mt19937_64 rng_;
  GeneratorConfig config_;
};

}  // namespace reinterp

#endif  // REINTERP_RANDOM_HPP

#ifndef REINTERP_SYMBOL_HPP
#define REINTERP_SYMBOL_HPP

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reinterp {

/// Thrown for every contract violation and reasoning failure in the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SymbolKind : unsigned char { Concept, Role, Individual };

inline std::string_view to_string(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::Concept:
      return "concept";
    case SymbolKind::Role:
      return "role";
    case SymbolKind::Individual:
      return "individual";
  }
  return "?";
}

/// A non-logical symbol. Prime level 0 is the public vocabulary; every
/// internalization step adds one prime.
struct Symbol {
  SymbolKind kind = SymbolKind::Concept;
  std::string name;
  unsigned prime = 0;

  bool is_public() const { return prime == 0; }
  bool is_internal() const { return prime > 0; }

  Symbol primed(unsigned levels = 1) const { return Symbol{kind, name, prime + levels}; }
  Symbol base() const { return Symbol{kind, name, 0}; }

  std::string render() const { return name + std::string(prime, '\''); }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

using SymbolSet = std::set<Symbol>;

inline Symbol concept_name(std::string name, unsigned prime = 0) {
  return Symbol{SymbolKind::Concept, std::move(name), prime};
}
inline Symbol role_name(std::string name, unsigned prime = 0) {
  return Symbol{SymbolKind::Role, std::move(name), prime};
}
inline Symbol individual(std::string name, unsigned prime = 0) {
  return Symbol{SymbolKind::Individual, std::move(name), prime};
}

inline void require_kind(const Symbol& s, SymbolKind kind) {
  if (s.kind != kind) {
    throw Error("symbol '" + s.render() + "' is a " + std::string(to_string(s.kind)) +
                ", expected a " + std::string(to_string(kind)));
  }
}

}  // namespace reinterp

#endif  // REINTERP_SYMBOL_HPP

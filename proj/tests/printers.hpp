// Readable gtest output for library values.
#ifndef REINTERP_TESTS_PRINTERS_HPP
#define REINTERP_TESTS_PRINTERS_HPP

#include <ostream>

#include "reinterp/axiom.hpp"

namespace reinterp {

inline void PrintTo(const Symbol& s, std::ostream* os) { *os << s.render(); }
inline void PrintTo(const Concept& c, std::ostream* os) { *os << render(c); }
inline void PrintTo(const Axiom& ax, std::ostream* os) { *os << render(ax); }
inline void PrintTo(const AxiomSet& x, std::ostream* os) {
  *os << "{";
  bool first = true;
  for (const auto& ax : x) {
    *os << (first ? "" : "; ") << render(ax);
    first = false;
  }
  *os << "}";
}

}  // namespace reinterp

#endif  // REINTERP_TESTS_PRINTERS_HPP

#ifndef REINTERP_PARSER_HPP
#define REINTERP_PARSER_HPP

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reinterp/ontology.hpp"

namespace reinterp {

/// Syntax or vocabulary error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ParseOptions {
  bool allow_internal = false;  // primed names, e.g. in saved results
};

struct NamedOntology {
  std::string name;
  Ontology ontology;
};

namespace detail {

enum class Tok { Name, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

inline bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (; n > 0; --n, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t{Tok::Punct, {}, line, col};
    if (name_start(c)) {
      std::size_t j = i;
      while (j < text.size() && name_char(text[j])) ++j;
      while (j < text.size() && text[j] == '\'') ++j;
      t.kind = Tok::Name;
      t.text = text.substr(i, j - i);
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    auto at = [&](const char* s) { return text.compare(i, std::char_traits<char>::length(s), s) == 0; };
    if (at("[=r") && (i + 3 >= text.size() || !name_char(text[i + 3]))) {
      t.text = "[=r";
    } else if (at("[=")) {
      t.text = "[=";
    } else if (at("==")) {
      t.text = "==";
    } else if (at("!=")) {
      t.text = "!=";
    } else if (std::string("(){},;:.!&|").find(c) != std::string::npos) {
      t.text = std::string(1, c);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    advance(t.text.size());
    out.push_back(std::move(t));
  }
  out.push_back(Token{Tok::End, "end of input", line, col});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, ParseOptions options) : toks_(lex(text)), options_(options) {}

  std::vector<NamedOntology> ontologies() {
    std::vector<NamedOntology> out;
    while (peek().kind != Tok::End) out.push_back(ontology());
    return out;
  }

  /// A bare axiom list, as used for triggers on the command line.
  AxiomSet axiom_list() {
    AxiomSet out;
    while (peek().kind != Tok::End) {
      out.insert(axiom());
      if (is(";")) next();
    }
    return out;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool is(const char* punct, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Punct && peek(ahead).text == punct;
  }
  bool is_name(std::size_t ahead = 0) const { return peek(ahead).kind == Tok::Name; }

  [[noreturn]] void fail(const Token& t, const std::string& expected) const {
    const std::string found = t.kind == Tok::End ? t.text : "'" + t.text + "'";
    throw ParseError(t.line, t.column, "expected " + expected + ", found " + found);
  }

  void expect(const char* punct) {
    if (!is(punct)) fail(peek(), std::string("'") + punct + "'");
    next();
  }

  std::string keyword_free_name(const char* what) {
    if (!is_name()) fail(peek(), what);
    const Token& t = peek();
    static const std::vector<std::string> reserved{"Top", "Bot", "exists", "clause", "ontology"};
    for (const auto& r : reserved)
      if (t.text == r) fail(t, what);
    return next().text;
  }

  // Symbol with its kind fixed at first use.
  Symbol symbol(const Token& t, SymbolKind kind) {
    std::string name = t.text;
    unsigned prime = 0;
    while (!name.empty() && name.back() == '\'') {
      name.pop_back();
      ++prime;
    }
    if (prime > 0 && !options_.allow_internal)
      throw ParseError(t.line, t.column, "internal symbol " + t.text + " is not allowed here");
    // A and A' always share a kind.
    auto [it, fresh] = kinds_.emplace(name, kind);
    if (!fresh && it->second != kind)
      throw ParseError(t.line, t.column,
                       "kind clash: " + name + " is used as a " + std::string(to_string(it->second)) +
                           " and as a " + std::string(to_string(kind)));
    return Symbol{kind, std::move(name), prime};
  }

  Symbol named(SymbolKind kind, const char* what) {
    const Token& t = peek();
    keyword_free_name(what);
    return symbol(t, kind);
  }

  NamedOntology ontology() {
    if (!is_name() || peek().text != "ontology") fail(peek(), "'ontology'");
    next();
    NamedOntology out{keyword_free_name("an ontology name"), {}};
    expect("{");
    std::vector<Token> declared;
    if (is_name() && peek().text == "public" && is(":", 1)) {
      next();
      next();
      if (!is(";")) {
        declared.push_back(peek());
        keyword_free_name("a symbol name");
        while (is(",")) {
          next();
          declared.push_back(peek());
          keyword_free_name("a symbol name");
        }
      }
      expect(";");
    }
    AxiomSet axioms;
    while (!is("}")) {
      if (peek().kind == Tok::End) fail(peek(), "an axiom or '}'");
      axioms.insert(axiom());
    }
    next();
    SymbolSet pub;
    for (const auto& t : declared) {
      if (t.text.back() == '\'')
        throw ParseError(t.line, t.column, "internal symbol " + t.text + " in the public vocabulary");
      auto it = kinds_.find(t.text);
      if (it == kinds_.end())
        throw ParseError(t.line, t.column, "cannot infer the kind of public symbol " + t.text);
      pub.insert(symbol(t, it->second));
    }
    try {
      out.ontology = Ontology::from_axioms(std::move(axioms), pub);
    } catch (const Error& e) {
      throw ParseError(declared.empty() ? 1 : declared.front().line, declared.empty() ? 1 : declared.front().column,
                       e.what());
    }
    kinds_.clear();
    return out;
  }

  Concept concept_expr() {
    const Token& t = peek();
    if (is("!")) {
      next();
      return !concept_expr();
    }
    if (is("(")) {
      next();
      Concept lhs = concept_expr();
      if (!is("&") && !is("|")) fail(peek(), "'&' or '|'");
      const bool conj = next().text == "&";
      Concept rhs = concept_expr();
      expect(")");
      return conj ? (lhs & rhs) : (lhs | rhs);
    }
    if (!is_name()) fail(t, "a concept");
    if (t.text == "Top") {
      next();
      return Concept::top();
    }
    if (t.text == "Bot") {
      next();
      return Concept::bot();
    }
    if (t.text == "exists") {
      next();
      const Symbol r = named(SymbolKind::Role, "a role name");
      expect(".");
      return Concept::exists(r, concept_expr());
    }
    return Concept::atom(named(SymbolKind::Concept, "a concept"));
  }

  // NAME "(" NAME "," NAME ")" or "!" NAME "(" NAME "," ...
  bool role_assertion_ahead() const {
    const std::size_t k = is("!") ? 1 : 0;
    return is_name(k) && is("(", k + 1) && is_name(k + 2) && is(",", k + 3);
  }

  RoleAssertion role_assertion() {
    const bool positive = !is("!");
    if (!positive) next();
    const Symbol r = named(SymbolKind::Role, "a role name");
    expect("(");
    const Symbol x = named(SymbolKind::Individual, "an individual");
    expect(",");
    const Symbol y = named(SymbolKind::Individual, "an individual");
    expect(")");
    return reinterp::role_assertion(r, x, y, positive);
  }

  Literal assertion() {
    if (role_assertion_ahead()) return role_assertion();
    const Concept c = concept_expr();
    expect("(");
    const Symbol x = named(SymbolKind::Individual, "an individual");
    expect(")");
    return concept_assertion(c, x);
  }

  Axiom axiom() {
    if (is_name() && peek().text == "clause" && is("{", 1)) {
      next();
      next();
      std::vector<Literal> lits{assertion()};
      while (is("|")) {
        next();
        lits.push_back(assertion());
      }
      expect("}");
      return clause(std::move(lits));
    }
    if (role_assertion_ahead()) return Axiom{role_assertion()};
    if (is_name() && (is("==", 1) || is("!=", 1))) {
      const Symbol x = named(SymbolKind::Individual, "an individual");
      const bool eq = next().text == "==";
      const Symbol y = named(SymbolKind::Individual, "an individual");
      return eq ? equality(x, y) : inequality(x, y);
    }
    if (is_name() && is("[=r", 1)) {
      const Symbol r = named(SymbolKind::Role, "a role name");
      next();
      const Symbol s = named(SymbolKind::Role, "a role name");
      return role_inclusion(r, s);
    }
    const Concept c = concept_expr();
    if (is("[=")) {
      next();
      return subsumption(c, concept_expr());
    }
    if (is("(")) {
      next();
      const Symbol x = named(SymbolKind::Individual, "an individual");
      expect(")");
      return Axiom{concept_assertion(c, x)};
    }
    fail(peek(), "'[=' or '('");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ParseOptions options_;
  std::map<std::string, SymbolKind> kinds_;
};

}  // namespace detail

/// Every `ontology NAME { ... }` block of a file, in order.
inline std::vector<NamedOntology> parse_ontologies(const std::string& text, ParseOptions options = {}) {
  return detail::Parser(text, options).ontologies();
}

/// Exactly one ontology block.
inline Ontology parse_ontology(const std::string& text, ParseOptions options = {}) {
  auto all = parse_ontologies(text, options);
  if (all.size() != 1)
    throw ParseError(1, 1, "expected exactly one ontology block, found " + std::to_string(all.size()));
  return std::move(all.front().ontology);
}

/// Axioms separated by whitespace or ';'. Triggers are public, so
/// internal symbols are always rejected.
inline AxiomSet parse_trigger(const std::string& text) { return detail::Parser(text, {}).axiom_list(); }

/// Axiom list that may mention internal symbols, e.g. chosen bridging axioms.
inline AxiomSet parse_trigger_internal(const std::string& text) {
  return detail::Parser(text, {true}).axiom_list();
}

inline Axiom parse_axiom(const std::string& text, ParseOptions options = {}) {
  const AxiomSet all = detail::Parser(text, options).axiom_list();
  if (all.size() != 1) throw ParseError(1, 1, "expected exactly one axiom");
  return *all.begin();
}

}  // namespace reinterp

#endif  // REINTERP_PARSER_HPP

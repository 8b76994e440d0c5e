#pragma once

// Terms, literals and goals (finite literal sets), with a small parser and
// canonical printer.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "setgen/error.hpp"

namespace setgen {

struct Variable {
  std::string name;

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

struct Symbol {
  std::string name;
  std::size_t arity = 0;

  friend auto operator<=>(const Symbol&, const Symbol&) = default;

  std::string to_string() const { return name + "/" + std::to_string(arity); }
};

inline bool is_variable_name(std::string_view name) {
  return !name.empty() && (std::isupper(static_cast<unsigned char>(name.front())) || name.front() == '_');
}

class Term {
 public:
  enum class Kind { variable, constant, compound };

  static Term variable(std::string name) { return Term(Kind::variable, std::move(name), {}); }
  static Term variable(const Variable& v) { return variable(v.name); }
  static Term constant(std::string name) { return Term(Kind::constant, std::move(name), {}); }
  static Term compound(std::string functor, std::vector<Term> args) {
    if (args.empty()) return constant(std::move(functor));
    return Term(Kind::compound, std::move(functor), std::move(args));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_variable() const noexcept { return kind_ == Kind::variable; }
  const std::string& name() const noexcept { return name_; }
  std::span<const Term> args() const noexcept { return args_; }
  Symbol symbol() const { return {name_, args_.size()}; }

  std::string to_string() const {
    std::string out = name_;
    if (!args_.empty()) {
      out += '(';
      for (std::size_t i = 0; i < args_.size(); ++i) {
        if (i) out += ',';
        out += args_[i].to_string();
      }
      out += ')';
    }
    return out;
  }

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.name_ <=> b.name_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.args_.begin(), a.args_.end(), b.args_.begin(),
                                                  b.args_.end());
  }

 private:
  Term(Kind kind, std::string name, std::vector<Term> args)
      : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

  Kind kind_;
  std::string name_;
  std::vector<Term> args_;
};

namespace detail {

inline bool is_operator_symbol(std::string_view name) {
  return name == "=" || name == "<" || name == ">" || name == "=<" || name == ">=";
}

}  // namespace detail

// A predicate symbol applied to terms; atoms and constraints alike.
class Literal {
 public:
  Literal(std::string predicate, std::vector<Term> args)
      : pred_{std::move(predicate), args.size()}, args_(std::move(args)) {
    args_text_.reserve(16);
    for (std::size_t i = 0; i < args_.size(); ++i) {
      if (i) args_text_ += ',';
      args_text_ += args_[i].to_string();
    }
  }

  const Symbol& predicate() const noexcept { return pred_; }
  std::span<const Term> args() const noexcept { return args_; }
  std::size_t arity() const noexcept { return args_.size(); }

  std::string to_string() const {
    if (detail::is_operator_symbol(pred_.name) && args_.size() == 2)
      return args_[0].to_string() + " " + pred_.name + " " + args_[1].to_string();
    if (args_.empty()) return pred_.name;
    return pred_.name + "(" + args_text_ + ")";
  }

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.pred_ == b.pred_ && a.args_ == b.args_;
  }
  // Canonical order: predicate name, arity, then printed arguments.
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.pred_ <=> b.pred_; c != 0) return c;
    if (auto c = a.args_text_ <=> b.args_text_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.args_.begin(), a.args_.end(), b.args_.begin(),
                                                  b.args_.end());
  }

 private:
  Symbol pred_;
  std::vector<Term> args_;
  std::string args_text_;
};

// Duplicate-free literal set kept in canonical order.
class Goal {
 public:
  Goal() = default;
  explicit Goal(std::vector<Literal> literals) : literals_(std::move(literals)) {
    std::sort(literals_.begin(), literals_.end());
    literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
  }
  Goal(std::initializer_list<Literal> literals) : Goal(std::vector<Literal>(literals)) {}

  std::size_t size() const noexcept { return literals_.size(); }
  bool empty() const noexcept { return literals_.empty(); }
  const Literal& operator[](std::size_t i) const { return literals_[i]; }
  auto begin() const noexcept { return literals_.begin(); }
  auto end() const noexcept { return literals_.end(); }
  std::span<const Literal> literals() const noexcept { return literals_; }

  bool contains(const Literal& l) const { return std::binary_search(literals_.begin(), literals_.end(), l); }
  std::size_t index_of(const Literal& l) const {
    auto it = std::lower_bound(literals_.begin(), literals_.end(), l);
    return (it != literals_.end() && *it == l) ? static_cast<std::size_t>(it - literals_.begin()) : size();
  }

  friend bool operator==(const Goal&, const Goal&) = default;

 private:
  std::vector<Literal> literals_;
};

// ---------------------------------------------------------------------------
// vars_of

inline void collect_vars(const Term& t, std::set<Variable>& out) {
  if (t.is_variable()) {
    out.insert(Variable{t.name()});
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

inline std::set<Variable> vars_of(const Term& t) {
  std::set<Variable> out;
  collect_vars(t, out);
  return out;
}

inline std::set<Variable> vars_of(const Literal& l) {
  std::set<Variable> out;
  for (const Term& a : l.args()) collect_vars(a, out);
  return out;
}

inline std::set<Variable> vars_of(const Goal& g) {
  std::set<Variable> out;
  for (const Literal& l : g)
    for (const Term& a : l.args()) collect_vars(a, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing
//
//   goal    := [ "{" ] [ literal ("," literal)* ] [ "}" ]
//   literal := term op term | symbol [ "(" term ("," term)* ")" ]
//   term    := Variable | symbol [ "(" term ("," term)* ")" ]
//   op      := "=" | "<" | ">" | "=<" | ">="

namespace detail {

class GoalParser {
 public:
  explicit GoalParser(std::string_view text) : text_(text) {}

  Goal parse() {
    std::vector<Literal> literals;
    skip_ws();
    bool braced = false;
    if (peek() == '{') {
      braced = true;
      advance();
      skip_ws();
    }
    if (!at_end() && !(braced && peek() == '}')) {
      literals.push_back(parse_literal());
      skip_ws();
      while (peek() == ',') {
        advance();
        literals.push_back(parse_literal());
        skip_ws();
      }
    }
    if (braced) {
      if (peek() != '}') fail("expected '}'");
      advance();
      skip_ws();
    }
    if (!at_end()) fail(std::string("unexpected character '") + peek() + "'");
    return Goal(std::move(literals));
  }

 private:
  Literal parse_literal() {
    skip_ws();
    const std::size_t line = line_, col = col_;
    Term lhs = parse_term();
    skip_ws();
    if (std::string op = parse_operator(); !op.empty()) {
      Term rhs = parse_term();
      return Literal(std::move(op), {std::move(lhs), std::move(rhs)});
    }
    if (lhs.is_variable()) throw ParseError("a variable is not a literal", line, col);
    std::vector<Term> args(lhs.args().begin(), lhs.args().end());
    return Literal(lhs.name(), std::move(args));
  }

  std::string parse_operator() {
    char c = peek();
    if (c == '=') {
      advance();
      if (peek() == '<') {
        advance();
        return "=<";
      }
      return "=";
    }
    if (c == '<') {
      advance();
      return "<";
    }
    if (c == '>') {
      advance();
      if (peek() == '=') {
        advance();
        return ">=";
      }
      return ">";
    }
    return {};
  }

  Term parse_term() {
    skip_ws();
    const std::size_t line = line_, col = col_;
    std::string name = parse_identifier();
    if (name.empty()) {
      if (at_end()) throw ParseError("unexpected end of input, expected a term", line, col);
      throw ParseError(std::string("expected a term, found '") + peek() + "'", line, col);
    }
    if (is_variable_name(name)) {
      skip_ws();
      if (peek() == '(') fail("variable '" + name + "' cannot take arguments");
      return Term::variable(std::move(name));
    }
    skip_ws();
    if (peek() != '(') return Term::constant(std::move(name));
    advance();
    std::vector<Term> args;
    args.push_back(parse_term());
    skip_ws();
    while (peek() == ',') {
      advance();
      args.push_back(parse_term());
      skip_ws();
    }
    if (peek() != ')') fail("expected ')' or ','");
    advance();
    return Term::compound(std::move(name), std::move(args));
  }

  std::string parse_identifier() {
    std::string out;
    while (!at_end()) {
      unsigned char c = static_cast<unsigned char>(peek());
      if (std::isalnum(c) || c == '_') {
        out += static_cast<char>(c);
        advance();
      } else {
        break;
      }
    }
    return out;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace detail

inline Goal parse_goal(std::string_view text) { return detail::GoalParser(text).parse(); }

inline Literal parse_literal(std::string_view text) {
  Goal g = parse_goal(text);
  if (g.size() != 1) throw ParseError("expected exactly one literal", 1, 1);
  return g[0];
}

inline std::string print_goal(const Goal& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += ", ";
    out += g[i].to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Renaming apart

namespace detail {

inline Term substitute_vars(const Term& t, const std::map<Variable, Variable>& m) {
  if (t.is_variable()) {
    auto it = m.find(Variable{t.name()});
    return it == m.end() ? t : Term::variable(it->second);
  }
  if (t.args().empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(substitute_vars(a, m));
  return Term::compound(t.name(), std::move(args));
}

inline Literal substitute_vars(const Literal& l, const std::map<Variable, Variable>& m) {
  std::vector<Term> args;
  args.reserve(l.arity());
  for (const Term& a : l.args()) args.push_back(substitute_vars(a, m));
  return Literal(l.predicate().name, std::move(args));
}

inline Goal substitute_vars(const Goal& g, const std::map<Variable, Variable>& m) {
  std::vector<Literal> out;
  out.reserve(g.size());
  for (const Literal& l : g) out.push_back(substitute_vars(l, m));
  return Goal(std::move(out));
}

}  // namespace detail

// Returns variants of g1 and g2 with disjoint variables. g1 is never
// touched; each clashing variable V of g2 becomes V_k for the smallest
// k >= 2 not already in use.
inline std::pair<Goal, Goal> rename_apart(const Goal& g1, const Goal& g2) {
  const std::set<Variable> v1 = vars_of(g1);
  const std::set<Variable> v2 = vars_of(g2);
  std::set<Variable> taken = v1;
  taken.insert(v2.begin(), v2.end());

  std::map<Variable, Variable> fresh;
  for (const Variable& v : v2) {
    if (!v1.contains(v)) continue;
    for (std::size_t k = 2;; ++k) {
      Variable candidate{v.name + "_" + std::to_string(k)};
      if (!taken.contains(candidate)) {
        taken.insert(candidate);
        fresh.emplace(v, std::move(candidate));
        break;
      }
    }
  }
  if (fresh.empty()) return {g1, g2};
  return {g1, detail::substitute_vars(g2, fresh)};
}

}  // namespace setgen

#include "openfol/parser.hpp"

#include <cctype>
#include <vector>

namespace openfol {

namespace {

bool lower_start(char c) { return c >= 'a' && c <= 'z'; }
bool upper_start(char c) { return c >= 'A' && c <= 'Z'; }
bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}
bool pred_char(char c) { return ident_char(c) || (c >= 'A' && c <= 'Z'); }

class Parser {
 public:
  Parser(std::string_view text, size_t pos) : text_(text), pos_(pos) {}

  FormulaPtr parse() { return parse_iff(); }
  size_t position() {
    skip_space();
    return pos_;
  }

 private:
  std::string_view text_;
  size_t pos_;
  std::vector<std::string> scope_;

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool try_symbol(std::string_view sym) {
    skip_space();
    if (text_.substr(pos_, sym.size()) != sym) return false;
    // '->' must not eat the arrow of '<->', nor '=' the '=' of '!='.
    pos_ += sym.size();
    return true;
  }

  [[noreturn]] void fail(const std::string& expected) {
    skip_space();
    throw SyntaxError(pos_, expected);
  }

  std::string lower_ident() {
    skip_space();
    if (pos_ >= text_.size() || !lower_start(text_[pos_])) fail("identifier");
    size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Identifier in a term or binder position; the quantifier keywords are
  // reserved there.
  std::string term_ident() {
    skip_space();
    size_t at = pos_;
    std::string id = lower_ident();
    if (id == "forall" || id == "exists") {
      pos_ = at;
      fail("identifier ('" + id + "' is reserved)");
    }
    return id;
  }

  std::string pred_ident() {
    size_t start = pos_;
    while (pos_ < text_.size() && pred_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool in_scope(const std::string& id) const {
    for (const auto& v : scope_)
      if (v == id) return true;
    return false;
  }

  Term make_term(std::string id) {
    if (in_scope(id)) return Term::var(std::move(id));
    return Term::name(std::move(id));
  }

  FormulaPtr parse_iff() {
    FormulaPtr lhs = parse_imp();
    while (try_symbol("<->")) lhs = Formula::iff(lhs, parse_imp());
    return lhs;
  }

  FormulaPtr parse_imp() {
    FormulaPtr lhs = parse_or();
    skip_space();
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return Formula::implies(lhs, parse_imp());
    }
    return lhs;
  }

  FormulaPtr parse_or() {
    FormulaPtr lhs = parse_and();
    while (peek() == '|' && try_symbol("|")) lhs = Formula::disj(lhs, parse_and());
    return lhs;
  }

  FormulaPtr parse_and() {
    FormulaPtr lhs = parse_unary();
    while (peek() == '&' && try_symbol("&")) lhs = Formula::conj(lhs, parse_unary());
    return lhs;
  }

  FormulaPtr parse_unary() {
    skip_space();
    if (pos_ >= text_.size()) fail("formula");
    char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return Formula::negation(parse_unary());
    }
    if (lower_start(c)) {
      size_t start = pos_;
      std::string word = lower_ident();
      if (word == "forall" || word == "exists") {
        std::string var = term_ident();
        if (in_scope(var)) {
          pos_ = start;
          fail("fresh quantifier variable ('" + var + "' shadows a binder)");
        }
        scope_.push_back(var);
        // The body is one unary (usually a parenthesized formula), so that
        // 'forall x (x = x) -> B' is an implication, not a quantification
        // over one.
        FormulaPtr body = parse_unary();
        scope_.pop_back();
        return word == "forall" ? Formula::forall(var, body)
                                : Formula::exists(var, body);
      }
      return parse_equation(make_term(std::move(word)));
    }
    return parse_atom();
  }

  FormulaPtr parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("formula");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FormulaPtr inner = parse_iff();
      if (peek() != ')') fail("')'");
      ++pos_;
      return inner;
    }
    if (upper_start(c)) {
      std::string sym = pred_ident();
      std::vector<Term> args;
      if (peek() == '(') {
        ++pos_;
        args.push_back(make_term(term_ident()));
        while (peek() == ',') {
          ++pos_;
          args.push_back(make_term(term_ident()));
        }
        if (peek() != ')') fail("')'");
        ++pos_;
      }
      return Formula::pred(std::move(sym), std::move(args));
    }
    if (lower_start(c)) return parse_equation(make_term(term_ident()));
    fail("formula");
  }

  FormulaPtr parse_equation(Term lhs) {
    skip_space();
    if (try_symbol("!=")) {
      Term rhs = make_term(term_ident());
      return Formula::negation(Formula::eq(std::move(lhs), std::move(rhs)));
    }
    if (try_symbol("=")) {
      Term rhs = make_term(term_ident());
      return Formula::eq(std::move(lhs), std::move(rhs));
    }
    fail("'=' or '!='");
  }
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  Parser p(text, 0);
  FormulaPtr f = p.parse();
  size_t end = p.position();
  if (end < text.size()) throw SyntaxError(end, "end of input");
  signature_of(f);  // flags inconsistent predicate arities
  return f;
}

FormulaPtr parse_formula_prefix(std::string_view text, size_t& pos) {
  Parser p(text, pos);
  FormulaPtr f = p.parse();
  pos = p.position();
  return f;
}

}  // namespace openfol

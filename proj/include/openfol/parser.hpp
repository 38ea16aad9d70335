// Recursive-descent parser for the ASCII formula grammar:
//
//   formula := iff
//   iff     := imp ('<->' imp)*              left associative
//   imp     := or ('->' or)*                 right associative
//   or      := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := '~' unary | 'forall' VAR unary | 'exists' VAR unary | atom
//   atom    := '(' formula ')' | PRED '(' term (',' term)* ')' | PRED
//            | term ('=' | '!=') term
//
// PRED matches [A-Z][A-Za-z0-9_]*, terms match [a-z][a-z0-9_]*. Whitespace
// is insignificant and '#' starts a comment running to end of line. 's != t'
// is surface syntax for '~(s = t)'. A quantifier binds the unary that
// follows it ('forall x (x = x) -> B' is an implication) and may not shadow
// an enclosing binder.

#ifndef OPENFOL_PARSER_HPP
#define OPENFOL_PARSER_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "openfol/formula.hpp"

namespace openfol {

struct SyntaxError : Error {
  SyntaxError(size_t position, const std::string& expected)
      : Error("syntax error at position " + std::to_string(position) +
              ": expected " + expected),
        position(position),
        expected(expected) {}
  size_t position;
  std::string expected;
};

// Parses the whole input; trailing non-whitespace is a SyntaxError.
FormulaPtr parse_formula(std::string_view text);

// Parses the longest formula starting at `pos` and advances `pos` past it.
// Used by the proof-script reader, whose justification column follows the
// formula on the same line.
FormulaPtr parse_formula_prefix(std::string_view text, size_t& pos);

}  // namespace openfol

#endif  // OPENFOL_PARSER_HPP

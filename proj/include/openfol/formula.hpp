// Abstract syntax for first-order formulas with identity: terms, formulas,
// signatures, canonical printing and the substitution operations the proof
// rules are built on.

#ifndef OPENFOL_FORMULA_HPP
#define OPENFOL_FORMULA_HPP

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace openfol {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Identifier used at a predicate-argument or equation position. Names and
// variables share one spelling space; the binding context decides which a
// given occurrence is, so Term carries an explicit tag.
struct Term {
  enum class Kind { Name, Var };
  Kind kind;
  std::string id;

  bool operator==(const Term&) const = default;
  bool operator<(const Term& o) const {
    return kind != o.kind ? kind < o.kind : id < o.id;
  }

  static Term name(std::string id) { return {Kind::Name, std::move(id)}; }
  static Term var(std::string id) { return {Kind::Var, std::move(id)}; }
  bool is_name() const { return kind == Kind::Name; }
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula tree. Nodes are shared freely; all operations build new
// trees and never mutate.
class Formula {
 public:
  enum class Kind { Pred, Eq, Not, And, Or, Imp, Iff, Forall, Exists };

  Kind kind;
  std::string symbol;       // Pred: predicate symbol
  std::vector<Term> terms;  // Pred: arguments; Eq: exactly {lhs, rhs}
  std::string bound;        // Forall/Exists: bound variable
  FormulaPtr left;          // Not: operand; quantifiers: body; binary: lhs
  FormulaPtr right;         // binary connectives: rhs

  static FormulaPtr pred(std::string symbol, std::vector<Term> args);
  static FormulaPtr eq(Term lhs, Term rhs);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr conj(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr disj(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr iff(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr forall(std::string var, FormulaPtr body);
  static FormulaPtr exists(std::string var, FormulaPtr body);

  bool is_quantifier() const {
    return kind == Kind::Forall || kind == Kind::Exists;
  }
  bool is_binary() const {
    return kind == Kind::And || kind == Kind::Or || kind == Kind::Imp ||
           kind == Kind::Iff;
  }
};

// Structural equality.
bool equal(const FormulaPtr& a, const FormulaPtr& b);

// Canonical fully parenthesized rendering; parse_formula inverts it.
std::string format_formula(const FormulaPtr& f);

// Vocabulary of a formula, script or sequent: names and (symbol, arity)
// pairs, both in lexicographic order.
struct Signature {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, int>> predicates;

  bool has_name(const std::string& n) const;
  bool contains(const Signature& other) const;
  void merge(const Signature& other);
  bool operator==(const Signature&) const = default;
};

struct ArityError : Error {
  ArityError(const std::string& symbol, int first, int second)
      : Error("predicate '" + symbol + "' used at arity " +
              std::to_string(first) + " and " + std::to_string(second)),
        symbol(symbol) {}
  std::string symbol;
};

// Throws ArityError if a predicate symbol occurs at two arities.
Signature signature_of(const FormulaPtr& f);
Signature signature_of(const std::vector<FormulaPtr>& fs);

struct NotQuantifiedError : Error {
  NotQuantifiedError() : Error("formula is not a quantification") {}
};

// Body of a quantified formula with every occurrence of the bound variable
// replaced by the name t. Capture cannot arise: names are never bound.
FormulaPtr instantiate(const FormulaPtr& f, const Term& t);

struct BadSelectorError : Error {
  explicit BadSelectorError(int index)
      : Error("occurrence selector " + std::to_string(index) +
              " out of range") {}
};

// Occurrence selector for replace_occurrences: ALL or a 1-based index set
// over the in-order occurrences of the source term.
struct Selector {
  bool all = true;
  std::set<int> indices;

  static Selector every() { return {}; }
  static Selector at(std::set<int> idx) { return {false, std::move(idx)}; }
  bool operator==(const Selector&) const = default;
};

// Replaces the selected occurrences of `from` (a name) by `to`; occurrences
// are counted left to right over the formula's in-order traversal.
FormulaPtr replace_occurrences(const FormulaPtr& f, const Term& from,
                               const Term& to, const Selector& sel);

// Number of occurrences of the name `t` in f.
int count_occurrences(const FormulaPtr& f, const Term& t);

// All names occurring in f.
std::set<std::string> names_of(const FormulaPtr& f);

// True iff f contains a free variable (never the case for parsed formulas).
bool has_free_variable(const FormulaPtr& f);

}  // namespace openfol

#endif  // OPENFOL_FORMULA_HPP

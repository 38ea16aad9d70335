// Finite-model semantics in which identity is an interpreted relation: a
// symmetric, transitive (not necessarily reflexive) relation compatible with
// every predicate extension. Elements outside the relation's field are null
// elements; names may fail to denote under the partial profile, and atoms
// containing an undenoting term evaluate false.

#ifndef OPENFOL_SEMANTICS_HPP
#define OPENFOL_SEMANTICS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "openfol/formula.hpp"
#include "openfol/kernel.hpp"

namespace openfol {

// Evaluation regimes.
//   total       every name denotes, null elements may carry predicates
//   null-strict every name denotes, null elements carry no predicates
//   partial     empty domains and undenoting names allowed
//   null-padded evaluate after appending one fresh null element (null-strict)
enum class Profile { Total, NullStrict, Partial, NullPadded };

std::string profile_name(Profile p);
std::optional<Profile> profile_from_name(const std::string& name);

using PredKey = std::pair<std::string, int>;  // symbol, arity
using Tuple = std::vector<int>;

struct Model {
  int domain_size = 0;                     // elements are 0 .. domain_size-1
  std::vector<std::string> names;          // the signature's names, sorted
  std::map<std::string, int> denotation;   // missing entry = undenoting
  std::map<PredKey, std::set<Tuple>> predicates;
  std::set<std::pair<int, int>> identity;

  // Null elements stand in no identity relation at all.
  bool is_null(int element) const;
  bool operator==(const Model&) const = default;
};

// Empty list iff the model satisfies every invariant of the profile. Each
// violation names the failing constraint with a witness, e.g.
// "not symmetric: (1,0) missing".
std::vector<std::string> validate_model(const Model& m, Profile p);

struct UnknownSymbolError : Error {
  explicit UnknownSymbolError(const std::string& what)
      : Error("unknown symbol: " + what) {}
};

using Assignment = std::map<std::string, int>;

// Bivalent truth value. The assignment must cover the free variables of f
// (top level: empty). Quantifiers range over every domain element, null
// elements included; an empty domain makes universals true and existentials
// false.
bool eval_formula(const Model& m, const Assignment& a, const FormulaPtr& f,
                  Profile p);

// True iff some premise is false or the conclusion is true. A sequent with
// global_identity gains 'forall x (x = x)' as an extra premise.
bool eval_sequent(const Model& m, const Sequent& s, Profile p);

// Appends one fresh element outside the identity relation and all predicate
// extensions; names that did not denote now denote it.
Model null_pad(const Model& m);

// Domain-0 model over sig with every name undenoting (profile partial).
Model empty_partial_model(const Signature& sig);

}  // namespace openfol

#endif  // OPENFOL_SEMANTICS_HPP

// Proof checker. Validates each line of a script against its cited rule,
// recomputes the assumption sets rather than trusting the declared ones, and
// reports the sequent a valid proof establishes.
//
// Identity handling depends on the mode:
//   classical  =I available ('t = t' or 'forall x (x = x)' from no assumptions)
//   open       =I unavailable; GA available when the script carries
//              'pragma identity: global', introducing the marker G
//   minimal    neither =I nor GA
// Every other rule is mode-independent.

#ifndef OPENFOL_KERNEL_HPP
#define OPENFOL_KERNEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "openfol/formula.hpp"
#include "openfol/proof.hpp"

namespace openfol {

// What a checked proof establishes: the formulas of the undischarged
// assumption lines (ascending line order) entail the last line's formula.
// global_identity is set when the marker G survives to the last line.
struct Sequent {
  std::vector<FormulaPtr> premises;
  FormulaPtr conclusion;
  bool global_identity = false;
};

Signature signature_of(const Sequent& s);

enum class LineErrorKind {
  RuleUnavailableInMode,
  WrongCitationArity,
  FormulaMismatch,
  AssumptionSetMismatch,
  SideConditionViolated,
  GAWithoutPragma,
};

std::string line_error_kind_name(LineErrorKind k);

struct LineResult {
  int number = 0;
  bool ok = true;
  std::optional<LineErrorKind> error;
  std::string message;
};

struct ProofVerdict {
  bool accepted = false;
  std::vector<LineResult> per_line;
  std::optional<Sequent> sequent;  // present iff accepted
  bool uses_identity_intro = false;
  bool uses_global_assumption = false;
};

ProofVerdict check_proof(const ProofScript& script, Mode mode);

struct NotAcceptedError : Error {
  NotAcceptedError() : Error("proof was not accepted") {}
};

// Sequent of an accepted proof; throws NotAcceptedError otherwise.
Sequent sequent_of(const ProofScript& script, Mode mode);

// CLI flag beats script pragma beats the default mode (open).
Mode resolve_mode(std::optional<Mode> requested, const ProofScript& script);

struct RuleDescriptor {
  Rule rule;
  int citation_arity;
  bool available;
  bool pragma_gated;  // GA under open: usable only with the identity pragma
};

// The full rule table with availability under the given mode.
std::vector<RuleDescriptor> available_rules(Mode mode);

}  // namespace openfol

#endif  // OPENFOL_KERNEL_HPP

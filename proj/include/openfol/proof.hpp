// Lemmon-format proof scripts: one line per inference, carrying the
// assumption set the author claims the line rests on, the line number, the
// formula, and a justification. File format (.lfd):
//
//   pragma mode: classical|open|minimal        (optional, before any line)
//   pragma identity: global                    (optional, before any line)
//   ASSUMPTIONS (N) FORMULA  JUSTIFICATION
//
// ASSUMPTIONS is '-' or a comma list of line numbers and/or the marker 'G'.
// JUSTIFICATION is a comma list of cited lines (possibly empty) followed by
// a rule name and its extras, e.g. 'A', '=I', '1 UE godzilla', '1,2 MPP',
// '1,3 CP', '1,2 =E ltr 1' (direction, then '*' or occurrence indices),
// '1 vI left', '3 IffE ltr', '1,2,5 EE', '1,2,3,4,5 vE', '3 QN'.
// '#' starts a comment. Rule spellings '&I/&E/vI/vE' and 'AndI/AndE/OrI/OrE'
// are interchangeable on input.

#ifndef OPENFOL_PROOF_HPP
#define OPENFOL_PROOF_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "openfol/formula.hpp"

namespace openfol {

enum class Rule {
  A, IdIntro, GA, IdElim, MPP, MTT, DN, CP, AndI, AndE, OrI, OrE,
  RAA, IffI, IffE, UE, UI, EI, EE, QN,
};

// Canonical rule name ("=I", "AndI", "OrE", ...).
std::string rule_name(Rule r);
// Accepts canonical names and the Lemmon spellings (&I, &E, vI, vE).
std::optional<Rule> rule_from_name(const std::string& name);
// Number of cited lines the rule takes.
int rule_citation_arity(Rule r);

enum class Direction { LTR, RTL };
enum class OrSide { Left, Right };

struct Justification {
  Rule rule;
  std::vector<int> cited;
  std::optional<Term> term;            // UE, EI: witnessing name
  std::optional<Direction> direction;  // =E, IffE
  std::optional<Selector> selector;    // =E
  std::optional<OrSide> side;          // OrI
};

// Assumption set: line numbers plus the optional global-identity marker G.
struct AssumptionSet {
  std::set<int> lines;
  bool marker_g = false;

  bool operator==(const AssumptionSet&) const = default;
  AssumptionSet unite(const AssumptionSet& o) const;
  AssumptionSet without(int line) const;
  std::string to_string() const;  // "-", "1,2", "1,G", ...
};

struct ProofLine {
  AssumptionSet assumptions;  // as declared in the script
  int number = 0;
  FormulaPtr formula;
  Justification justification;
};

enum class Mode { Classical, Open, Minimal };

std::string mode_name(Mode m);
std::optional<Mode> mode_from_name(const std::string& name);

struct ProofScript {
  std::optional<Mode> pragma_mode;
  bool pragma_global_identity = false;
  std::vector<ProofLine> lines;
};

struct ProofSyntaxError : Error {
  ProofSyntaxError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};
struct DuplicateLineNumberError : ProofSyntaxError {
  DuplicateLineNumberError(int line, int number)
      : ProofSyntaxError(line, "duplicate line number (" +
                                   std::to_string(number) + ")") {}
};
struct ForwardCitationError : ProofSyntaxError {
  ForwardCitationError(int line, int cited)
      : ProofSyntaxError(line, "cites line " + std::to_string(cited) +
                                   " which is not earlier") {}
};
struct PragmaError : ProofSyntaxError {
  PragmaError(int line, const std::string& what) : ProofSyntaxError(line, what) {}
};

ProofScript parse_proof_script(std::string_view text);

// Signature of every formula in the script; throws ArityError on conflicts.
Signature signature_of(const ProofScript& script);

}  // namespace openfol

#endif  // OPENFOL_PROOF_HPP

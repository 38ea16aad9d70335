// Exhaustive enumeration of valid finite models in a fixed canonical order,
// bounded countermodel search for sequents, and a brute-force semantic audit
// of every inference rule. Everything here is deterministic: equal inputs
// give equal outputs, including the counters.

#ifndef OPENFOL_SEARCH_HPP
#define OPENFOL_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "openfol/kernel.hpp"
#include "openfol/semantics.hpp"

namespace openfol {

struct BoundsError : Error {
  using Error::Error;
};

struct Bounds {
  // Hard-capped at 4: predicate extensions are enumerated as bitmasks and
  // the space explodes beyond that.
  int max_domain_size = 3;
  // Vocabulary to enumerate over; when empty, callers substitute the query's
  // own signature (searches) or the default audit signature (audits).
  Signature signature;
  // Cap on models examined; hitting it yields INCONCLUSIVE, never a silent
  // truncation.
  std::optional<int64_t> max_models;
};

inline constexpr int kMaxDomainSize = 4;

// Canonical order: domain size ascending (size 0 only under partial), then
// name denotations lexicographically (undenoting sorts last), then identity
// bitmask ascending over the PER survivors, then predicate-extension
// bitmasks ascending over the congruent survivors. The first model the
// callback rejects-into is therefore unique and reproducible.
int64_t for_each_model(const Signature& sig, const Bounds& b, Profile p,
                       const std::function<bool(const Model&)>& visit);

// Materialized variant for small bounds.
std::vector<Model> enumerate_models(const Signature& sig, const Bounds& b,
                                    Profile p);

enum class SearchStatus { ValidUpToBound, Countermodel, Inconclusive };
std::string search_status_name(SearchStatus s);

struct CountermodelResult {
  SearchStatus status = SearchStatus::ValidUpToBound;
  std::optional<Model> model;  // present iff status == Countermodel
  int64_t models_examined = 0;
};

// Scans enumeration order for the first model falsifying the sequent.
CountermodelResult find_countermodel(const Sequent& s, const Bounds& b,
                                     Profile p);

enum class AuditStatus { SoundUpToBound, Counterexample };
std::string audit_status_name(AuditStatus s);

struct AuditWitness {
  std::vector<FormulaPtr> premises;
  FormulaPtr conclusion;
  Model model;  // premises true, conclusion false here
};

struct AuditReport {
  std::string rule;
  AuditStatus status = AuditStatus::SoundUpToBound;
  std::optional<AuditWitness> witness;
  int64_t instances_checked = 0;
};

struct UnknownRuleError : Error {
  explicit UnknownRuleError(const std::string& rule)
      : Error("unknown rule '" + rule + "'") {}
};

// Rules covered by an --all audit, in kernel-table order. The structural
// A and GA are not audited; '=I' is audited only on request under the name
// '=I-schema' (its schema is the sequent '|- t = t').
std::vector<std::string> auditable_rules();

// Instantiates the rule's premise/conclusion schemas over a fixed formula
// pool (atoms, negated atoms and their x-quantifications over the audit
// signature) and checks truth preservation model by model. Hypothetical
// rules (CP, RAA, OrE, EE, UI) are audited through their implication
// encodings, the fragment that is checkable one model at a time.
AuditReport audit_rule(const std::string& rule, const Bounds& b, Profile p);

// Vocabulary used when an audit is requested without one: names a, b and
// the unary predicate F.
Signature default_audit_signature();

}  // namespace openfol

#endif  // OPENFOL_SEARCH_HPP

#include "openfol/kernel.hpp"

#include <algorithm>
#include <functional>

namespace openfol {

std::string line_error_kind_name(LineErrorKind k) {
  switch (k) {
    case LineErrorKind::RuleUnavailableInMode: return "RuleUnavailableInMode";
    case LineErrorKind::WrongCitationArity: return "WrongCitationArity";
    case LineErrorKind::FormulaMismatch: return "FormulaMismatch";
    case LineErrorKind::AssumptionSetMismatch: return "AssumptionSetMismatch";
    case LineErrorKind::SideConditionViolated: return "SideConditionViolated";
    case LineErrorKind::GAWithoutPragma: return "GAWithoutPragma";
  }
  return "?";
}

namespace {

// 't = t' for a name t, or 'forall x (x = x)': the shapes =I and GA license.
bool is_self_identity(const FormulaPtr& f) {
  if (f->kind == Formula::Kind::Eq)
    return f->terms[0].is_name() && f->terms[0] == f->terms[1];
  if (f->kind == Formula::Kind::Forall && f->left->kind == Formula::Kind::Eq) {
    const Term want = Term::var(f->bound);
    return f->left->terms[0] == want && f->left->terms[1] == want;
  }
  return false;
}

bool is_negation_of(const FormulaPtr& neg, const FormulaPtr& f) {
  return neg->kind == Formula::Kind::Not && equal(neg->left, f);
}

// Matches `instance` against `body` where every occurrence of the variable
// `var` in body stands for one name. Returns nullopt on structural mismatch;
// otherwise the name (or nullopt inside when var does not occur).
std::optional<std::optional<Term>> match_generalization(const FormulaPtr& body,
                                                        const FormulaPtr& instance,
                                                        const std::string& var) {
  std::optional<Term> found;
  bool ok = true;

  auto match_term = [&](const Term& pattern, const Term& concrete) {
    if (pattern.kind == Term::Kind::Var && pattern.id == var) {
      if (!concrete.is_name()) return false;
      if (found && !(*found == concrete)) return false;
      found = concrete;
      return true;
    }
    return pattern == concrete;
  };

  std::function<void(const FormulaPtr&, const FormulaPtr&)> walk =
      [&](const FormulaPtr& p, const FormulaPtr& c) {
        if (!ok) return;
        if (p->kind != c->kind) { ok = false; return; }
        switch (p->kind) {
          case Formula::Kind::Pred:
            if (p->symbol != c->symbol || p->terms.size() != c->terms.size()) {
              ok = false;
              return;
            }
            [[fallthrough]];
          case Formula::Kind::Eq:
            if (p->terms.size() != c->terms.size()) { ok = false; return; }
            for (size_t i = 0; i < p->terms.size(); ++i)
              if (!match_term(p->terms[i], c->terms[i])) { ok = false; return; }
            return;
          case Formula::Kind::Not:
            walk(p->left, c->left);
            return;
          case Formula::Kind::Forall:
          case Formula::Kind::Exists:
            if (p->bound != c->bound) { ok = false; return; }
            walk(p->left, c->left);
            return;
          default:
            walk(p->left, c->left);
            walk(p->right, c->right);
        }
      };
  walk(body, instance);
  if (!ok) return std::nullopt;
  return found;
}

// One duality step relates `from` to `to`.
bool qn_related(const FormulaPtr& from, const FormulaPtr& to) {
  // ~Qx phi  vs  Q'x ~phi
  if (from->kind == Formula::Kind::Not && from->left->is_quantifier()) {
    const FormulaPtr& q = from->left;
    Formula::Kind dual = q->kind == Formula::Kind::Forall
                             ? Formula::Kind::Exists
                             : Formula::Kind::Forall;
    if (to->kind == dual && to->bound == q->bound &&
        to->left->kind == Formula::Kind::Not && equal(to->left->left, q->left))
      return true;
  }
  // Qx ~phi  vs  ~Q'x phi
  if (from->is_quantifier() && from->left->kind == Formula::Kind::Not) {
    Formula::Kind dual = from->kind == Formula::Kind::Forall
                             ? Formula::Kind::Exists
                             : Formula::Kind::Forall;
    if (to->kind == Formula::Kind::Not && to->left->kind == dual &&
        to->left->bound == from->bound &&
        equal(to->left->left, from->left->left))
      return true;
  }
  return false;
}

struct LineFailure {
  LineErrorKind kind;
  std::string message;
};

class Checker {
 public:
  Checker(const ProofScript& script, Mode mode)
      : script_(script), mode_(mode) {}

  ProofVerdict run() {
    ProofVerdict verdict;
    for (const auto& line : script_.lines) {
      LineResult result;
      result.number = line.number;
      try {
        check_line(line);
      } catch (const LineFailure& failure) {
        result.ok = false;
        result.error = failure.kind;
        result.message = failure.message;
      }
      verdict.per_line.push_back(std::move(result));
      if (line.justification.rule == Rule::IdIntro)
        verdict.uses_identity_intro = true;
      if (line.justification.rule == Rule::GA)
        verdict.uses_global_assumption = true;
    }
    verdict.accepted = std::all_of(verdict.per_line.begin(),
                                   verdict.per_line.end(),
                                   [](const LineResult& r) { return r.ok; });
    if (verdict.accepted) {
      const ProofLine& last = script_.lines.back();
      Sequent seq;
      for (int n : last.assumptions.lines)
        seq.premises.push_back(script_.lines[n - 1].formula);
      seq.conclusion = last.formula;
      seq.global_identity = last.assumptions.marker_g;
      verdict.sequent = std::move(seq);
    }
    return verdict;
  }

 private:
  const ProofScript& script_;
  Mode mode_;

  [[noreturn]] static void fail(LineErrorKind kind, std::string message) {
    throw LineFailure{kind, std::move(message)};
  }

  const ProofLine& cited(const ProofLine& line, int slot) const {
    int n = line.justification.cited[slot];
    if (n < 1 || n >= line.number)
      fail(LineErrorKind::WrongCitationArity,
           "cites line " + std::to_string(n) + " which is not earlier");
    return script_.lines[n - 1];
  }

  // Sets are recomputed from the cited lines' declared sets, so one bad line
  // does not cascade into mismatches further down.
  AssumptionSet union_of_cited(const ProofLine& line) const {
    AssumptionSet set;
    for (size_t i = 0; i < line.justification.cited.size(); ++i)
      set = set.unite(cited(line, static_cast<int>(i)).assumptions);
    return set;
  }

  static void require_assumption_line(const ProofLine& l, const char* role) {
    if (l.justification.rule != Rule::A)
      fail(LineErrorKind::SideConditionViolated,
           std::string(role) + " (line " + std::to_string(l.number) +
               ") is not an assumption line");
  }

  void check_availability(const ProofLine& line) const {
    Rule r = line.justification.rule;
    if (r == Rule::IdIntro && mode_ != Mode::Classical)
      fail(LineErrorKind::RuleUnavailableInMode,
           "rule =I is not available in " + mode_name(mode_) + " mode");
    if (r == Rule::GA) {
      if (mode_ != Mode::Open)
        fail(LineErrorKind::RuleUnavailableInMode,
             "rule GA is not available in " + mode_name(mode_) + " mode");
      if (!script_.pragma_global_identity)
        fail(LineErrorKind::GAWithoutPragma,
             "rule GA requires 'pragma identity: global'");
    }
  }

  void check_line(const ProofLine& line) const {
    check_availability(line);

    const Justification& just = line.justification;
    int expected = rule_citation_arity(just.rule);
    if (static_cast<int>(just.cited.size()) != expected)
      fail(LineErrorKind::WrongCitationArity,
           rule_name(just.rule) + " cites " + std::to_string(just.cited.size()) +
               " lines, needs " + std::to_string(expected));

    AssumptionSet computed = derive(line);
    if (!(computed == line.assumptions))
      fail(LineErrorKind::AssumptionSetMismatch,
           "declared {" + line.assumptions.to_string() + "}, computed {" +
               computed.to_string() + "}");
  }

  // Validates the inference and returns the assumption set the rule assigns.
  AssumptionSet derive(const ProofLine& line) const {
    const Justification& just = line.justification;
    const FormulaPtr& goal = line.formula;
    switch (just.rule) {
      case Rule::A:
        return AssumptionSet{{line.number}, false};

      case Rule::IdIntro:
        if (!is_self_identity(goal))
          fail(LineErrorKind::FormulaMismatch,
               "=I licenses 't = t' or 'forall x (x = x)'");
        return {};

      case Rule::GA:
        if (!is_self_identity(goal))
          fail(LineErrorKind::FormulaMismatch,
               "GA licenses 't = t' or 'forall x (x = x)'");
        return AssumptionSet{{}, true};

      case Rule::MPP: {
        for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}}) {
          const FormulaPtr& imp = cited(line, i).formula;
          const FormulaPtr& minor = cited(line, j).formula;
          if (imp->kind == Formula::Kind::Imp && equal(imp->left, minor) &&
              equal(goal, imp->right))
            return union_of_cited(line);
        }
        fail(LineErrorKind::FormulaMismatch,
             "MPP needs an implication and its antecedent");
      }

      case Rule::MTT: {
        for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}}) {
          const FormulaPtr& imp = cited(line, i).formula;
          const FormulaPtr& other = cited(line, j).formula;
          if (imp->kind == Formula::Kind::Imp &&
              is_negation_of(other, imp->right) &&
              is_negation_of(goal, imp->left))
            return union_of_cited(line);
        }
        fail(LineErrorKind::FormulaMismatch,
             "MTT needs an implication and the negation of its consequent");
      }

      case Rule::DN: {
        const FormulaPtr& from = cited(line, 0).formula;
        bool intro = goal->kind == Formula::Kind::Not &&
                     goal->left->kind == Formula::Kind::Not &&
                     equal(goal->left->left, from);
        bool elim = from->kind == Formula::Kind::Not &&
                    from->left->kind == Formula::Kind::Not &&
                    equal(from->left->left, goal);
        if (!intro && !elim)
          fail(LineErrorKind::FormulaMismatch,
               "DN adds or removes a double negation");
        return union_of_cited(line);
      }

      case Rule::CP: {
        const ProofLine& antecedent = cited(line, 0);
        const ProofLine& consequent = cited(line, 1);
        require_assumption_line(antecedent, "discharged line");
        if (goal->kind != Formula::Kind::Imp ||
            !equal(goal->left, antecedent.formula) ||
            !equal(goal->right, consequent.formula))
          fail(LineErrorKind::FormulaMismatch,
               "CP concludes 'assumption -> conclusion'");
        return consequent.assumptions.without(antecedent.number);
      }

      case Rule::AndI: {
        if (goal->kind != Formula::Kind::And ||
            !equal(goal->left, cited(line, 0).formula) ||
            !equal(goal->right, cited(line, 1).formula))
          fail(LineErrorKind::FormulaMismatch,
               "AndI concludes the conjunction of the cited lines in order");
        return union_of_cited(line);
      }

      case Rule::AndE: {
        const FormulaPtr& conj = cited(line, 0).formula;
        if (conj->kind != Formula::Kind::And ||
            (!equal(goal, conj->left) && !equal(goal, conj->right)))
          fail(LineErrorKind::FormulaMismatch,
               "AndE concludes a conjunct of the cited line");
        return union_of_cited(line);
      }

      case Rule::OrI: {
        if (!just.side)
          fail(LineErrorKind::SideConditionViolated, "OrI needs a side");
        const FormulaPtr& from = cited(line, 0).formula;
        bool ok = goal->kind == Formula::Kind::Or &&
                  (*just.side == OrSide::Left ? equal(goal->left, from)
                                              : equal(goal->right, from));
        if (!ok)
          fail(LineErrorKind::FormulaMismatch,
               "OrI concludes a disjunction with the cited line on the " +
                   std::string(*just.side == OrSide::Left ? "left" : "right"));
        return union_of_cited(line);
      }

      case Rule::OrE: {
        const ProofLine& disj = cited(line, 0);
        const ProofLine& left_assumption = cited(line, 1);
        const ProofLine& left_conclusion = cited(line, 2);
        const ProofLine& right_assumption = cited(line, 3);
        const ProofLine& right_conclusion = cited(line, 4);
        if (disj.formula->kind != Formula::Kind::Or)
          fail(LineErrorKind::FormulaMismatch, "OrE needs a disjunction");
        require_assumption_line(left_assumption, "left case");
        require_assumption_line(right_assumption, "right case");
        if (!equal(left_assumption.formula, disj.formula->left) ||
            !equal(right_assumption.formula, disj.formula->right))
          fail(LineErrorKind::FormulaMismatch,
               "OrE case assumptions must be the disjuncts in order");
        if (!equal(left_conclusion.formula, goal) ||
            !equal(right_conclusion.formula, goal))
          fail(LineErrorKind::FormulaMismatch,
               "OrE needs both cases to conclude the goal");
        return disj.assumptions
            .unite(left_conclusion.assumptions.without(left_assumption.number))
            .unite(right_conclusion.assumptions.without(right_assumption.number));
      }

      case Rule::RAA: {
        const ProofLine& assumption = cited(line, 0);
        const ProofLine& contradiction = cited(line, 1);
        require_assumption_line(assumption, "discharged line");
        const FormulaPtr& c = contradiction.formula;
        bool shape = c->kind == Formula::Kind::And &&
                     (is_negation_of(c->right, c->left) ||
                      is_negation_of(c->left, c->right));
        if (!shape)
          fail(LineErrorKind::FormulaMismatch,
               "RAA needs a contradiction of shape 'B & ~B'");
        if (!is_negation_of(goal, assumption.formula))
          fail(LineErrorKind::FormulaMismatch,
               "RAA concludes the negation of the discharged assumption");
        return contradiction.assumptions.without(assumption.number);
      }

      case Rule::IffI: {
        const FormulaPtr& fwd = cited(line, 0).formula;
        const FormulaPtr& bwd = cited(line, 1).formula;
        if (fwd->kind != Formula::Kind::Imp || bwd->kind != Formula::Kind::Imp ||
            !equal(fwd->left, bwd->right) || !equal(fwd->right, bwd->left) ||
            goal->kind != Formula::Kind::Iff ||
            !equal(goal->left, fwd->left) || !equal(goal->right, fwd->right))
          fail(LineErrorKind::FormulaMismatch,
               "IffI needs 'A -> B' and 'B -> A', concluding 'A <-> B'");
        return union_of_cited(line);
      }

      case Rule::IffE: {
        if (!just.direction)
          fail(LineErrorKind::SideConditionViolated, "IffE needs a direction");
        const FormulaPtr& bi = cited(line, 0).formula;
        if (bi->kind != Formula::Kind::Iff)
          fail(LineErrorKind::FormulaMismatch, "IffE needs a biconditional");
        FormulaPtr want = *just.direction == Direction::LTR
                              ? Formula::implies(bi->left, bi->right)
                              : Formula::implies(bi->right, bi->left);
        if (!equal(goal, want))
          fail(LineErrorKind::FormulaMismatch,
               "IffE concludes the selected implication");
        return union_of_cited(line);
      }

      case Rule::UE: {
        if (!just.term)
          fail(LineErrorKind::SideConditionViolated, "UE needs a name");
        const FormulaPtr& all = cited(line, 0).formula;
        if (all->kind != Formula::Kind::Forall)
          fail(LineErrorKind::FormulaMismatch, "UE needs a universal");
        if (!equal(goal, instantiate(all, *just.term)))
          fail(LineErrorKind::FormulaMismatch,
               "UE concludes the instance at '" + just.term->id + "'");
        return union_of_cited(line);
      }

      case Rule::UI: {
        if (goal->kind != Formula::Kind::Forall)
          fail(LineErrorKind::FormulaMismatch, "UI concludes a universal");
        const FormulaPtr& from = cited(line, 0).formula;
        auto matched = match_generalization(goal->left, from, goal->bound);
        if (!matched)
          fail(LineErrorKind::FormulaMismatch,
               "cited line is not an instance of the universal's body");
        if (*matched) {
          const Term& name = **matched;
          if (names_of(goal->left).count(name.id))
            fail(LineErrorKind::FormulaMismatch,
                 "UI must generalize every occurrence of '" + name.id + "'");
          AssumptionSet deps = union_of_cited(line);
          for (int n : deps.lines)
            if (names_of(script_.lines[n - 1].formula).count(name.id))
              fail(LineErrorKind::SideConditionViolated,
                   "'" + name.id + "' occurs in assumption line " +
                       std::to_string(n));
        }
        return union_of_cited(line);
      }

      case Rule::EI: {
        if (!just.term)
          fail(LineErrorKind::SideConditionViolated, "EI needs a name");
        if (goal->kind != Formula::Kind::Exists)
          fail(LineErrorKind::FormulaMismatch, "EI concludes an existential");
        if (!equal(instantiate(goal, *just.term), cited(line, 0).formula))
          fail(LineErrorKind::FormulaMismatch,
               "instantiating the conclusion at '" + just.term->id +
                   "' must give the cited line");
        return union_of_cited(line);
      }

      case Rule::EE: {
        const ProofLine& existential = cited(line, 0);
        const ProofLine& instance = cited(line, 1);
        const ProofLine& conclusion = cited(line, 2);
        if (existential.formula->kind != Formula::Kind::Exists)
          fail(LineErrorKind::FormulaMismatch, "EE needs an existential");
        require_assumption_line(instance, "instantial case");
        auto matched = match_generalization(existential.formula->left,
                                            instance.formula,
                                            existential.formula->bound);
        if (!matched)
          fail(LineErrorKind::FormulaMismatch,
               "case assumption is not an instance of the existential");
        if (!equal(goal, conclusion.formula))
          fail(LineErrorKind::FormulaMismatch,
               "EE concludes the case conclusion");
        if (*matched) {
          const std::string& c = (*matched)->id;
          if (names_of(existential.formula).count(c))
            fail(LineErrorKind::SideConditionViolated,
                 "instantial name '" + c + "' occurs in the existential");
          if (names_of(goal).count(c))
            fail(LineErrorKind::SideConditionViolated,
                 "instantial name '" + c + "' occurs in the conclusion");
          for (int n : conclusion.assumptions.without(instance.number).lines)
            if (names_of(script_.lines[n - 1].formula).count(c))
              fail(LineErrorKind::SideConditionViolated,
                   "instantial name '" + c + "' occurs in assumption line " +
                       std::to_string(n));
        }
        return existential.assumptions.unite(
            conclusion.assumptions.without(instance.number));
      }

      case Rule::IdElim: {
        if (!just.direction || !just.selector)
          fail(LineErrorKind::SideConditionViolated,
               "=E needs a direction and an occurrence selector");
        const FormulaPtr& eq = cited(line, 0).formula;
        const FormulaPtr& host = cited(line, 1).formula;
        if (eq->kind != Formula::Kind::Eq || !eq->terms[0].is_name() ||
            !eq->terms[1].is_name())
          fail(LineErrorKind::FormulaMismatch,
               "=E needs an equation between names");
        Term from = *just.direction == Direction::LTR ? eq->terms[0] : eq->terms[1];
        Term to = *just.direction == Direction::LTR ? eq->terms[1] : eq->terms[0];
        FormulaPtr derived;
        try {
          derived = replace_occurrences(host, from, to, *just.selector);
        } catch (const BadSelectorError& e) {
          fail(LineErrorKind::SideConditionViolated, e.what());
        }
        if (!equal(goal, derived))
          fail(LineErrorKind::FormulaMismatch,
               "substitution yields '" + format_formula(derived) + "'");
        return union_of_cited(line);
      }

      case Rule::QN: {
        if (!qn_related(cited(line, 0).formula, goal))
          fail(LineErrorKind::FormulaMismatch,
               "QN relates '~Qx phi' with 'Q'x ~phi'");
        return union_of_cited(line);
      }
    }
    fail(LineErrorKind::FormulaMismatch, "unhandled rule");
  }
};

}  // namespace

Signature signature_of(const Sequent& s) {
  std::vector<FormulaPtr> fs = s.premises;
  fs.push_back(s.conclusion);
  return signature_of(fs);
}

ProofVerdict check_proof(const ProofScript& script, Mode mode) {
  return Checker(script, mode).run();
}

Sequent sequent_of(const ProofScript& script, Mode mode) {
  ProofVerdict verdict = check_proof(script, mode);
  if (!verdict.accepted) throw NotAcceptedError();
  return *verdict.sequent;
}

Mode resolve_mode(std::optional<Mode> requested, const ProofScript& script) {
  if (requested) return *requested;
  if (script.pragma_mode) return *script.pragma_mode;
  return Mode::Open;
}

std::vector<RuleDescriptor> available_rules(Mode mode) {
  std::vector<RuleDescriptor> table;
  for (Rule r : {Rule::A, Rule::IdIntro, Rule::GA, Rule::IdElim, Rule::MPP,
                 Rule::MTT, Rule::DN, Rule::CP, Rule::AndI, Rule::AndE,
                 Rule::OrI, Rule::OrE, Rule::RAA, Rule::IffI, Rule::IffE,
                 Rule::UE, Rule::UI, Rule::EI, Rule::EE, Rule::QN}) {
    bool available = true;
    bool gated = false;
    if (r == Rule::IdIntro) available = mode == Mode::Classical;
    if (r == Rule::GA) {
      available = mode == Mode::Open;
      gated = available;
    }
    table.push_back({r, rule_citation_arity(r), available, gated});
  }
  return table;
}

}  // namespace openfol

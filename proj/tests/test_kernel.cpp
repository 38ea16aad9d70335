#include <doctest.h>

#include <algorithm>

#include "openfol/kernel.hpp"
#include "openfol/parser.hpp"
#include "util.hpp"

using namespace openfol;

namespace {

ProofVerdict check_text(const char* text, Mode mode) {
  return check_proof(parse_proof_script(text), mode);
}

std::optional<LineErrorKind> first_error(const ProofVerdict& v, int line) {
  return v.per_line[line - 1].error;
}

// Thinning, insertion form: a fresh assumption line goes in at the top and
// every number shifts by one. The sequent must be unchanged.
ProofScript insert_unused_assumption(const ProofScript& original,
                                     FormulaPtr extra) {
  ProofScript out;
  out.pragma_mode = original.pragma_mode;
  out.pragma_global_identity = original.pragma_global_identity;
  ProofLine first;
  first.assumptions = AssumptionSet{{1}, false};
  first.number = 1;
  first.formula = std::move(extra);
  first.justification = Justification{Rule::A, {}, {}, {}, {}, {}};
  out.lines.push_back(std::move(first));
  for (const ProofLine& line : original.lines) {
    ProofLine shifted = line;
    shifted.number = line.number + 1;
    shifted.assumptions.lines.clear();
    for (int n : line.assumptions.lines) shifted.assumptions.lines.insert(n + 1);
    for (int& cited : shifted.justification.cited) ++cited;
    out.lines.push_back(std::move(shifted));
  }
  return out;
}

// Thinning, padding form: assume A, vacuously discharge it over the old
// conclusion C, then detach. The sequent gains A as a premise.
ProofScript pad_with_premise(const ProofScript& original, FormulaPtr extra) {
  ProofScript out = original;
  int k = static_cast<int>(original.lines.size());
  const ProofLine& last = original.lines.back();

  ProofLine assume;
  assume.assumptions = AssumptionSet{{k + 1}, false};
  assume.number = k + 1;
  assume.formula = extra;
  assume.justification = Justification{Rule::A, {}, {}, {}, {}, {}};

  ProofLine cp;
  cp.assumptions = last.assumptions;  // vacuous discharge: k+1 was never there
  cp.number = k + 2;
  cp.formula = Formula::implies(extra, last.formula);
  cp.justification = Justification{Rule::CP, {k + 1, k}, {}, {}, {}, {}};

  ProofLine mpp;
  mpp.assumptions = last.assumptions.unite(AssumptionSet{{k + 1}, false});
  mpp.number = k + 3;
  mpp.formula = last.formula;
  mpp.justification = Justification{Rule::MPP, {k + 2, k + 1}, {}, {}, {}, {}};

  out.lines.push_back(std::move(assume));
  out.lines.push_back(std::move(cp));
  out.lines.push_back(std::move(mpp));
  return out;
}

}  // namespace

TEST_CASE("categorical godzilla across the three modes") {
  ProofScript cg = test::corpus_script("cg.lfd");

  ProofVerdict classical = check_proof(cg, Mode::Classical);
  CHECK(classical.accepted);
  CHECK(classical.uses_identity_intro);
  CHECK_FALSE(classical.uses_global_assumption);
  REQUIRE(classical.sequent);
  CHECK(classical.sequent->premises.empty());
  CHECK(format_formula(classical.sequent->conclusion) ==
        "exists x (x = godzilla)");

  for (Mode mode : {Mode::Open, Mode::Minimal}) {
    ProofVerdict v = check_proof(cg, mode);
    CHECK_FALSE(v.accepted);
    CHECK_FALSE(v.per_line[0].ok);
    CHECK(first_error(v, 1) == LineErrorKind::RuleUnavailableInMode);
    CHECK(v.per_line[1].ok);  // later lines judged on their own terms
    CHECK(v.per_line[2].ok);
    CHECK_FALSE(v.sequent);
  }
}

TEST_CASE("global assumption recovers the derivation with explicit dependence") {
  ProofScript ga = test::corpus_script("cg_ga.lfd");

  ProofVerdict open = check_proof(ga, Mode::Open);
  CHECK(open.accepted);
  CHECK(open.uses_global_assumption);
  CHECK_FALSE(open.uses_identity_intro);
  REQUIRE(open.sequent);
  CHECK(open.sequent->premises.empty());
  CHECK(open.sequent->global_identity);

  CHECK(first_error(check_proof(ga, Mode::Classical), 1) ==
        LineErrorKind::RuleUnavailableInMode);
  CHECK(first_error(check_proof(ga, Mode::Minimal), 1) ==
        LineErrorKind::RuleUnavailableInMode);
}

TEST_CASE("GA without the pragma is its own error") {
  ProofVerdict v = check_text("- (1) a = a GA\n", Mode::Open);
  CHECK(first_error(v, 1) == LineErrorKind::GAWithoutPragma);
}

TEST_CASE("conditional godzilla is a theorem in every mode") {
  ProofScript cgc = test::corpus_script("cgc.lfd");
  for (Mode mode : {Mode::Classical, Mode::Open, Mode::Minimal}) {
    Sequent s = sequent_of(cgc, mode);
    CHECK(s.premises.empty());
    CHECK_FALSE(s.global_identity);
    CHECK(equal(s.conclusion,
                parse_formula(
                    "forall x (x = x) -> exists x (x = godzilla)")));
  }
}

TEST_CASE("sequent_of") {
  Sequent app3 = sequent_of(test::corpus_script("app3.lfd"), Mode::Minimal);
  REQUIRE(app3.premises.size() == 1);
  CHECK(format_formula(app3.premises[0]) == "a = b");
  CHECK(format_formula(app3.conclusion) == "a = a");

  Sequent app2 = sequent_of(test::corpus_script("app2.lfd"), Mode::Minimal);
  REQUIRE(app2.premises.size() == 2);
  CHECK(format_formula(app2.premises[0]) == "a = b");
  CHECK(format_formula(app2.premises[1]) == "P(a)");
  CHECK(format_formula(app2.conclusion) == "P(b)");

  Sequent single =
      sequent_of(parse_proof_script("1 (1) Q A\n"), Mode::Minimal);
  REQUIRE(single.premises.size() == 1);
  CHECK(format_formula(single.premises[0]) == "Q");
  CHECK(format_formula(single.conclusion) == "Q");

  CHECK_THROWS_AS(
      sequent_of(test::corpus_script("cg.lfd"), Mode::Open), NotAcceptedError);
}

TEST_CASE("available_rules gates the identity rules by mode") {
  auto find = [](const std::vector<RuleDescriptor>& table, Rule r) {
    return *std::find_if(table.begin(), table.end(),
                         [&](const RuleDescriptor& d) { return d.rule == r; });
  };
  auto classical = available_rules(Mode::Classical);
  auto open = available_rules(Mode::Open);
  auto minimal = available_rules(Mode::Minimal);

  CHECK(find(classical, Rule::IdIntro).available);
  CHECK_FALSE(find(classical, Rule::GA).available);
  CHECK_FALSE(find(open, Rule::IdIntro).available);
  CHECK(find(open, Rule::GA).available);
  CHECK(find(open, Rule::GA).pragma_gated);
  CHECK_FALSE(find(minimal, Rule::IdIntro).available);
  CHECK_FALSE(find(minimal, Rule::GA).available);

  // aside from GA's pragma gate, availability grows monotonically
  for (size_t i = 0; i < classical.size(); ++i) {
    if (classical[i].rule == Rule::GA) continue;
    if (minimal[i].available) CHECK(open[i].available);
    if (open[i].available) CHECK(classical[i].available);
  }
  CHECK(find(classical, Rule::OrE).citation_arity == 5);
  CHECK(find(classical, Rule::EE).citation_arity == 3);
}

TEST_CASE("mode monotonicity over the corpus") {
  for (const char* file :
       {"cg.lfd", "cg_ga.lfd", "cgc.lfd", "neg.lfd", "app1.lfd", "app2.lfd",
        "app3.lfd", "app4.lfd", "app4t.lfd", "app5.lfd", "app5b.lfd",
        "app6.lfd", "app7.lfd", "app8.lfd", "uniq.lfd"}) {
    ProofScript s = test::corpus_script(file);
    bool uses_ga = std::any_of(s.lines.begin(), s.lines.end(),
                               [](const ProofLine& l) {
                                 return l.justification.rule == Rule::GA;
                               });
    if (check_proof(s, Mode::Minimal).accepted) {
      CHECK(check_proof(s, Mode::Open).accepted);
      CHECK(check_proof(s, Mode::Classical).accepted);
    }
    if (!uses_ga && check_proof(s, Mode::Open).accepted)
      CHECK(check_proof(s, Mode::Classical).accepted);
  }
}

TEST_CASE("thinning") {
  ProofScript app3 = test::corpus_script("app3.lfd");
  FormulaPtr extra = parse_formula("ZZZ");

  SUBCASE("an unused assumption leaves the sequent alone") {
    ProofScript thinned = insert_unused_assumption(app3, extra);
    ProofVerdict v = check_proof(thinned, Mode::Minimal);
    REQUIRE(v.accepted);
    REQUIRE(v.sequent->premises.size() == 1);
    CHECK(format_formula(v.sequent->premises[0]) == "a = b");
  }

  SUBCASE("vacuous discharge plus detachment gains the premise") {
    ProofScript padded = pad_with_premise(app3, extra);
    ProofVerdict v = check_proof(padded, Mode::Minimal);
    REQUIRE(v.accepted);
    REQUIRE(v.sequent->premises.size() == 2);
    CHECK(format_formula(v.sequent->premises[0]) == "a = b");
    CHECK(format_formula(v.sequent->premises[1]) == "ZZZ");
    CHECK(equal(v.sequent->conclusion, app3.lines.back().formula));
  }
}

TEST_CASE("declared assumption sets are never trusted") {
  ProofVerdict v = check_text("- (1) Q A\n", Mode::Minimal);
  CHECK(first_error(v, 1) == LineErrorKind::AssumptionSetMismatch);

  ProofVerdict w = check_text(
      "1   (1) Q        A\n"
      "2   (2) W        A\n"
      "1   (3) Q & W    1,2 &I\n",  // should be 1,2
      Mode::Minimal);
  CHECK(first_error(w, 3) == LineErrorKind::AssumptionSetMismatch);
}

TEST_CASE("citation arity is checked") {
  ProofVerdict v = check_text(
      "1 (1) Q -> W    A\n"
      "1 (2) W         1 MPP\n",
      Mode::Minimal);
  CHECK(first_error(v, 2) == LineErrorKind::WrongCitationArity);
}

TEST_CASE("=I licenses exactly the self-identity shapes") {
  CHECK(check_text("- (1) a = a =I\n", Mode::Classical).accepted);
  CHECK(check_text("- (1) forall x (x = x) =I\n", Mode::Classical).accepted);
  ProofVerdict v = check_text("- (1) a = b =I\n", Mode::Classical);
  CHECK(first_error(v, 1) == LineErrorKind::FormulaMismatch);
}

TEST_CASE("propositional rules") {
  SUBCASE("MPP accepts either citation order") {
    CHECK(check_text("1   (1) Q -> W   A\n"
                     "2   (2) Q        A\n"
                     "1,2 (3) W        1,2 MPP\n",
                     Mode::Minimal)
              .accepted);
    CHECK(check_text("1   (1) Q        A\n"
                     "2   (2) Q -> W   A\n"
                     "1,2 (3) W        1,2 MPP\n",
                     Mode::Minimal)
              .accepted);
    ProofVerdict bad = check_text("1   (1) Q -> W   A\n"
                                  "2   (2) W        A\n"
                                  "1,2 (3) Q        1,2 MPP\n",
                                  Mode::Minimal);
    CHECK(first_error(bad, 3) == LineErrorKind::FormulaMismatch);
  }

  SUBCASE("DN works in both directions") {
    CHECK(check_text("1 (1) Q            A\n"
                     "1 (2) ~(~(Q))      1 DN\n"
                     "1 (3) Q            2 DN\n",
                     Mode::Minimal)
              .accepted);
  }

  SUBCASE("RAA takes the contradiction in either conjunct order") {
    CHECK(check_text("1   (1) Q               A\n"
                     "2   (2) ~(Q)            A\n"
                     "1,2 (3) ~(Q) & Q        2,1 &I\n"
                     "1   (4) ~(~(Q))        2,3 RAA\n",
                     Mode::Minimal)
              .accepted);
  }

  SUBCASE("vacuous discharge is permitted") {
    CHECK(check_text("1 (1) Q          A\n"
                     "2 (2) W          A\n"
                     "1 (3) W -> Q     2,1 CP\n",
                     Mode::Minimal)
              .accepted);
  }

  SUBCASE("CP must discharge an assumption line") {
    ProofVerdict v = check_text("1 (1) Q              A\n"
                                "1 (2) Q & Q          1,1 &I\n"
                                "1 (3) (Q & Q) -> Q   2,1 CP\n",
                                Mode::Minimal);
    CHECK(first_error(v, 3) == LineErrorKind::SideConditionViolated);
  }

  SUBCASE("IffI and IffE") {
    CHECK(check_text("1   (1) Q -> W    A\n"
                     "2   (2) W -> Q    A\n"
                     "1,2 (3) Q <-> W   1,2 IffI\n"
                     "1,2 (4) W -> Q    3 IffE rtl\n",
                     Mode::Minimal)
              .accepted);
  }

  SUBCASE("OrE discharges both cases") {
    CHECK(check_text("1    (1) Q | W        A\n"
                     "2    (2) Q            A\n"
                     "2    (3) Q | W        2 vI left\n"
                     "4    (4) W            A\n"
                     "4    (5) Q | W        4 vI right\n"
                     "1    (6) Q | W        1,2,3,4,5 vE\n",
                     Mode::Minimal)
              .accepted);
  }
}

TEST_CASE("quantifier rules and side conditions") {
  SUBCASE("UI blocks a name that occurs in the assumptions") {
    ProofVerdict v = check_text("1 (1) F(a)            A\n"
                                "1 (2) forall x (F(x)) 1 UI\n",
                                Mode::Minimal);
    CHECK(first_error(v, 2) == LineErrorKind::SideConditionViolated);
  }

  SUBCASE("UI is fine on a name introduced by UE") {
    CHECK(check_text("1 (1) forall x (F(x))   A\n"
                     "1 (2) F(c)              1 UE c\n"
                     "1 (3) forall y (F(y))   2 UI\n",
                     Mode::Minimal)
              .accepted);
  }

  SUBCASE("UI must generalize every occurrence") {
    ProofVerdict v = check_text("1 (1) forall x (R(x,x))   A\n"
                                "1 (2) R(c,c)              1 UE c\n"
                                "1 (3) forall y (R(y,c))   2 UI\n",
                                Mode::Minimal);
    CHECK(first_error(v, 3) == LineErrorKind::FormulaMismatch);
  }

  SUBCASE("the G marker never blocks UI") {
    CHECK(check_text("pragma identity: global\n"
                     "G (1) forall x (x = x)   GA\n"
                     "G (2) a = a              1 UE a\n"
                     "G (3) forall y (y = y)   2 UI\n",
                     Mode::Open)
              .accepted);
  }

  SUBCASE("EE with a fresh instantial name") {
    CHECK(check_text("1 (1) exists x (F(x))   A\n"
                     "2 (2) F(c)              A\n"
                     "2 (3) exists y (F(y))   2 EI c\n"
                     "1 (4) exists y (F(y))   1,2,3 EE\n",
                     Mode::Minimal)
              .accepted);
  }

  SUBCASE("EE rejects an instantial name leaking into the conclusion") {
    ProofVerdict v = check_text("1 (1) exists x (F(x))   A\n"
                                "2 (2) F(c)              A\n"
                                "2 (3) F(c) | F(c)       2 vI left\n"
                                "1 (4) F(c) | F(c)       1,2,3 EE\n",
                                Mode::Minimal);
    CHECK(first_error(v, 4) == LineErrorKind::SideConditionViolated);
  }

  SUBCASE("=E selector range is enforced") {
    ProofVerdict v = check_text("1 (1) a = b   A\n"
                                "1 (2) a = a   1,1 =E rtl 4\n",
                                Mode::Minimal);
    CHECK(first_error(v, 2) == LineErrorKind::SideConditionViolated);
  }

  SUBCASE("QN rejects a mismatched body") {
    ProofVerdict v = check_text("1 (1) ~(forall x (F(x)))     A\n"
                                "1 (2) exists x (~(Q))        1 QN\n",
                                Mode::Minimal);
    CHECK(first_error(v, 2) == LineErrorKind::FormulaMismatch);
  }
}

TEST_CASE("mode resolution: flag beats pragma beats default") {
  ProofScript s = parse_proof_script("pragma mode: classical\n1 (1) Q A\n");
  CHECK(resolve_mode(std::nullopt, s) == Mode::Classical);
  CHECK(resolve_mode(Mode::Minimal, s) == Mode::Minimal);
  ProofScript bare = parse_proof_script("1 (1) Q A\n");
  CHECK(resolve_mode(std::nullopt, bare) == Mode::Open);
}

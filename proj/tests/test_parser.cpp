#include <doctest.h>

#include "openfol/parser.hpp"

using namespace openfol;

TEST_CASE("grammar basics") {
  FormulaPtr f = parse_formula("forall x (x = x)");
  REQUIRE(f->kind == Formula::Kind::Forall);
  CHECK(f->bound == "x");
  CHECK(f->left->kind == Formula::Kind::Eq);
  CHECK(f->left->terms[0] == Term::var("x"));

  FormulaPtr g = parse_formula("~(exists x (x = godzilla))");
  REQUIRE(g->kind == Formula::Kind::Not);
  REQUIRE(g->left->kind == Formula::Kind::Exists);
  CHECK(g->left->left->terms[1] == Term::name("godzilla"));
}

TEST_CASE("empty input fails at position 0") {
  try {
    parse_formula("");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 0);
  }
}

TEST_CASE("precedence and associativity") {
  CHECK(format_formula(parse_formula("Q & W | E")) == "((Q & W) | E)");
  CHECK(format_formula(parse_formula("Q -> W -> E")) == "(Q -> (W -> E))");
  CHECK(format_formula(parse_formula("Q <-> W <-> E")) == "((Q <-> W) <-> E)");
  CHECK(format_formula(parse_formula("~Q & W")) == "(~(Q) & W)");
  CHECK(format_formula(parse_formula("Q & W -> E")) == "((Q & W) -> E)");
}

TEST_CASE("quantifier scope is the following unary") {
  FormulaPtr f = parse_formula("forall x (x = x) -> exists x (x = godzilla)");
  REQUIRE(f->kind == Formula::Kind::Imp);
  CHECK(f->left->kind == Formula::Kind::Forall);
  CHECK(f->right->kind == Formula::Kind::Exists);

  // with an explicitly parenthesized body the quantifier covers it all
  FormulaPtr g = parse_formula("forall x ((x = x) -> F(x))");
  REQUIRE(g->kind == Formula::Kind::Forall);
  CHECK(g->left->kind == Formula::Kind::Imp);
}

TEST_CASE("inequality is sugar for negated identity") {
  FormulaPtr f = parse_formula("exists x (x != x)");
  REQUIRE(f->kind == Formula::Kind::Exists);
  CHECK(f->left->kind == Formula::Kind::Not);
  CHECK(f->left->left->kind == Formula::Kind::Eq);
  CHECK(format_formula(f) == "exists x (~(x = x))");
}

TEST_CASE("free lowercase identifiers are names, bound ones variables") {
  FormulaPtr f = parse_formula("forall x (x = y)");
  CHECK(f->left->terms[0] == Term::var("x"));
  CHECK(f->left->terms[1] == Term::name("y"));
  CHECK_FALSE(has_free_variable(f));
}

TEST_CASE("shadowing is rejected") {
  CHECK_THROWS_AS(parse_formula("forall x (exists x (x = x))"), SyntaxError);
}

TEST_CASE("trailing junk is rejected") {
  CHECK_THROWS_AS(parse_formula("a = a b"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("(a = a))"), SyntaxError);
}

TEST_CASE("arity conflicts are rejected at parse time") {
  CHECK_THROWS_AS(parse_formula("P(a) & P(a,b)"), ArityError);
}

TEST_CASE("comments and whitespace are insignificant") {
  FormulaPtr f = parse_formula("  F(a)   # trailing comment\n | Q");
  CHECK(format_formula(f) == "(F(a) | Q)");
}

TEST_CASE("reserved words cannot be identifiers") {
  CHECK_THROWS_AS(parse_formula("F(forall)"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("forall forall (forall = forall)"),
                  SyntaxError);
}

TEST_CASE("prefix parsing stops before the justification column") {
  std::string line = "godzilla = godzilla   1 UE godzilla";
  size_t pos = 0;
  FormulaPtr f = parse_formula_prefix(line, pos);
  CHECK(format_formula(f) == "godzilla = godzilla");
  CHECK(line.substr(pos) == "1 UE godzilla");

  line = "forall x (x = x)   =I";
  pos = 0;
  f = parse_formula_prefix(line, pos);
  CHECK(f->kind == Formula::Kind::Forall);
  CHECK(line.substr(pos) == "=I");
}

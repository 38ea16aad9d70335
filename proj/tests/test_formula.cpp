#include <doctest.h>

#include "fuzz.hpp"
#include "openfol/formula.hpp"
#include "openfol/parser.hpp"

using namespace openfol;

namespace {

Term name(const char* id) { return Term::name(id); }
Term var(const char* id) { return Term::var(id); }

}  // namespace

TEST_CASE("canonical rendering") {
  FormulaPtr refl = Formula::forall("x", Formula::eq(var("x"), var("x")));
  CHECK(format_formula(refl) == "forall x (x = x)");

  FormulaPtr neg = Formula::negation(Formula::eq(name("a"), name("a")));
  CHECK(format_formula(neg) == "~(a = a)");

  FormulaPtr fa = Formula::pred("F", {name("a")});
  CHECK(format_formula(Formula::disj(fa, Formula::negation(fa))) ==
        "(F(a) | ~(F(a)))");

  CHECK(format_formula(Formula::pred("Q", {})) == "Q");
  CHECK(format_formula(Formula::pred("R", {name("a"), name("b")})) == "R(a,b)");
}

TEST_CASE("instantiate") {
  FormulaPtr refl = Formula::forall("x", Formula::eq(var("x"), var("x")));
  CHECK(format_formula(instantiate(refl, name("godzilla"))) ==
        "godzilla = godzilla");

  FormulaPtr nonself =
      Formula::exists("x", Formula::negation(Formula::eq(var("x"), var("x"))));
  CHECK(format_formula(instantiate(nonself, name("a0"))) == "~(a0 = a0)");

  CHECK_THROWS_AS(instantiate(Formula::pred("F", {name("a")}), name("b")),
                  NotQuantifiedError);
}

TEST_CASE("replace_occurrences") {
  FormulaPtr ab = Formula::eq(name("a"), name("b"));
  CHECK(equal(replace_occurrences(ab, name("b"), name("a"), Selector::every()),
              Formula::eq(name("a"), name("a"))));

  FormulaPtr bc = Formula::eq(name("b"), name("c"));
  CHECK(equal(replace_occurrences(bc, name("b"), name("a"), Selector::at({1})),
              Formula::eq(name("a"), name("c"))));

  // symmetry proof step: replace only the first occurrence
  FormulaPtr aa = Formula::eq(name("a"), name("a"));
  CHECK(format_formula(replace_occurrences(aa, name("a"), name("b"),
                                           Selector::at({1}))) == "b = a");
}

TEST_CASE("occurrence counting is in-order over the tree") {
  FormulaPtr f = parse_formula("(F(a) & R(b,a)) -> a = b");
  CHECK(count_occurrences(f, name("a")) == 3);
  FormulaPtr g = replace_occurrences(f, name("a"), name("c"), Selector::at({2}));
  CHECK(format_formula(g) == "((F(a) & R(b,c)) -> a = b)");
}

TEST_CASE("selector out of range") {
  FormulaPtr aa = Formula::eq(name("a"), name("a"));
  CHECK_THROWS_AS(
      replace_occurrences(aa, name("a"), name("b"), Selector::at({3})),
      BadSelectorError);
}

TEST_CASE("signature extraction") {
  Signature s1 = signature_of(parse_formula("exists x (x = godzilla)"));
  CHECK(s1.names == std::vector<std::string>{"godzilla"});
  CHECK(s1.predicates.empty());

  Signature s2 = signature_of(parse_formula("F(a) | ~(F(a))"));
  CHECK(s2.names == std::vector<std::string>{"a"});
  CHECK(s2.predicates == std::vector<std::pair<std::string, int>>{{"F", 1}});

  Signature s3 = signature_of(parse_formula("a = b & Q"));
  CHECK(s3.names == std::vector<std::string>{"a", "b"});
  CHECK(s3.predicates == std::vector<std::pair<std::string, int>>{{"Q", 0}});
}

TEST_CASE("arity conflicts are flagged") {
  FormulaPtr bad = Formula::conj(Formula::pred("P", {name("a")}),
                                 Formula::pred("P", {name("a"), name("b")}));
  CHECK_THROWS_AS(signature_of(bad), ArityError);
}

TEST_CASE("round-trip and substitution properties") {
  test::Fuzzer fuzz(20240901);
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = fuzz.formula(6);
    CAPTURE(format_formula(f));

    // format then parse is the identity
    CHECK(equal(parse_formula(format_formula(f)), f));

    // replacing a name by itself changes nothing
    CHECK(equal(replace_occurrences(f, Term::name("a"), Term::name("a"),
                                    Selector::every()),
                f));

    // the signature survives a print/parse cycle
    CHECK(signature_of(parse_formula(format_formula(f))) == signature_of(f));
  }
}

TEST_CASE("instantiation closes the body") {
  test::Fuzzer fuzz(7);
  int quantified = 0;
  for (int i = 0; i < 400; ++i) {
    FormulaPtr f = fuzz.formula(5);
    if (!f->is_quantifier()) continue;
    ++quantified;
    CHECK_FALSE(has_free_variable(instantiate(f, Term::name("n"))));
  }
  CHECK(quantified > 50);  // the generator must actually exercise this
}

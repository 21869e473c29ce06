#include "doctest.h"

#include "crystallo/errors.hpp"
#include "crystallo/terms.hpp"

using namespace crystallo;

TEST_CASE("signature validation catches duplicates and bad arities")
{
    Signature sig;
    sig.ops = {{"p", 3}, {"p", 2}};
    CHECK_THROWS_AS(sig.validate(), ValidationError);

    sig.ops = {{"p", 0}};
    CHECK_THROWS_AS(sig.validate(), ValidationError);

    sig.ops = {{"p", 3}};
    sig.consts = {"p"};
    CHECK_THROWS_AS(sig.validate(), ValidationError);

    sig.consts = {"0"};
    CHECK_NOTHROW(sig.validate());
}

TEST_CASE("term construction and printing")
{
    Term t = Term::apply("p", {Term::var("x"), Term::cons("0"), Term::var("x")});
    CHECK(t.to_string() == "p(x,0,x)");

    std::vector<std::string> vars;
    t.collect_variables(vars);
    CHECK(vars == std::vector<std::string>{"x"});

    Equation eq{t, Term::var("x")};
    CHECK(eq.variables() == std::vector<std::string>{"x"});
    CHECK(eq.to_string() == "p(x,0,x) = x");
}

TEST_CASE("validate_term enforces arity and known names")
{
    Signature sig;
    sig.ops = {{"p", 3}};
    sig.consts = {"0"};

    CHECK_NOTHROW(validate_term(Term::apply("p", {Term::var("a"), Term::var("b"), Term::cons("0")}), sig));
    CHECK_THROWS_AS(validate_term(Term::apply("p", {Term::var("a"), Term::var("b")}), sig),
                    ValidationError);
    CHECK_THROWS_AS(validate_term(Term::apply("q", {Term::var("a")}), sig), ValidationError);
    CHECK_THROWS_AS(validate_term(Term::cons("1"), sig), ValidationError);
    CHECK_THROWS_AS(validate_term(Term::var("p"), sig), ValidationError);
}

TEST_CASE("equation matching up to variable renaming")
{
    auto eq = [](const Term & l, const Term & r) { return Equation{l, r}; };
    Term pxy = Term::apply("p", {Term::var("x"), Term::var("y"), Term::var("y")});
    Term pab = Term::apply("p", {Term::var("a"), Term::var("b"), Term::var("b")});
    Term pabc = Term::apply("p", {Term::var("a"), Term::var("b"), Term::var("c")});

    CHECK(equal_up_to_renaming(eq(pxy, Term::var("x")), eq(pab, Term::var("a"))));
    CHECK(! equal_up_to_renaming(eq(pxy, Term::var("x")), eq(pab, Term::var("b"))));
    CHECK(! equal_up_to_renaming(eq(pxy, Term::var("x")), eq(pabc, Term::var("a"))));
}

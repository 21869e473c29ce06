#include "doctest.h"

#include "crystallo/errors.hpp"
#include "crystallo/parser.hpp"

using namespace crystallo;

namespace {

    const char * hex3_src = R"(
# three ternary operations, one constant
variety Hex3 {
  op p1/3;
  op p2/3;
  op p3/3;
  const 0;
  eq p1(a,0,0) = a;
  eq p2(a,0,a) = a;
  eq p3(0,0,a) = a;
  eq p1(a,a,b) = p2(a,a,b);
  eq p2(a,b,b) = p3(a,b,b);
  eq p1(b,b,b) = b;
  eq p2(b,b,b) = b;
  eq p3(b,b,b) = b;
}
)";

}

TEST_CASE("parse_variety accepts the Hex3 source")
{
    VarietyPresentation v = parse_variety(hex3_src);
    CHECK(v.name == "Hex3");
    CHECK(v.signature.ops.size() == 3);
    CHECK(v.signature.ops[0].arity == 3);
    CHECK(v.signature.consts == std::vector<std::string>{"0"});
    CHECK(v.equations.size() == 8);
    CHECK(v.equations[0].to_string() == "p1(a,0,0) = a");
}

TEST_CASE("parse_variety accepts an empty presentation")
{
    VarietyPresentation v = parse_variety("variety T { }");
    CHECK(v.name == "T");
    CHECK(v.signature.ops.empty());
    CHECK(v.signature.consts.empty());
    CHECK(v.equations.empty());
}

TEST_CASE("parse_variety rejects arity mismatches with position info")
{
    const char * bad = "variety V { op p/3; eq p(a,b) = a; }";
    try {
        parse_variety(bad);
        FAIL("expected ParseError");
    }
    catch (const ParseError & e) {
        CHECK(e.line == 1);
        CHECK(std::string(e.what()).find("arity mismatch") != std::string::npos);
    }
}

TEST_CASE("parse_variety rejects duplicates and unknown symbols")
{
    CHECK_THROWS_AS(parse_variety("variety V { op p/3; op p/2; }"), ParseError);
    CHECK_THROWS_AS(parse_variety("variety V { op p/1; const p; }"), ParseError);
    // q never declared: bare q(a) is an unknown operation
    CHECK_THROWS_AS(parse_variety("variety V { op p/1; eq p(q(a)) = a; }"), ParseError);
    // constant used with arguments
    CHECK_THROWS_AS(parse_variety("variety V { const 0; eq 0(a) = a; }"), ParseError);
    // stray token
    CHECK_THROWS_AS(parse_variety("variety V { size 3; }"), ParseError);
    CHECK_THROWS_AS(parse_variety("variety V { } trailing"), ParseError);
}

TEST_CASE("equations may precede the declarations they use")
{
    VarietyPresentation v = parse_variety("variety V { eq m(x,e) = x; op m/2; const e; }");
    CHECK(v.equations.size() == 1);
    CHECK(v.equations[0].lhs.kind == Term::Kind::Apply);
    CHECK(v.equations[0].rhs.kind == Term::Kind::Variable);
}

TEST_CASE("parse_algebra reads the Z2 group table")
{
    VarietyPresentation grp = parse_variety(
        "variety Grp { op mul/2; op inv/1; const e;"
        " eq mul(mul(x,y),z) = mul(x,mul(y,z));"
        " eq mul(x,e) = x; eq mul(e,x) = x;"
        " eq mul(x,inv(x)) = e; eq mul(inv(x),x) = e; }");

    const char * z2 = R"(
algebra Z2 : Grp {
  size 2;
  mul : [0,1,1,0];
  inv : [0,1];
  e = 0;
}
)";
    FiniteAlgebra a = parse_algebra(z2, grp);
    CHECK(a.name == "Z2");
    CHECK(a.size == 2);
    CHECK(a.tables[0] == std::vector<int>{0, 1, 1, 0});
    CHECK(a.consts == std::vector<int>{0});
    CHECK(check_identities(a, grp.equations).satisfied);
}

TEST_CASE("parse_algebra rejects malformed tables")
{
    VarietyPresentation v = parse_variety("variety V { op f/1; }");

    // wrong length
    CHECK_THROWS_AS(parse_algebra("algebra A : V { size 3; f : [0,1]; }", v), ParseError);
    // entry out of range
    CHECK_THROWS_AS(parse_algebra("algebra A : V { size 3; f : [0,1,7]; }", v), ParseError);
    // unknown op
    CHECK_THROWS_AS(parse_algebra("algebra A : V { size 3; g : [0,1,2]; }", v), ParseError);
    // missing table
    CHECK_THROWS_AS(parse_algebra("algebra A : V { size 3; }", v), Error);
    // wrong variety name
    CHECK_THROWS_AS(parse_algebra("algebra A : W { size 3; f : [0,1,2]; }", v), ParseError);
}

TEST_CASE("pretty-print round trips")
{
    VarietyPresentation v = parse_variety(hex3_src);
    std::string printed = pretty_print(v);
    VarietyPresentation again = parse_variety(printed);
    CHECK(again == v);
    CHECK(pretty_print(again) == printed);

    FiniteAlgebra a;
    a.name = "T";
    a.signature = v.signature;
    a.size = 1;
    a.tables = {{0}, {0}, {0}};
    a.consts = {0};
    std::string alg_printed = pretty_print(a, v.name);
    FiniteAlgebra b = parse_algebra(alg_printed, v);
    CHECK(b.size == a.size);
    CHECK(b.tables == a.tables);
    CHECK(b.consts == a.consts);
    CHECK(pretty_print(b, v.name) == alg_printed);
}

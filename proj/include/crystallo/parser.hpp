#ifndef CRYSTALLO_PARSER_HPP
#define CRYSTALLO_PARSER_HPP

#include "crystallo/algebra.hpp"
#include "crystallo/terms.hpp"

#include <string>

namespace crystallo {

// Spec-language grammar (UTF-8, '#' line comments):
//
//   variety   := "variety" NAME "{" (opdecl | constdecl | eqdecl)* "}"
//   opdecl    := "op" NAME "/" INT ";"
//   constdecl := "const" NAME ";"
//   eqdecl    := "eq" term "=" term ";"
//   term      := NAME | NAME "(" term ("," term)* ")"
//   algebra   := "algebra" NAME ":" NAME "{" "size" INT ";" (tabledecl | constassign)* "}"
//   tabledecl := NAME ":" "[" (INT ("," INT)*)? "]" ";"   row-major, first argument most significant
//   constassign := NAME "=" INT ";"
//
// NAME is an identifier or a bare numeral (so "0" and "1" work as constant
// names). Throws ParseError with position and expectation on rejection.

VarietyPresentation parse_variety(const std::string & text);

// Parses an algebra over v's signature; tables must be complete and
// entries in range. Does not check v's equations.
FiniteAlgebra parse_algebra(const std::string & text, const VarietyPresentation & v);

}

#endif

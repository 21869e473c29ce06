#ifndef CRYSTALLO_TERMS_HPP
#define CRYSTALLO_TERMS_HPP

#include <string>
#include <vector>

namespace crystallo {

struct OpDecl {
    std::string name;
    int arity = 0;
    bool operator==(const OpDecl &) const = default;
};

// Operation symbols with positive arity plus arity-0 constants. Names are
// plain tokens; numerals like "0" or "1" are legal constant names.
struct Signature {
    std::vector<OpDecl> ops;
    std::vector<std::string> consts;

    int op_index(const std::string & name) const;
    int const_index(const std::string & name) const;
    bool has_name(const std::string & name) const;
    void validate() const;

    bool operator==(const Signature &) const = default;
};

struct Term {
    enum class Kind { Variable, Constant, Apply };

    Kind kind = Kind::Variable;
    std::string name;
    std::vector<Term> args;

    static Term var(std::string n);
    static Term cons(std::string n);
    static Term apply(std::string n, std::vector<Term> a);

    bool operator==(const Term &) const;

    // Variables in first-appearance order, left to right, no duplicates.
    void collect_variables(std::vector<std::string> & out) const;

    std::string to_string() const;
};

struct Equation {
    Term lhs;
    Term rhs;

    bool operator==(const Equation &) const;
    std::string to_string() const;

    // Variables of both sides, lhs first, first-appearance order.
    std::vector<std::string> variables() const;
};

struct VarietyPresentation {
    std::string name;
    Signature signature;
    std::vector<Equation> equations;

    void validate() const;
    bool operator==(const VarietyPresentation &) const = default;
};

// Throws ValidationError unless every Apply node names a declared op with
// the right argument count, every Constant a declared constant, and no
// Variable shadows a signature name.
void validate_term(const Term & t, const Signature & sig);

// Normalized spec-language source for a presentation; parses back to an
// equal value.
std::string pretty_print(const VarietyPresentation & v);

// True when lhs and rhs are equal up to a consistent renaming of variables.
bool equal_up_to_renaming(const Equation & a, const Equation & b);

}

#endif

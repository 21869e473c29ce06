#ifndef CRYSTALLO_ERRORS_HPP
#define CRYSTALLO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crystallo {

// Base class for everything this library throws on bad input.
struct Error : std::runtime_error {
    explicit Error(const std::string & what) : std::runtime_error(what) {}
};

// Source-level rejection: syntax errors, arity mismatches, duplicate or
// unknown names. Carries a 1-based position into the rejected text.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int l, int c, const std::string & what)
        : Error("line " + std::to_string(l) + ", col " + std::to_string(c) + ": " + what),
          line(l), column(c) {}
};

// Structural invariant failures on already-parsed data (bad table sizes,
// out-of-range entries, incompatible signatures, corrupted congruences).
struct ValidationError : Error {
    explicit ValidationError(const std::string & what) : Error(what) {}
};

// A hard cap was exceeded (brute-force oracle domain, congruence lattice
// materialization). Distinct from budget truncation, which is a result flag.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string & what) : Error(what) {}
};

}

#endif

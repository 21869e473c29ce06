#ifndef CRYSTALLO_ALGEBRA_HPP
#define CRYSTALLO_ALGEBRA_HPP

#include "crystallo/terms.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace crystallo {

// Finite algebra on carrier {0..size-1}. One flat row-major table per
// operation: index = x1*n^(k-1) + ... + xk (first argument most
// significant). size = 0 is allowed only for constant-free signatures.
struct FiniteAlgebra {
    std::string name;
    Signature signature;
    int size = 0;
    std::vector<std::vector<int>> tables;  // tables[i].size() == size^arity(i)
    std::vector<int> consts;               // one element per signature constant

    void validate() const;

    int apply(int op, std::span<const int> args) const;
    int const_element(int c) const { return consts[c]; }

    // Tables-and-constants key, used for deterministic ordering and equality
    // of algebras over a fixed signature.
    std::vector<int> table_key() const;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

AlgebraPtr make_algebra(FiniteAlgebra a);

// --- term semantics -------------------------------------------------------

using Env = std::map<std::string, int>;

// Structural evaluation of t in a; throws on unbound variables.
int eval_term(const Term & t, const FiniteAlgebra & a, const Env & env);

struct IdentityViolation {
    std::size_t equation = 0;
    Env assignment;        // first violating assignment, lexicographic scan
    int lhs_value = 0;
    int rhs_value = 0;
    std::uint64_t total = 0;  // violating assignments for this equation
};

struct SatisfactionReport {
    bool satisfied = true;
    std::vector<IdentityViolation> violations;  // one entry per failed equation
};

// Exhaustively tests every assignment of carrier elements to variables
// (variables ordered by first appearance, values odometer-style with the
// first variable most significant), so the first counterexample per
// equation is deterministic.
SatisfactionReport check_identities(const FiniteAlgebra & a, const std::vector<Equation> & eqs);

// --- homomorphisms ---------------------------------------------------------

struct Homomorphism {
    AlgebraPtr dom;
    AlgebraPtr cod;
    std::vector<int> map;  // length dom->size, entries in [0, cod->size)

    int operator()(int x) const { return map[x]; }

    // Throws ValidationError when map is not compatible with every
    // operation and constant.
    static Homomorphism checked(AlgebraPtr dom, AlgebraPtr cod, std::vector<int> map);
};

bool is_homomorphism(const FiniteAlgebra & dom, const FiniteAlgebra & cod,
                     const std::vector<int> & map);

Homomorphism identity_hom(AlgebraPtr a);
Homomorphism compose(const Homomorphism & g, const Homomorphism & f);  // g after f

// Backtracking over the map array with per-assignment compatibility
// pruning; results in lexicographic order of map arrays.
std::vector<Homomorphism> enumerate_homs(AlgebraPtr a, AlgebraPtr b, bool only_bijective = false);

// Same search, but entries already set in seed (>= 0) are kept fixed and
// at most max_results maps are returned (0 = no limit).
std::vector<Homomorphism> enumerate_homs_seeded(AlgebraPtr a, AlgebraPtr b,
                                                const std::vector<int> & seed,
                                                std::size_t max_results = 0);

// --- constructions in the category ----------------------------------------

struct ProductResult {
    AlgebraPtr algebra;                    // mixed-radix carrier, first factor most significant
    std::vector<Homomorphism> projections;
};

ProductResult product(const std::vector<AlgebraPtr> & factors);

// Least subset of the carrier containing seed and all constants, closed
// under all operations. Returned sorted.
std::vector<int> subalgebra_closure(const FiniteAlgebra & a, const std::vector<int> & seed);

// The subalgebra on a closed element set, relabeled 0..k-1 in sorted order,
// together with its inclusion homomorphism.
struct SubalgebraResult {
    AlgebraPtr algebra;
    Homomorphism inclusion;
};
SubalgebraResult subalgebra(AlgebraPtr a, const std::vector<int> & closed_elements);

struct Congruence;  // congruences.hpp

struct QuotientResult {
    AlgebraPtr algebra;       // classes labeled 0..k-1 by least representative
    Homomorphism projection;
};
QuotientResult quotient(AlgebraPtr a, const Congruence & c);

// --- finite model enumeration ----------------------------------------------

struct ModelEnumeration {
    std::vector<AlgebraPtr> models;  // lexicographic by (consts, tables)
    bool truncated = false;
    std::uint64_t nodes = 0;
};

// All algebras of the given size satisfying v's equations, by backtracking
// over table entries with equation propagation. Constants listed in
// `pinned` are fixed to the given elements. Budget is a node count over
// attempted assignments; on exhaustion the stream is flagged truncated.
ModelEnumeration enumerate_models(const VarietyPresentation & v, int size,
                                  std::uint64_t budget = 10'000'000,
                                  const std::map<std::string, int> & pinned = {});

// Lexicographically least table key under carrier permutations. Brute
// force over n! permutations; refuses n > 6.
std::vector<int> canonical_key(const FiniteAlgebra & a);

// Keeps only models whose key is canonical (one representative per
// isomorphism class).
std::vector<AlgebraPtr> canonical_filter(const std::vector<AlgebraPtr> & models);

// Relabel an algebra along a carrier permutation: perm[i] = new label of i.
FiniteAlgebra relabel(const FiniteAlgebra & a, const std::vector<int> & perm);

// Normalized spec-language source; parses back to an equal algebra.
std::string pretty_print(const FiniteAlgebra & a, const std::string & variety_name);

}

#endif

#ifndef CRYSTALLO_CONSTRUCTIONS_HPP
#define CRYSTALLO_CONSTRUCTIONS_HPP

#include "crystallo/algebra.hpp"
#include "crystallo/terms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crystallo {

// --- built-in presentations -------------------------------------------------
//
// Catalog names: Hex3, CM3, CHyper (takes k), Imp, Grp, AbGrp, ComMon,
// Disc, Mal, PtMag. Hex3 equals CHyper with k = 1.

VarietyPresentation builtin_variety(const std::string & name, int k = 0);

std::vector<std::string> builtin_variety_names();

// The 2k+1-term schema: p1(a,0,0)=a; pi(a,0,a)=a for 2<=i<=2k;
// p{2k+1}(0,0,a)=a; p{2i-1}(a,a,b)=p{2i}(a,a,b); p{2i}(a,b,b)=p{2i+1}(a,b,b);
// pi(b,b,b)=b for all i.
std::vector<Equation> chyper_schema(int k, const std::vector<std::string> & op_names);

// --- functors ---------------------------------------------------------------

// Hex3 algebra on a group carrier: p1(x,y,z) = x*inv(y)*z, p2 = p3 = third
// projection. Input must satisfy the Grp equations.
AlgebraPtr apply_h(const AlgebraPtr & group);

// Hex3 algebra on F_p^d (p an odd prime): with half = inverse of 2 mod p,
// p1(x,y,z) = x+(z-y)*half, p2 = (x+z)*half, p3 = (x-y)*half+z, computed
// componentwise.
AlgebraPtr apply_w(int p, int d);

// CM3 algebra on a Mal'tsev carrier: p1 = p, p2 = p3 = third projection.
// Input needs a single ternary operation satisfying the Mal'tsev identities.
AlgebraPtr apply_m(const AlgebraPtr & maltsev);

// CM3 algebra on F_p^d with the same three vector formulas as apply_w.
AlgebraPtr apply_a(int p, int d);

// --- sample factories ---------------------------------------------------------

AlgebraPtr cyclic_group(int n);                    // Grp
AlgebraPtr klein_group();                          // Grp, xor on {0..3}
AlgebraPtr fp_vector_space(int p, int d);          // AbGrp
AlgebraPtr cyclic_monoid(int n);                   // ComMon, addition mod n
AlgebraPtr max_monoid();                           // ComMon on {0,1} with max
AlgebraPtr discriminator(int n);                   // Disc, t(x,y,z) = z if x==y else x
AlgebraPtr boolean_implication(int atoms);         // Imp reduct of the 2^atoms Boolean algebra
AlgebraPtr one_element(const VarietyPresentation & v);
AlgebraPtr empty_algebra(const VarietyPresentation & v);  // constant-free signatures only
AlgebraPtr affine_maltsev(int p, int d);           // Mal, p(x,y,z) = x-y+z on F_p^d

// Pointed magma with a constant binary operation; the product span over a
// pair of these violates the congruence-hyperextensibility condition.
AlgebraPtr constant_pointed_magma();               // PtMag on {0,1}, b == 0

// Four-element algebra with one identity operation: every partition is a
// congruence, and the Shifting Lemma fails on it.
AlgebraPtr shifting_violation_fixture();

// Jonsson-Tarski magma of size 3 whose two-element subalgebras {0,1} and
// {0,2} admit no cooperator (pinned by exhaustive search).
AlgebraPtr jt_noncommuting_fixture();

// Resolves catalog algebras by token name (hZ2, wF3_1, Z4, disc3, ...).
AlgebraPtr builtin_algebra(const std::string & name);
std::vector<std::string> builtin_algebra_names();

// The paper's Hex3 sample set: h(Z2), h(Z3), h(Z4), h(Klein), w(F3,1),
// w(F5,1), w(F3,2) and all pairwise products.
std::vector<AlgebraPtr> paper71_samples();

// Catalog algebras of carrier size <= 3, one list for oracle sweeps.
std::vector<AlgebraPtr> builtin_small_algebras();

// Resolves "builtin:<set>" sample URIs: paper7.1, groups234, disc23, small.
std::vector<AlgebraPtr> builtin_sample_set(const std::string & name);

// --- CHyper padding -----------------------------------------------------------

struct PadItem {
    Equation schema_equation;   // over the padded op names
    Equation translated;        // rewritten through the definition map
    enum class How { Syntactic, AxiomMatch, Semantic, Unverified } how = How::Unverified;
    int axiom = -1;             // index into the source presentation for AxiomMatch
};

struct PadResult {
    VarietyPresentation padded;     // type 2k+3
    std::vector<int> definition;    // padded op i is the source op definition[i]
    std::vector<PadItem> items;
    bool verified = false;
};

// Pads a CHyper-shaped presentation of type 2k+1 to type 2k+3 by
// duplicating the tail pair, then checks every target schema equation by
// (i) syntactic identity, (ii) matching a source axiom up to renaming, or
// (iii) a semantic check on the supplied models. Throws ValidationError
// when the input does not match the schema.
PadResult pad_chyper(const VarietyPresentation & v,
                     const std::vector<AlgebraPtr> & models = {});

}

#endif

#pragma once

#include <map>
#include <optional>
#include <tuple>

#include "ncmops/errors.hpp"
#include "ncmops/state.hpp"

namespace ncmops {

// A monic polynomial family indexed by all words up to a degree bound,
// together with the squared seminorm of each member. Invariants: P_u is
// monic with leading word u and no other terms of degree >= |u|; norm_sq
// agrees with seminorm_sq of the stored polynomial.
struct MonicFamily {
    int d = 1;
    int degree_bound = 0;
    std::map<Word, NcPolynomial> polynomials;
    std::map<Word, Rat> norm_sq;

    const NcPolynomial& poly(const Word& u) const;
    const Rat& norm(const Word& u) const;
};

// A pair of equal-length words whose family members fail to be orthogonal.
struct OrthogonalityWitness {
    Word u, w;
    Rat value;  // the nonzero inner product <P_u, P_w>
};

struct NotOrthogonalError : Error {
    NotOrthogonalError(OrthogonalityWitness witness_, const std::string& what)
        : Error(what), witness(std::move(witness_)) {}
    OrthogonalityWitness witness;
};

// Orthogonalizes each monomial against the strictly lower degrees only,
// skipping members of zero seminorm; never orthogonalizes within a degree.
// Requires 2*degree <= bound.
MonicFamily gram_schmidt(const State& s, int degree);

struct MopsResult {
    bool has_mops = true;
    // First failing pair (u before w in degree-lex order) when !has_mops.
    std::optional<OrthogonalityWitness> witness;
    // The family built along the way (the orthogonal system when has_mops).
    MonicFamily family;
};

// Decides whether s admits a monic orthogonal polynomial system up to
// `degree`: the Gram-Schmidt family is the only candidate, so the decision
// is a scan of its equal-degree inner products.
MopsResult has_mops(const State& s, int degree);

struct RelationWitness {
    Word u, w;
    Rat lhs, rhs;
};

struct RelationResult {
    bool holds = true;
    std::optional<RelationWitness> witness;  // first failing pair
};

// Checks the moment identity that characterizes orthogonality: for every
// pair of distinct equal-length words u, w of length <= degree,
//   <x_u, x_w> = sum over |v| < |u|, <P_v,P_v> != 0 of
//                <x_u, P_v> <P_v, x_w> / <P_v, P_v>.
// Requires 2*degree <= bound.
RelationResult check_relation0(const State& s, int degree);

// The recursion presentation: for each letter i and word u,
//   x_i P_u = P_{(i,u)} + sum_{|w| = |u|} B_{i,w,u} P_w
//                       + [i = u(1)] C_u P_{(u(2)..)}.
// C covers 1 <= |u| <= depth, B covers |w| = |u| <= depth - 1 (stored
// densely, zeros included).
struct RecursionCoefficients {
    int d = 1;
    int depth = 0;
    std::map<Word, Rat> C;
    std::map<std::tuple<int, Word, Word>, Rat> B;
};

// Reads the coefficients off an orthogonal family for s: C_u is the ratio of
// consecutive squared norms, B_{i,w,u} the projection of x_i P_u onto P_w.
// Verifies the family is orthogonal (throws NotOrthogonalError otherwise)
// and that the coefficients satisfy C >= 0, the weighted symmetry
// B_{i,w,u} K_w = K_u B_{i,u,w} (K = suffix products of C), and that
// cross terms against lower degrees vanish. Requires depth <= family bound
// and 2*depth <= bound.
RecursionCoefficients extract_recursion(const State& s, const MonicFamily& family, int depth);

// True iff every recursion line holds in L2(phi): the defect of each line
// has zero seminorm. Requires coeffs.depth <= family.degree_bound and
// 2*coeffs.depth <= bound.
bool verify_recursion(const MonicFamily& family, const RecursionCoefficients& coeffs, const State& s);

}  // namespace ncmops

#pragma once

#include <vector>

#include "ncmops/mops.hpp"

namespace ncmops {

// The moment matrix over all words shorter than the target plus the target
// itself, indexed in degree-lex order (target last): entry (v, w) is
// <x_v, x_w>. Requires 2*|target| <= bound.
struct HankelFrame {
    int d = 1;
    Word target;
    std::vector<Word> index;
    RatMatrix matrix;
};

HankelFrame build_frame(const State& s, const Word& target);

// Determinant of the frame of `target`.
Rat frame_det(const State& s, const Word& target);

// Determinant of the frame with the target row and column removed: the Gram
// determinant over all words of length < degree. Equals 1 at degrees 0 and 1
// (empty and single-entry matrices). Requires 2*(degree-1) <= bound.
Rat basis_det(const State& s, int degree);

// Determinant of the frame of `target` with the target row replaced by the
// inner products <x_probe, x_w> over the frame index. Requires moments up to
// max(2*|target| - 1, |probe| + |target|).
Rat cross_det(const State& s, const Word& probe, const Word& target);

// The frame of `target` with the target row replaced by the index monomials
// themselves, expanded by cofactors along that row into a polynomial. Its
// coefficient on x_target is basis_det(s, |target|), and it is orthogonal to
// every monomial of lower degree. Requires 2*|target| <= bound.
NcPolynomial det_polynomial(const State& s, const Word& target);

// The determinantal monic family P_u = det_polynomial(u) / basis_det(|u|)
// for all |u| <= degree. Throws NotFaithfulError when a Gram determinant
// vanishes at some degree <= `degree` (reporting that degree).
MonicFamily hankel_family(const State& s, int degree);

// The determinantal form of the moment identity: for distinct equal-length
// u, w up to `degree`,
//   <x_u, x_w> = sum over |v| < |u|, frame_det(v) != 0 of
//     cross_det(u,v) * cross_det(w,v) / (frame_det(v) * basis_det(|v|)).
// Requires the same nonvanishing Gram determinants as hankel_family.
RelationResult check_relation1(const State& s, int degree);

}  // namespace ncmops

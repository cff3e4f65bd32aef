#pragma once

#include <vector>

#include "ncmops/mops.hpp"

namespace ncmops {

// One-variable three-term recursion data: x P_n = P_{n+1} + a_n P_n + b_n P_{n-1}.
// a has one entry per level 0..K, b one nonnegative entry per level 1..K.
struct JacobiData {
    std::vector<Rat> a;
    std::vector<Rat> b;
};

// Reference orthogonalization: for each word solves the full normal equations
// against every lower-degree monomial by exact Gaussian elimination, setting
// the coefficients of dependent columns to zero. Independent of gram_schmidt;
// agrees with it in L2(s), exactly when s is faithful. Requires 2n <= s.bound.
MonicFamily dense_orthogonalize(const State& s, int n);

// Moments 0..m of the tridiagonal operator with diagonal a and off-diagonal
// weights b, via explicit powers of the (K+1)x(K+1) truncation. Exact for
// m <= 2K+1 because a closed walk of length m never leaves the first
// floor(m/2) + 1 rows.
std::vector<Rat> jacobi_moments(const JacobiData& j, int m);

}  // namespace ncmops

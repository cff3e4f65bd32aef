#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncmops/mops.hpp"

namespace ncmops {

// Matricial data for the truncated deformed full Fock construction: one
// nonnegative diagonal weight per basis word of each level 1..depth, and one
// square level-preserving matrix per letter and level 0..depth. Valid data
// satisfies the transpose compatibility with the kernel weights:
//   T[v][u] * kernel(v) == kernel(u) * T[u][v]  per letter and level.
struct FockData {
    int d = 1;
    int depth = 0;
    // weights[k-1] is complete over all words of length k.
    std::vector<std::map<Word, Rat>> weights;
    // preservation[i-1][k] acts on level k; square of dimension d^k, columns
    // indexed by source word, rows by image word, both in lexicographic order.
    std::vector<std::vector<RatMatrix>> preservation;

    const Rat& weight(const Word& u) const;  // 1 <= |u| <= depth
    const RatMatrix& preservation_at(int letter, int level) const;
};

// A finitely supported element of the truncated Fock space; a word of length
// k stands for the basis tensor e_{u(1)} x ... x e_{u(k)}, the empty word
// for the vacuum.
class FockVector {
public:
    explicit FockVector(int alphabet);

    int alphabet() const { return alphabet_; }
    const std::map<Word, Rat>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    int max_level() const;  // 0 for the zero vector and the vacuum
    Rat coefficient(const Word& w) const;
    void add_term(const Word& w, const Rat& c);

    FockVector& operator+=(const FockVector& rhs);
    FockVector& operator*=(const Rat& scalar);
    bool operator==(const FockVector& other) const = default;

private:
    int alphabet_;
    std::map<Word, Rat> entries_;
};

FockVector vacuum(int alphabet);
FockVector basis_vector(const Word& u);

// Product of the diagonal weights over all suffixes of u; 1 on the vacuum.
// Requires |u| <= depth.
Rat kernel_coeff(const FockData& data, const Word& u);

// The deformed pairing: sum over words of the products of coefficients times
// the kernel weight. Symmetric and positive semidefinite for valid data.
// Requires both supports within depth.
Rat c_inner(const FockData& data, const FockVector& a, const FockVector& b);

// Creation prepends the letter (support must stay within depth when used
// through apply_X; creation itself needs no stored data).
FockVector apply_creation(int letter, const FockVector& v);

// The weighted annihilator: e_u -> weight(u) * [letter == u(1)] * e_{u(2)..},
// vacuum -> 0. Requires support within depth.
FockVector apply_annihilation_tilde(const FockData& data, int letter, const FockVector& v);

// Level-preserving action by the stored matrices. Requires support within
// depth.
FockVector apply_preservation(const FockData& data, int letter, const FockVector& v);

// X = creation + preservation + weighted annihilation. Requires support
// within depth - 1 so the creation part stays representable.
FockVector apply_X(const FockData& data, int letter, const FockVector& v);

// phi(x_u) = <vacuum, X_{u(1)} ... X_{u(k)} vacuum>; defined for
// |u| <= 2*depth + 1, since a walk of length m from the vacuum back to the
// vacuum never exceeds level floor(m/2).
Rat fock_moment(const FockData& data, const Word& u);

struct FockCheckReport {
    bool ok = true;
    std::string violation;  // empty when ok
};

// Checks the FockData invariants exactly: complete nonnegative weights,
// square matrices of the right dimensions, the transpose compatibility per
// letter and level, and (as an internal consistency test) the symmetry of
// each X with respect to the deformed pairing on basis pairs up to
// depth - 1.
FockCheckReport validate_fock_data(const FockData& data);

// The level-k basis words with vanishing kernel coefficient. Requires
// k <= depth.
std::vector<Word> kernel_subspace(const FockData& data, int k);

// The monic family carried by the recursion encoded in the data; each member
// applied to the vacuum yields exactly its basis tensor (verified), and the
// stored squared norms are the kernel coefficients. Requires n <= depth.
MonicFamily mops_vectors(const FockData& data, int n);

// Inverts the construction: reads weights and preservation matrices off a
// monic orthogonal family for s. Requires 2*depth + 1 <= s.bound and family
// bound >= depth; throws NotOrthogonalError when the family is not
// orthogonal. The result passes validate_fock_data, and its state agrees
// with s on all words of degree <= 2*depth + 1.
FockData extract_fock_data(const State& s, const MonicFamily& family, int depth);

// State adapter over Fock data, with bound 2*depth + 1; moments are memoized.
class FockState final : public State {
public:
    explicit FockState(FockData data);
    int alphabet() const override { return data_.d; }
    int bound() const override { return 2 * data_.depth + 1; }
    Rat moment(const Word& w) const override;
    const FockData& data() const { return data_; }

private:
    FockData data_;
    mutable std::map<Word, Rat> cache_;
};

}  // namespace ncmops

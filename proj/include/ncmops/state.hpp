#pragma once

#include <map>
#include <optional>
#include <string>

#include "ncmops/linalg.hpp"
#include "ncmops/polynomial.hpp"

namespace ncmops {

// A state presented extensionally: one moment phi(x_u) for every word with
// |u| <= max_degree. Valid tables are complete, unital (phi(1) = 1),
// compatible with word reversal, and have a positive semidefinite Gram
// matrix at degree max_degree/2; max_degree is even so that Gram matrix is
// fully funded.
struct MomentTable {
    int d = 1;
    int max_degree = 0;
    std::map<Word, Rat> moments;
};

// Uniform access to a state: a deterministic moment evaluator with a declared
// degree bound. Queries beyond the bound throw BoundError.
class State {
public:
    virtual ~State() = default;
    virtual int alphabet() const = 0;
    virtual int bound() const = 0;
    virtual Rat moment(const Word& w) const = 0;
};

class TableState final : public State {
public:
    explicit TableState(MomentTable table);
    int alphabet() const override { return table_.d; }
    int bound() const override { return table_.max_degree; }
    Rat moment(const Word& w) const override;

private:
    MomentTable table_;
};

// phi(p); requires deg p <= bound.
Rat apply(const State& s, const NcPolynomial& p);

// <p, q> = phi(p* q); bilinear (real scalars).
Rat inner(const State& s, const NcPolynomial& p, const NcPolynomial& q);

// <p, p>; nonnegative for valid states but computed, not assumed.
Rat seminorm_sq(const State& s, const NcPolynomial& p);

// The matrix of <x_v, x_w> over enumerate_words(d, degree) in degree-lex
// order; requires 2*degree <= bound.
RatMatrix gram_matrix(const State& s, int degree);

struct StateCheckReport {
    bool ok = true;
    std::string violation;                    // empty when ok
    std::optional<Word> word;                 // first offending word, when applicable
    std::optional<NcPolynomial> certificate;  // p with phi(p* p) < 0, when applicable
};

// Verifies all MomentTable invariants, reporting the first failure in
// degree-lex scan order. Positivity failures come with an explicit
// polynomial of negative squared seminorm.
StateCheckReport check_state(const MomentTable& table);

// True iff gram_matrix(s, m) is positive definite for every m <= degree
// (equivalently at m = degree: lower Gram matrices are leading principal
// submatrices). Requires 2*degree <= bound.
bool is_faithful_up_to(const State& s, int degree);

// Tabulates s on all words of length <= max_degree; max_degree must be even
// and <= bound.
MomentTable table_from_state(const State& s, int max_degree);

}  // namespace ncmops

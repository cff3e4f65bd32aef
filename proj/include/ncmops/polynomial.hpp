#pragma once

#include <map>
#include <optional>
#include <string>

#include "ncmops/rational.hpp"
#include "ncmops/word.hpp"

namespace ncmops {

// An element of the free algebra R<x_1..x_d>: a finitely supported map from
// words to nonzero coefficients. Zero coefficients are never stored, so the
// zero polynomial is the one with empty support.
class NcPolynomial {
public:
    explicit NcPolynomial(int alphabet);
    static NcPolynomial constant(int alphabet, const Rat& value);
    static NcPolynomial monomial(const Word& w, const Rat& coefficient = Rat(1));

    int alphabet() const { return alphabet_; }
    const std::map<Word, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Degree of the highest term; nullopt marks the zero polynomial.
    std::optional<int> degree() const;
    Rat coefficient(const Word& w) const;  // 0 when absent
    void add_term(const Word& w, const Rat& c);

    // The involution: reverses every word, keeps coefficients (real scalars,
    // nothing to conjugate).
    NcPolynomial star() const;

    NcPolynomial& operator+=(const NcPolynomial& rhs);
    NcPolynomial& operator-=(const NcPolynomial& rhs);
    NcPolynomial& operator*=(const Rat& scalar);

    friend NcPolynomial operator+(NcPolynomial lhs, const NcPolynomial& rhs) { return lhs += rhs; }
    friend NcPolynomial operator-(NcPolynomial lhs, const NcPolynomial& rhs) { return lhs -= rhs; }
    friend NcPolynomial operator*(const Rat& scalar, NcPolynomial p) { return p *= scalar; }
    friend NcPolynomial operator*(const NcPolynomial& lhs, const NcPolynomial& rhs);

    bool operator==(const NcPolynomial& other) const = default;

    std::string to_string() const;  // for diagnostics: "1/1*[] + -2/1*[1]"

private:
    int alphabet_;
    std::map<Word, Rat> terms_;
};

}  // namespace ncmops

#include <doctest.h>

#include <random>

#include "ncmops/fock.hpp"
#include "ncmops/mops.hpp"
#include "ncmops/oracle.hpp"
#include "generators.hpp"

using namespace ncmops;
using testgen::word_of;

namespace {

NcPolynomial x_pow(int k) {
    return NcPolynomial::monomial(Word(1, std::vector<int>(k, 1)));
}

}  // namespace

TEST_CASE("gram_schmidt produces the Chebyshev-like family for Catalan moments") {
    const TableState cat(testgen::catalan_table());
    const MonicFamily fam = gram_schmidt(cat, 4);
    CHECK(fam.d == 1);
    CHECK(fam.degree_bound == 4);
    CHECK(fam.polynomials.size() == 5);
    CHECK(fam.poly(Word(1)) == NcPolynomial::constant(1, Rat(1)));
    CHECK(fam.poly(word_of(1, {1})) == x_pow(1));
    CHECK(fam.poly(word_of(1, {1, 1})) == x_pow(2) - x_pow(0));
    CHECK(fam.poly(word_of(1, {1, 1, 1})) == x_pow(3) - Rat(2) * x_pow(1));
    CHECK(fam.poly(word_of(1, {1, 1, 1, 1})) == x_pow(4) - Rat(3) * x_pow(2) + x_pow(0));
    for (const auto& [u, n] : fam.norm_sq) CHECK(n == Rat(1));
    CHECK_THROWS_AS(gram_schmidt(cat, 5), BoundError);
}

TEST_CASE("gram_schmidt projects against strictly lower degrees only") {
    // Both letters of the duplicated-Gaussian state have mean zero, so the
    // degree-1 members stay plain monomials even though they are far from
    // orthogonal to each other.
    const TableState dup(testgen::gaussian_duplicated_table());
    const MonicFamily fam = gram_schmidt(dup, 1);
    CHECK(fam.poly(word_of(2, {1})) == NcPolynomial::monomial(word_of(2, {1})));
    CHECK(fam.poly(word_of(2, {2})) == NcPolynomial::monomial(word_of(2, {2})));
    CHECK(inner(dup, fam.poly(word_of(2, {1})), fam.poly(word_of(2, {2}))) == Rat(1));
}

TEST_CASE("gram_schmidt output is orthogonal across degrees on valid states") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 8; ++t) {
        const FockState fs(testgen::random_fock_data(rng, 2, 2, t % 2 == 1));
        const MonicFamily fam = gram_schmidt(fs, 2);
        for (const auto& [u, pu] : fam.polynomials) {
            CHECK(fam.norm(u) == seminorm_sq(fs, pu));
            for (const auto& [w, pw] : fam.polynomials)
                if (u.length() != w.length()) CHECK(inner(fs, pu, pw) == Rat(0));
            // Monic with no other terms of the top degree.
            CHECK(pu.coefficient(u) == Rat(1));
            for (const auto& [word, c] : pu.terms())
                if (word != u) CHECK(word.length() < u.length());
        }
    }
}

TEST_CASE("has_mops accepts operator-presented states and rejects the duplicated Gaussian") {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 6; ++t) {
        const FockState fs(testgen::random_fock_data(rng, 2, 2, t % 2 == 1));
        const MopsResult r = has_mops(fs, 2);
        CHECK(r.has_mops);
        CHECK_FALSE(r.witness.has_value());
        CHECK(r.family.polynomials.size() == 7);
    }

    const TableState dup(testgen::gaussian_duplicated_table());
    const MopsResult bad = has_mops(dup, 1);
    CHECK_FALSE(bad.has_mops);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->u == word_of(2, {1}));
    CHECK(bad.witness->w == word_of(2, {2}));
    CHECK(bad.witness->value == Rat(1));

    const FockState semi(testgen::free_fock_data(2, 3));
    CHECK(has_mops(semi, 3).has_mops);
}

TEST_CASE("the moment identity agrees with the direct decision, witness included") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 6; ++t) {
        const FockState fs(testgen::random_fock_data(rng, 2, 2, t % 2 == 1));
        const RelationResult rel = check_relation0(fs, 2);
        CHECK(rel.holds);
        CHECK_FALSE(rel.witness.has_value());
    }

    const TableState dup(testgen::gaussian_duplicated_table());
    const MopsResult direct = has_mops(dup, 1);
    const RelationResult rel = check_relation0(dup, 1);
    CHECK_FALSE(rel.holds);
    REQUIRE(rel.witness.has_value());
    CHECK(rel.witness->u == direct.witness->u);
    CHECK(rel.witness->w == direct.witness->w);
    CHECK(rel.witness->lhs != rel.witness->rhs);

    for (int t = 0; t < 3; ++t) {
        const TableState s(testgen::perturbed_nonmops_table(rng));
        const MopsResult d2 = has_mops(s, 2);
        const RelationResult r2 = check_relation0(s, 2);
        REQUIRE_FALSE(d2.has_mops);
        REQUIRE_FALSE(r2.holds);
        CHECK(r2.witness->u == d2.witness->u);
        CHECK(r2.witness->w == d2.witness->w);
    }
}

TEST_CASE("degree-one instance: mixed means factorize when a system exists") {
    std::mt19937_64 rng(54);
    for (int t = 0; t < 10; ++t) {
        const FockState fs(testgen::random_fock_data(rng, 2, 2, false));
        CHECK(fs.moment(word_of(2, {1, 2}))
              == fs.moment(word_of(2, {1})) * fs.moment(word_of(2, {2})));
    }
}

TEST_CASE("extract_recursion reads the Catalan coefficients") {
    const TableState cat(testgen::catalan_table());
    const MonicFamily fam = gram_schmidt(cat, 3);
    const RecursionCoefficients rc = extract_recursion(cat, fam, 3);
    CHECK(rc.d == 1);
    CHECK(rc.depth == 3);
    CHECK(rc.C.size() == 3);
    for (const auto& [u, c] : rc.C) CHECK(c == Rat(1));
    CHECK(rc.B.size() == 3);  // dense: one entry per level 0..2 for d = 1
    for (const auto& [key, b] : rc.B) CHECK(b == Rat(0));
    CHECK(rc.B.count({1, Word(1), Word(1)}) == 1);
    CHECK(rc.B.count({1, word_of(1, {1}), word_of(1, {1})}) == 1);
    CHECK(rc.B.count({1, word_of(1, {1, 1}), word_of(1, {1, 1})}) == 1);
}

TEST_CASE("extract_recursion recovers Jacobi data from its moments") {
    // Level weights b_k = k give the Gaussian moment sequence 1,0,1,0,3,0,15.
    const JacobiData j{{Rat(0), Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(2), Rat(3)}};
    const std::vector<Rat> ms = jacobi_moments(j, 6);
    CHECK(ms == std::vector<Rat>{1, 0, 1, 0, 3, 0, 15});
    MomentTable t;
    t.d = 1;
    t.max_degree = 6;
    for (int k = 0; k <= 6; ++k) t.moments[Word(1, std::vector<int>(k, 1))] = ms[k];
    const TableState s(t);
    const MonicFamily fam = gram_schmidt(s, 3);
    CHECK(fam.poly(word_of(1, {1, 1, 1})) == x_pow(3) - Rat(3) * x_pow(1));  // Hermite
    const RecursionCoefficients rc = extract_recursion(s, fam, 3);
    CHECK(rc.C.at(word_of(1, {1})) == Rat(1));
    CHECK(rc.C.at(word_of(1, {1, 1})) == Rat(2));
    CHECK(rc.C.at(word_of(1, {1, 1, 1})) == Rat(3));
    for (const auto& [key, b] : rc.B) CHECK(b == Rat(0));
}

TEST_CASE("recursion coefficients: means, weighted symmetry, verification") {
    std::mt19937_64 rng(55);
    for (int t = 0; t < 6; ++t) {
        const FockState fs(testgen::random_fock_data(rng, 2, 2, t % 2 == 1));
        const MonicFamily fam = gram_schmidt(fs, 2);
        const RecursionCoefficients rc = extract_recursion(fs, fam, 2);
        for (int i = 1; i <= 2; ++i)
            CHECK(rc.B.at({i, Word(2), Word(2)}) == fs.moment(word_of(2, {i})));
        for (const auto& [key, b] : rc.B) {
            const auto& [i, w, u] = key;
            CHECK(b * fam.norm(w) == fam.norm(u) * rc.B.at({i, u, w}));
        }
        for (const auto& [u, c] : rc.C) CHECK(c >= 0);
        CHECK(verify_recursion(fam, rc, fs));
    }

    // Perturbing one coefficient breaks a line with nonzero seminorm defect.
    const TableState cat(testgen::catalan_table());
    const MonicFamily fam = gram_schmidt(cat, 3);
    RecursionCoefficients rc = extract_recursion(cat, fam, 3);
    CHECK(verify_recursion(fam, rc, cat));
    rc.B[{1, word_of(1, {1}), word_of(1, {1})}] += 1;
    CHECK_FALSE(verify_recursion(fam, rc, cat));
    rc = extract_recursion(cat, fam, 3);
    rc.C[word_of(1, {1, 1})] += 1;
    CHECK_FALSE(verify_recursion(fam, rc, cat));
}

TEST_CASE("extract_recursion refuses non-orthogonal families") {
    const TableState dup(testgen::gaussian_duplicated_table());
    const MonicFamily fam = gram_schmidt(dup, 1);
    CHECK_THROWS_AS(extract_recursion(dup, fam, 1), NotOrthogonalError);
    try {
        extract_recursion(dup, fam, 1);
    } catch (const NotOrthogonalError& e) {
        CHECK(e.witness.u == word_of(2, {1}));
        CHECK(e.witness.w == word_of(2, {2}));
        CHECK(e.witness.value == Rat(1));
    }
}

TEST_CASE("null members generate a left ideal of null members") {
    std::mt19937_64 rng(56);
    int null_words_seen = 0;
    for (int t = 0; t < 12; ++t) {
        const FockState fs(testgen::random_fock_data(rng, 2, 2, true));
        const MonicFamily fam = gram_schmidt(fs, 2);
        for (const auto& [u, n] : fam.norm_sq) {
            if (n != 0 || u.length() >= 2) continue;
            ++null_words_seen;
            for (int i = 1; i <= 2; ++i) {
                std::vector<int> letters{i};
                letters.insert(letters.end(), u.letters().begin(), u.letters().end());
                CHECK(fam.norm(Word(2, letters)) == Rat(0));
            }
        }
    }
    CHECK(null_words_seen > 0);  // the generator must actually produce degeneracies
}

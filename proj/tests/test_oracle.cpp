#include <doctest.h>

#include <random>

#include "ncmops/fock.hpp"
#include "ncmops/oracle.hpp"
#include "generators.hpp"

using namespace ncmops;
using testgen::word_of;

namespace {

// The d = 1 operator data carrying a three-term recursion: weight b_k and
// diagonal entry a_k at each level.
FockData jacobi_to_fock(const JacobiData& j) {
    const int depth = static_cast<int>(j.b.size());
    FockData data{1, depth, {}, {}};
    for (int k = 1; k <= depth; ++k)
        data.weights.push_back({{Word(1, std::vector<int>(k, 1)), j.b[static_cast<std::size_t>(k) - 1]}});
    std::vector<RatMatrix> matrices;
    for (int k = 0; k <= depth; ++k) {
        RatMatrix m(1, 1);
        m.at(0, 0) = j.a[static_cast<std::size_t>(k)];
        matrices.push_back(std::move(m));
    }
    data.preservation.push_back(std::move(matrices));
    return data;
}

}  // namespace

TEST_CASE("dense_orthogonalize matches Gram-Schmidt on faithful states") {
    const TableState cat(testgen::catalan_table());
    const MonicFamily dense = dense_orthogonalize(cat, 2);
    const MonicFamily gs = gram_schmidt(cat, 2);
    CHECK(dense.polynomials == gs.polynomials);
    CHECK(dense.norm_sq == gs.norm_sq);

    const MonicFamily trivial = dense_orthogonalize(cat, 0);
    CHECK(trivial.polynomials.size() == 1);
    CHECK(trivial.poly(Word(1)) == NcPolynomial::constant(1, Rat(1)));

    std::mt19937_64 rng(91);
    for (int t = 0; t < 5; ++t) {
        const FockState fs(testgen::random_fock_data(rng, 2, 2, false));
        REQUIRE(is_faithful_up_to(fs, 2));
        const MonicFamily df = dense_orthogonalize(fs, 2);
        const MonicFamily gf = gram_schmidt(fs, 2);
        CHECK(df.polynomials == gf.polynomials);
        CHECK(df.norm_sq == gf.norm_sq);
    }
    CHECK_THROWS_AS(dense_orthogonalize(cat, 5), BoundError);
}

TEST_CASE("dense_orthogonalize agrees in seminorm on degenerate states") {
    const TableState dup(testgen::gaussian_duplicated_table());
    const MonicFamily dense = dense_orthogonalize(dup, 2);
    const MonicFamily gs = gram_schmidt(dup, 2);
    std::mt19937_64 rng(92);
    for (int t = 0; t < 5; ++t) {
        const FockState fs(testgen::random_fock_data(rng, 2, 2, true));
        const MonicFamily df = dense_orthogonalize(fs, 2);
        const MonicFamily gf = gram_schmidt(fs, 2);
        for (const auto& [u, p] : df.polynomials) {
            CHECK(seminorm_sq(fs, p - gf.poly(u)) == Rat(0));
            CHECK(df.norm(u) == gf.norm(u));
        }
    }
    for (const auto& [u, p] : dense.polynomials) {
        CHECK(seminorm_sq(dup, p - gs.poly(u)) == Rat(0));
        CHECK(dense.norm(u) == gs.norm(u));
        // Orthogonality against every lower monomial, null directions included.
        for (const Word& v : enumerate_words(2, u.length()))
            if (v.length() < u.length())
                CHECK(inner(dup, NcPolynomial::monomial(v), p) == Rat(0));
    }
}

TEST_CASE("jacobi_moments reproduces the classical sequences") {
    const JacobiData semicircle{{Rat(0), Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(1)}};
    CHECK(jacobi_moments(semicircle, 6) == std::vector<Rat>{1, 0, 1, 0, 2, 0, 5});

    const Rat c = make_rational(3, 2);
    const JacobiData point{{c, c, c}, {Rat(0), Rat(0)}};
    const std::vector<Rat> ms = jacobi_moments(point, 5);
    Rat expected(1);
    for (int k = 0; k <= 5; ++k) {
        CHECK(ms[static_cast<std::size_t>(k)] == expected);
        expected *= c;
    }
}

TEST_CASE("jacobi_moments agrees with the operator walk") {
    std::mt19937_64 rng(93);
    for (int t = 0; t < 8; ++t) {
        const JacobiData j = testgen::random_jacobi(rng, 3, t % 2 == 1);
        const FockData data = jacobi_to_fock(j);
        REQUIRE(validate_fock_data(data).ok);
        const std::vector<Rat> ms = jacobi_moments(j, 7);
        for (int m = 0; m <= 7; ++m)
            CHECK(ms[static_cast<std::size_t>(m)]
                  == fock_moment(data, Word(1, std::vector<int>(static_cast<std::size_t>(m), 1))));
    }
}

TEST_CASE("jacobi_moments validates its input") {
    CHECK_THROWS_AS(jacobi_moments({{Rat(0)}, {Rat(1)}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_moments({{Rat(0), Rat(0)}, {Rat(-1)}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_moments({{Rat(0), Rat(0)}, {Rat(1)}}, 4), BoundError);
    CHECK_THROWS_AS(jacobi_moments({{Rat(0), Rat(0)}, {Rat(1)}}, -1), std::invalid_argument);
    CHECK(jacobi_moments({{Rat(5)}, {}}, 1) == std::vector<Rat>{1, 5});
}

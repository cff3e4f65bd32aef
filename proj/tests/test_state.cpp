#include <doctest.h>

#include <random>

#include "ncmops/errors.hpp"
#include "ncmops/fock.hpp"
#include "ncmops/state.hpp"
#include "generators.hpp"

using namespace ncmops;
using testgen::word_of;

namespace {

// d = 1 table with moments 1, 0, 1, 0, 3 up to degree 4 in each of the two
// duplicated letters; off-diagonal words share the same values, which makes
// x1 - x2 a null vector.
TableState dup_gaussian(int max_degree = 4) {
    return TableState(testgen::gaussian_duplicated_table(max_degree));
}

MomentTable d1_table(std::vector<long> nums, std::vector<long> dens = {}) {
    MomentTable t;
    t.d = 1;
    t.max_degree = static_cast<int>(nums.size()) - 1;
    for (std::size_t k = 0; k < nums.size(); ++k) {
        std::vector<int> letters(k, 1);
        t.moments[Word(1, letters)] = make_rational(nums[k], dens.empty() ? 1 : dens[k]);
    }
    return t;
}

}  // namespace

TEST_CASE("apply evaluates linearly against the table") {
    const TableState cat(testgen::catalan_table());
    CHECK(apply(cat, NcPolynomial::constant(1, Rat(1))) == Rat(1));
    // phi(x^4 - 3 x^2 + 7) = 2 - 3 + 7
    NcPolynomial p(1);
    p.add_term(word_of(1, {1, 1, 1, 1}), Rat(1));
    p.add_term(word_of(1, {1, 1}), Rat(-3));
    p.add_term(Word(1), Rat(7));
    CHECK(apply(cat, p) == Rat(6));
    const NcPolynomial too_long = NcPolynomial::monomial(Word(1, std::vector<int>(9, 1)));
    CHECK_THROWS_AS(apply(cat, too_long), BoundError);
    CHECK_THROWS_AS(cat.moment(word_of(2, {2})), std::invalid_argument);
}

TEST_CASE("inner products follow the involution pairing") {
    const TableState cat(testgen::catalan_table());
    const NcPolynomial x = NcPolynomial::monomial(word_of(1, {1}));
    const NcPolynomial x2 = NcPolynomial::monomial(word_of(1, {1, 1}));
    CHECK(inner(cat, x, x) == Rat(1));
    CHECK(inner(cat, x, x2) == Rat(0));   // odd moment
    CHECK(inner(cat, x2, x2) == Rat(2));  // phi(x^4)
    std::mt19937_64 rng(41);
    const FockState fs(testgen::random_fock_data(rng, 2, 2, false));
    for (int t = 0; t < 30; ++t) {
        const NcPolynomial p = testgen::random_polynomial(rng, 2, 2);
        const NcPolynomial q = testgen::random_polynomial(rng, 2, 2);
        CHECK(inner(fs, p, q) == inner(fs, q, p));  // phi((p*q)*) = phi(q*p)
        CHECK(inner(fs, p + q, p + q) == inner(fs, p, p) + 2 * inner(fs, p, q) + inner(fs, q, q));
    }
}

TEST_CASE("seminorm vanishes exactly on null vectors") {
    const TableState cat(testgen::catalan_table());
    CHECK(seminorm_sq(cat, NcPolynomial(1)) == Rat(0));
    CHECK(seminorm_sq(cat, NcPolynomial::monomial(word_of(1, {1}))) == Rat(1));
    const TableState dup = dup_gaussian();
    const NcPolynomial diff = NcPolynomial::monomial(word_of(2, {1}))
                              - NcPolynomial::monomial(word_of(2, {2}));
    CHECK(seminorm_sq(dup, diff) == Rat(0));
    CHECK(seminorm_sq(dup, NcPolynomial::monomial(word_of(2, {1}))) == Rat(1));
}

TEST_CASE("gram_matrix lays out words in degree-lex order") {
    const TableState cat(testgen::catalan_table());
    RatMatrix g0 = gram_matrix(cat, 0);
    CHECK(g0.rows() == 1);
    CHECK(g0.at(0, 0) == Rat(1));
    RatMatrix g1 = gram_matrix(cat, 1);
    CHECK(g1 == RatMatrix::identity(2));

    const TableState dup = dup_gaussian();
    RatMatrix gd = gram_matrix(dup, 1);
    REQUIRE(gd.rows() == 3);
    CHECK(gd.at(0, 0) == Rat(1));
    CHECK(gd.at(0, 1) == Rat(0));
    CHECK(gd.at(1, 1) == Rat(1));
    CHECK(gd.at(1, 2) == Rat(1));  // the duplicated letters are not orthogonal
    CHECK(gd.at(2, 2) == Rat(1));
    CHECK(gd.is_symmetric());

    // Degree m sits as the leading principal block of degree m+1.
    RatMatrix g2 = gram_matrix(dup, 2);
    CHECK(g2.is_symmetric());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(g2.at(i, j) == gd.at(i, j));
    CHECK_THROWS_AS(gram_matrix(cat, 5), BoundError);
}

TEST_CASE("check_state accepts the reference tables") {
    CHECK(check_state(testgen::catalan_table()).ok);
    CHECK(check_state(testgen::gaussian_duplicated_table()).ok);
    std::mt19937_64 rng(42);
    for (int t = 0; t < 10; ++t) {
        const FockState fs(testgen::random_fock_data(rng, 2, 2, t % 2 == 1));
        CHECK(check_state(table_from_state(fs, 4)).ok);
    }
}

TEST_CASE("check_state pinpoints each violation") {
    MomentTable bad = testgen::catalan_table();
    bad.moments[Word(1)] = Rat(2);
    StateCheckReport r = check_state(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.violation.find("empty word") != std::string::npos);

    // Negative-variance table: phi(x^2) = -1.
    r = check_state(d1_table({1, 0, -1}, {1, 1, 1}));
    CHECK_FALSE(r.ok);
    REQUIRE(r.certificate.has_value());
    const TableState s(d1_table({1, 0, -1}));
    CHECK(seminorm_sq(s, *r.certificate) < 0);

    MomentTable herm;
    herm.d = 2;
    herm.max_degree = 2;
    for (const Word& w : enumerate_words(2, 2)) herm.moments[w] = Rat(0);
    herm.moments[Word(2)] = Rat(1);
    herm.moments[word_of(2, {1, 1})] = Rat(1);
    herm.moments[word_of(2, {2, 2})] = Rat(1);
    herm.moments[word_of(2, {1, 2})] = Rat(1);
    herm.moments[word_of(2, {2, 1})] = Rat(0);
    r = check_state(herm);
    CHECK_FALSE(r.ok);
    CHECK(r.violation.find("reversal") != std::string::npos);
    REQUIRE(r.word.has_value());
    CHECK(*r.word == word_of(2, {1, 2}));

    MomentTable missing = testgen::catalan_table();
    missing.moments.erase(word_of(1, {1, 1}));
    r = check_state(missing);
    CHECK_FALSE(r.ok);
    CHECK(r.violation.find("missing") != std::string::npos);
    REQUIRE(r.word.has_value());
    CHECK(*r.word == word_of(1, {1, 1}));

    MomentTable odd = testgen::catalan_table();
    odd.max_degree = 7;
    odd.moments.erase(word_of(1, {1, 1, 1, 1, 1, 1, 1, 1}));
    r = check_state(odd);
    CHECK_FALSE(r.ok);
    CHECK(r.violation.find("even") != std::string::npos);

    MomentTable extra = testgen::catalan_table();
    extra.moments[word_of(1, {1, 1, 1, 1, 1, 1, 1, 1, 1})] = Rat(0);
    r = check_state(extra);
    CHECK_FALSE(r.ok);
    CHECK(r.violation.find("extra") != std::string::npos);

    MomentTable bad_d = testgen::catalan_table();
    bad_d.d = 0;
    CHECK_FALSE(check_state(bad_d).ok);
}

TEST_CASE("faithfulness is definiteness of the Gram matrices") {
    const TableState cat(testgen::catalan_table());
    CHECK(is_faithful_up_to(cat, 0));
    CHECK(is_faithful_up_to(cat, 2));
    CHECK_FALSE(is_faithful_up_to(dup_gaussian(), 1));
    CHECK_FALSE(is_faithful_up_to(dup_gaussian(), 2));
    std::mt19937_64 rng(43);
    const FockState faithful(testgen::random_fock_data(rng, 2, 2, false));
    CHECK(is_faithful_up_to(faithful, 2));
}

TEST_CASE("Cauchy-Schwarz and null absorption hold on tabulated states") {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 20; ++t) {
        const bool degenerate = t % 2 == 1;
        const FockState fs(testgen::random_fock_data(rng, 2, 2, degenerate));
        const NcPolynomial p = testgen::random_polynomial(rng, 2, 2);
        const NcPolynomial q = testgen::random_polynomial(rng, 2, 2);
        const Rat ip = inner(fs, p, q);
        CHECK(ip * ip <= seminorm_sq(fs, p) * seminorm_sq(fs, q));
        if (seminorm_sq(fs, p) == 0) CHECK(inner(fs, p, q) == 0);
    }
}

TEST_CASE("table_from_state round-trips through TableState") {
    std::mt19937_64 rng(45);
    const FockState fs(testgen::random_fock_data(rng, 2, 2, true));
    const MomentTable table = table_from_state(fs, 4);
    CHECK(table.d == 2);
    CHECK(table.max_degree == 4);
    CHECK(table.moments.size() == static_cast<std::size_t>(count_words_up_to(2, 4)));
    const TableState ts(table);
    for (const Word& w : enumerate_words(2, 4)) CHECK(ts.moment(w) == fs.moment(w));
    CHECK_THROWS_AS(table_from_state(fs, 3), std::invalid_argument);  // odd request
    CHECK_THROWS_AS(table_from_state(fs, 6), BoundError);
}

#pragma once

// Deterministic generators and frozen reference data shared by the test
// suites. Every generator takes an explicit engine so each test pins its own
// seed.

#include <map>
#include <random>
#include <vector>

#include "ncmops/fock.hpp"
#include "ncmops/mops.hpp"
#include "ncmops/oracle.hpp"
#include "ncmops/state.hpp"

namespace testgen {

using namespace ncmops;

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// A rational with numerator in [lo, hi] and a small positive denominator.
inline Rat small_rat(std::mt19937_64& rng, int lo, int hi) {
    return make_rational(uniform_int(rng, lo, hi), uniform_int(rng, 1, 3));
}

inline Rat positive_rat(std::mt19937_64& rng) { return small_rat(rng, 1, 5); }

inline Word word_of(int alphabet, std::initializer_list<int> letters) {
    return Word(alphabet, std::vector<int>(letters));
}

// A random polynomial supported on words of length <= max_len.
inline NcPolynomial random_polynomial(std::mt19937_64& rng, int d, int max_len, int terms = 4) {
    NcPolynomial p(d);
    for (int t = 0; t < terms; ++t) {
        const int len = uniform_int(rng, 0, max_len);
        std::vector<int> letters;
        for (int j = 0; j < len; ++j) letters.push_back(uniform_int(rng, 1, d));
        p.add_term(Word(d, std::move(letters)), small_rat(rng, -3, 3));
    }
    return p;
}

// Valid Fock data: weights drawn positive (or zeroed with probability 1/4
// when allow_zero_weights), preservation entries S[r][c] / kernel(row) for a
// random symmetric S, which satisfies the transpose compatibility by
// construction; entries touching a degenerate word are zeroed.
inline FockData random_fock_data(std::mt19937_64& rng, int d, int depth, bool allow_zero_weights) {
    FockData data{d, depth, {}, {}};
    std::map<Word, Rat> kernel{{Word(d), Rat(1)}};
    for (int k = 1; k <= depth; ++k) {
        std::map<Word, Rat> level;
        for (const Word& w : words_of_length(d, k)) {
            Rat c = allow_zero_weights && uniform_int(rng, 0, 3) == 0 ? Rat(0) : positive_rat(rng);
            kernel.emplace(w, c * kernel.at(w.suffix_from(1)));
            level.emplace(w, std::move(c));
        }
        data.weights.push_back(std::move(level));
    }
    for (int i = 1; i <= d; ++i) {
        std::vector<RatMatrix> matrices;
        for (int k = 0; k <= depth; ++k) {
            const std::vector<Word> words = words_of_length(d, k);
            RatMatrix s(words.size(), words.size());
            for (std::size_t r = 0; r < words.size(); ++r)
                for (std::size_t c = r; c < words.size(); ++c) {
                    s.at(r, c) = small_rat(rng, -3, 3);
                    s.at(c, r) = s.at(r, c);
                }
            RatMatrix t(words.size(), words.size());
            for (std::size_t r = 0; r < words.size(); ++r) {
                const Rat& kr = kernel.at(words[r]);
                if (kr == 0) continue;
                for (std::size_t c = 0; c < words.size(); ++c) {
                    if (kernel.at(words[c]) == 0) continue;
                    t.at(r, c) = s.at(r, c) / kr;
                }
            }
            matrices.push_back(std::move(t));
        }
        data.preservation.push_back(std::move(matrices));
    }
    return data;
}

// Forces phi(x_i) = 0 for every letter.
inline void zero_mean(FockData& data) {
    for (auto& per_letter : data.preservation) per_letter[0].at(0, 0) = 0;
}

// C identically one, T identically zero: the free analogue of independent
// standard semicircular variables (Catalan moments at d = 1).
inline FockData free_fock_data(int d, int depth) {
    FockData data{d, depth, {}, {}};
    for (int k = 1; k <= depth; ++k) {
        std::map<Word, Rat> level;
        for (const Word& w : words_of_length(d, k)) level.emplace(w, Rat(1));
        data.weights.push_back(std::move(level));
    }
    std::size_t dim = 1;
    std::vector<RatMatrix> zeros;
    for (int k = 0; k <= depth; ++k) {
        zeros.emplace_back(dim, dim);
        dim *= static_cast<std::size_t>(d);
    }
    for (int i = 1; i <= d; ++i) data.preservation.push_back(zeros);
    return data;
}

inline JacobiData random_jacobi(std::mt19937_64& rng, int depth, bool allow_zero_weights = true) {
    JacobiData j;
    for (int k = 0; k <= depth; ++k) j.a.push_back(small_rat(rng, -3, 3));
    for (int k = 1; k <= depth; ++k)
        j.b.push_back(allow_zero_weights && uniform_int(rng, 0, 3) == 0 ? Rat(0) : positive_rat(rng));
    return j;
}

// Frozen d=1 table with even moments 1, 1, 2, 5, 14 (odd moments zero).
inline MomentTable catalan_table() {
    MomentTable table;
    table.d = 1;
    table.max_degree = 8;
    const long values[] = {1, 0, 1, 0, 2, 0, 5, 0, 14};
    for (int m = 0; m <= 8; ++m)
        table.moments.emplace(Word(1, std::vector<int>(static_cast<std::size_t>(m), 1)), Rat(values[m]));
    return table;
}

// Two variables that are the same standard Gaussian: phi(x_u) depends only
// on |u| and equals the pairing count (|u| - 1)!! at even length.
inline MomentTable gaussian_duplicated_table(int max_degree = 4) {
    MomentTable table;
    table.d = 2;
    table.max_degree = max_degree;
    for (const Word& w : enumerate_words(2, max_degree)) {
        Rat value(0);
        if (w.length() % 2 == 0) {
            value = 1;
            for (int t = 3; t < w.length(); t += 2) value *= t;
        }
        table.moments.emplace(w, std::move(value));
    }
    return table;
}

// A faithful d=2 state that is NOT orthogonalizable: perturbs one degree-3
// moment pair of a random faithful orthogonalizable table, shrinking the
// perturbation until validity and faithfulness survive while orthogonality
// breaks. Throws if no perturbation works (signals a generator bug).
inline MomentTable perturbed_nonmops_table(std::mt19937_64& rng) {
    const FockState fs(random_fock_data(rng, 2, 2, false));
    const MomentTable base = table_from_state(fs, 4);
    const std::vector<Word> probes{word_of(2, {1, 1, 2}), word_of(2, {1, 2, 2}), word_of(2, {2, 1, 2}),
                                   word_of(2, {2, 2, 1})};
    for (const Word& probe : probes) {
        Rat eps(1);
        for (int step = 0; step < 40; ++step, eps /= 2) {
            MomentTable table = base;
            table.moments.at(probe) += eps;
            table.moments.at(probe.reversed()) += eps;
            if (!check_state(table).ok) continue;
            const TableState s(table);
            if (!is_faithful_up_to(s, 2)) continue;
            if (has_mops(s, 2).has_mops) break;  // this direction keeps orthogonality; next probe
            return table;
        }
    }
    throw Error("perturbed_nonmops_table: no perturbation broke orthogonality");
}

}  // namespace testgen

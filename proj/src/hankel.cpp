#include "ncmops/hankel.hpp"

#include <stdexcept>

namespace ncmops {

namespace {

void require_moments(const State& s, int degree, const char* who) {
    if (degree > s.bound())
        throw BoundError(std::string(who) + " needs moments of degree " + std::to_string(degree) +
                         ", state bound is " + std::to_string(s.bound()));
}

std::vector<Word> frame_index(int alphabet, const Word& target) {
    std::vector<Word> index = enumerate_words(alphabet, target.length() - 1);
    index.push_back(target);
    return index;
}

// Moment row <x_probe, x_w> over the given column words.
std::vector<Rat> moment_row(const State& s, const Word& probe, const std::vector<Word>& columns) {
    const Word row = probe.reversed();
    std::vector<Rat> values;
    values.reserve(columns.size());
    for (const Word& w : columns) values.push_back(s.moment(concat(row, w)));
    return values;
}

}  // namespace

HankelFrame build_frame(const State& s, const Word& target) {
    if (target.alphabet() != s.alphabet()) throw std::invalid_argument("build_frame: mixed alphabets");
    if (target.empty()) {
        HankelFrame frame{s.alphabet(), target, {target}, RatMatrix(1, 1)};
        frame.matrix.at(0, 0) = s.moment(target);
        return frame;
    }
    require_moments(s, 2 * target.length(), "build_frame");
    HankelFrame frame{s.alphabet(), target, frame_index(s.alphabet(), target), RatMatrix()};
    const std::size_t n = frame.index.size();
    frame.matrix = RatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<Rat> row = moment_row(s, frame.index[i], frame.index);
        for (std::size_t j = 0; j < n; ++j) frame.matrix.at(i, j) = row[j];
    }
    return frame;
}

Rat frame_det(const State& s, const Word& target) { return determinant(build_frame(s, target).matrix); }

Rat basis_det(const State& s, int degree) {
    if (degree < 0) throw std::invalid_argument("basis_det: negative degree");
    if (degree == 0) return 1;
    require_moments(s, 2 * (degree - 1), "basis_det");
    return determinant(gram_matrix(s, degree - 1));
}

Rat cross_det(const State& s, const Word& probe, const Word& target) {
    if (probe.alphabet() != s.alphabet() || target.alphabet() != s.alphabet())
        throw std::invalid_argument("cross_det: mixed alphabets");
    if (target.empty()) return s.moment(probe);
    const std::vector<Word> index = frame_index(s.alphabet(), target);
    require_moments(s, std::max(2 * target.length() - 1, probe.length() + target.length()), "cross_det");
    RatMatrix m(index.size(), index.size());
    for (std::size_t i = 0; i < index.size(); ++i) {
        const Word& row_word = i + 1 == index.size() ? probe : index[i];
        const std::vector<Rat> row = moment_row(s, row_word, index);
        for (std::size_t j = 0; j < index.size(); ++j) m.at(i, j) = row[j];
    }
    return determinant(std::move(m));
}

NcPolynomial det_polynomial(const State& s, const Word& target) {
    if (target.alphabet() != s.alphabet()) throw std::invalid_argument("det_polynomial: mixed alphabets");
    if (target.empty()) return NcPolynomial::constant(s.alphabet(), Rat(1));
    require_moments(s, 2 * target.length(), "det_polynomial");
    const std::vector<Word> index = frame_index(s.alphabet(), target);
    const std::size_t n = index.size();
    // Numeric block: all rows but the last (the monomial row).
    std::vector<std::vector<Rat>> block;
    block.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) block.push_back(moment_row(s, index[i], index));
    // Cofactor expansion along the monomial row.
    NcPolynomial p(s.alphabet());
    for (std::size_t j = 0; j < n; ++j) {
        RatMatrix minor(n - 1, n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            std::size_t col = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                minor.at(i, col++) = block[i][k];
            }
        }
        Rat cofactor = determinant(std::move(minor));
        if ((n - 1 + j) % 2 == 1) cofactor = -cofactor;
        p.add_term(index[j], cofactor);
    }
    return p;
}

MonicFamily hankel_family(const State& s, int degree) {
    if (degree < 0) throw std::invalid_argument("hankel_family: negative degree");
    require_moments(s, 2 * degree, "hankel_family");
    std::vector<Rat> basis(degree + 1);
    for (int m = 0; m <= degree; ++m) {
        basis[m] = basis_det(s, m);
        if (basis[m] == 0)
            throw NotFaithfulError(m - 1, "state is not faithful: the Gram determinant at degree " +
                                              std::to_string(m - 1) + " vanishes");
    }
    MonicFamily family{s.alphabet(), degree, {}, {}};
    for (const Word& u : enumerate_words(s.alphabet(), degree)) {
        NcPolynomial p = det_polynomial(s, u);
        p *= Rat(1) / basis[u.length()];
        family.norm_sq.emplace(u, seminorm_sq(s, p));
        family.polynomials.emplace(u, std::move(p));
    }
    return family;
}

RelationResult check_relation1(const State& s, int degree) {
    if (degree < 0) throw std::invalid_argument("check_relation1: negative degree");
    require_moments(s, 2 * degree, "check_relation1");
    for (int m = 0; m <= degree; ++m) {
        if (basis_det(s, m) == 0)
            throw NotFaithfulError(m - 1, "state is not faithful: the Gram determinant at degree " +
                                              std::to_string(m - 1) + " vanishes");
    }
    RelationResult result;
    for (int m = 1; m <= degree; ++m) {
        const std::vector<Word> lower = enumerate_words(s.alphabet(), m - 1);
        // Shared per-level data: frame determinants and scaled basis factors.
        std::vector<Rat> weights;  // 1 / (frame_det(v) * basis_det(|v|)), 0 if excluded
        weights.reserve(lower.size());
        for (const Word& v : lower) {
            const Rat h = frame_det(s, v);
            weights.push_back(h == 0 ? Rat(0) : Rat(1) / (h * basis_det(s, v.length())));
        }
        const std::vector<Word> level = words_of_length(s.alphabet(), m);
        // crossings[a][t] = cross_det(level[a], lower[t])
        std::vector<std::vector<Rat>> crossings(level.size());
        for (std::size_t a = 0; a < level.size(); ++a) {
            crossings[a].reserve(lower.size());
            for (std::size_t t = 0; t < lower.size(); ++t)
                crossings[a].push_back(weights[t] == 0 ? Rat(0) : cross_det(s, level[a], lower[t]));
        }
        for (std::size_t a = 0; a < level.size(); ++a) {
            for (std::size_t b = a + 1; b < level.size(); ++b) {
                const Rat lhs = s.moment(concat(level[a].reversed(), level[b]));
                Rat rhs(0);
                for (std::size_t t = 0; t < lower.size(); ++t) {
                    if (weights[t] == 0) continue;
                    rhs += crossings[a][t] * crossings[b][t] * weights[t];
                }
                if (lhs != rhs) {
                    result.holds = false;
                    result.witness = RelationWitness{level[a], level[b], lhs, rhs};
                    return result;
                }
            }
        }
    }
    return result;
}

}  // namespace ncmops

#include "ncmops/oracle.hpp"

#include <cstdint>
#include <stdexcept>

#include "ncmops/state.hpp"

namespace ncmops {

namespace {

// Solves A c = rhs in place by Gaussian elimination with row swaps; columns
// without a pivot get coefficient zero. Throws on an inconsistent system
// (cannot happen for normal equations of a positive semidefinite pairing).
std::vector<Rat> solve_normal_equations(RatMatrix a, std::vector<Rat> rhs) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> pivot_row_of_col(a.cols(), SIZE_MAX);
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < a.cols() && next_row < n; ++col) {
        std::size_t pivot = SIZE_MAX;
        for (std::size_t r = next_row; r < n; ++r) {
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == SIZE_MAX) continue;
        if (pivot != next_row) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(next_row, j));
            std::swap(rhs[pivot], rhs[next_row]);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == next_row || a.at(r, col) == 0) continue;
            const Rat factor = a.at(r, col) / a.at(next_row, col);
            for (std::size_t j = col; j < a.cols(); ++j) a.at(r, j) -= factor * a.at(next_row, j);
            rhs[r] -= factor * rhs[next_row];
        }
        pivot_row_of_col[col] = next_row;
        ++next_row;
    }
    for (std::size_t r = next_row; r < n; ++r)
        if (rhs[r] != 0) throw Error("normal equations are inconsistent");
    std::vector<Rat> solution(a.cols(), Rat(0));
    for (std::size_t col = 0; col < a.cols(); ++col) {
        const std::size_t row = pivot_row_of_col[col];
        if (row != SIZE_MAX) solution[col] = rhs[row] / a.at(row, col);
    }
    return solution;
}

}  // namespace

MonicFamily dense_orthogonalize(const State& s, int n) {
    if (n < 0) throw std::invalid_argument("dense_orthogonalize: negative degree");
    if (2 * n > s.bound())
        throw BoundError("dense_orthogonalize at degree " + std::to_string(n) + " needs moments of degree " +
                         std::to_string(2 * n) + ", state bound is " + std::to_string(s.bound()));
    const int d = s.alphabet();
    MonicFamily family{d, n, {}, {}};
    family.polynomials.emplace(Word(d), NcPolynomial::constant(d, Rat(1)));
    family.norm_sq.emplace(Word(d), Rat(1));
    std::vector<Word> lower;  // all words of degree < m, refreshed per level
    for (int m = 1; m <= n; ++m) {
        lower = enumerate_words(d, m - 1);
        RatMatrix gram(lower.size(), lower.size());
        for (std::size_t i = 0; i < lower.size(); ++i)
            for (std::size_t j = i; j < lower.size(); ++j) {
                gram.at(i, j) = s.moment(concat(lower[i].reversed(), lower[j]));
                gram.at(j, i) = gram.at(i, j);
            }
        for (const Word& u : words_of_length(d, m)) {
            std::vector<Rat> rhs;
            rhs.reserve(lower.size());
            for (const Word& v : lower) rhs.push_back(s.moment(concat(v.reversed(), u)));
            const std::vector<Rat> coeffs = solve_normal_equations(gram, rhs);
            NcPolynomial p = NcPolynomial::monomial(u);
            for (std::size_t j = 0; j < lower.size(); ++j)
                if (coeffs[j] != 0) p.add_term(lower[j], -coeffs[j]);
            family.norm_sq.emplace(u, seminorm_sq(s, p));
            family.polynomials.emplace(u, std::move(p));
        }
    }
    return family;
}

std::vector<Rat> jacobi_moments(const JacobiData& j, int m) {
    if (m < 0) throw std::invalid_argument("jacobi_moments: negative degree");
    if (j.a.size() != j.b.size() + 1)
        throw std::invalid_argument("jacobi_moments: need one more diagonal entry than off-diagonal weights");
    for (const Rat& w : j.b)
        if (w < 0) throw std::invalid_argument("jacobi_moments: negative off-diagonal weight");
    const std::size_t size = j.a.size();
    const int depth = static_cast<int>(j.b.size());
    if (m > 2 * depth + 1)
        throw BoundError("jacobi_moments of degree " + std::to_string(m) + " needs depth " +
                         std::to_string((m + 1) / 2) + ", data depth is " + std::to_string(depth));
    RatMatrix matrix(size, size);
    for (std::size_t l = 0; l < size; ++l) {
        matrix.at(l, l) = j.a[l];
        if (l + 1 < size) {
            matrix.at(l + 1, l) = Rat(1);
            matrix.at(l, l + 1) = j.b[l];
        }
    }
    std::vector<Rat> moments;
    moments.reserve(static_cast<std::size_t>(m) + 1);
    RatMatrix power = RatMatrix::identity(size);
    for (int k = 0; k <= m; ++k) {
        moments.push_back(power.at(0, 0));
        if (k == m) break;
        RatMatrix next(size, size);
        for (std::size_t r = 0; r < size; ++r)
            for (std::size_t c = 0; c < size; ++c) {
                Rat sum(0);
                for (std::size_t t = 0; t < size; ++t) sum += power.at(r, t) * matrix.at(t, c);
                next.at(r, c) = sum;
            }
        power = std::move(next);
    }
    return moments;
}

}  // namespace ncmops

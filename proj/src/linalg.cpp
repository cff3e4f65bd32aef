#include "ncmops/linalg.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace ncmops {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

// Bareiss one-step fraction-free elimination: every intermediate entry is a
// minor of the original integer-like data, so numerators and denominators
// stay small and every division below is exact.
Rat determinant(RatMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    int sign = 1;
    Rat prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

PsdReport check_psd(const RatMatrix& symmetric) {
    if (!symmetric.is_symmetric()) throw std::invalid_argument("check_psd: matrix not symmetric");
    const std::size_t n = symmetric.rows();
    RatMatrix m = symmetric;
    // Congruence accumulator: m == transform^T * symmetric * transform at all
    // times, so any y with y^T m y < 0 lifts to x = transform * y.
    RatMatrix transform = RatMatrix::identity(n);
    PsdReport report;

    auto fail_with = [&](const std::vector<Rat>& y) {
        std::vector<Rat> x(n, Rat(0));
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            for (std::size_t i = 0; i < n; ++i) x[i] += transform.at(i, j) * y[j];
        }
        // Exactness makes the certificate cheap to re-verify; guard the algebra.
        Rat value(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) value += x[i] * symmetric.at(i, j) * x[j];
        assert(value < 0);
        (void)value;
        report.psd = false;
        report.positive_definite = false;
        report.certificate = std::move(x);
    };

    for (std::size_t k = 0; k < n; ++k) {
        const Rat pivot = m.at(k, k);
        if (pivot < 0) {
            std::vector<Rat> y(n, Rat(0));
            y[k] = 1;
            fail_with(y);
            return report;
        }
        if (pivot == 0) {
            std::size_t bad = n;
            for (std::size_t j = k + 1; j < n && bad == n; ++j)
                if (m.at(k, j) != 0) bad = j;
            if (bad < n) {
                // Residual block has [[0, c], [c, q]] with c != 0; the vector
                // e_bad + t*e_k attains q + 2tc = -1 for t = -(q + 1)/(2c).
                std::vector<Rat> y(n, Rat(0));
                y[bad] = 1;
                y[k] = -(m.at(bad, bad) + 1) / (2 * m.at(k, bad));
                fail_with(y);
                return report;
            }
            report.skipped.push_back(k);
            report.positive_definite = false;
            continue;
        }
        // Row eliminations first (they need row k intact); the trailing block
        // they leave is the symmetric Schur complement, so clearing row and
        // column k afterwards realizes the full congruence step.
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            const Rat factor = m.at(i, k) / pivot;
            for (std::size_t j = k + 1; j < n; ++j) m.at(i, j) -= factor * m.at(k, j);
            for (std::size_t r = 0; r < n; ++r) transform.at(r, i) -= factor * transform.at(r, k);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            m.at(i, k) = 0;
            m.at(k, i) = 0;
        }
    }
    return report;
}

}  // namespace ncmops

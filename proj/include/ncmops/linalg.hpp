#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncmops/rational.hpp"

namespace ncmops {

// Dense rational matrix, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);  // zero-filled
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    bool is_symmetric() const;

    bool operator==(const RatMatrix& other) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

// Exact determinant by fraction-free (Bareiss) elimination with row
// pivoting; the empty matrix has determinant 1.
Rat determinant(RatMatrix m);

struct PsdReport {
    bool psd = true;
    bool positive_definite = true;
    // Present exactly when !psd: a rational vector x with x^T A x < 0.
    std::optional<std::vector<Rat>> certificate;
    // Indices whose diagonal pivot was zero together with a whole zero
    // residual row (the semidefinite null directions met along the way).
    std::vector<std::size_t> skipped;
};

// Decides positive semidefiniteness of a symmetric rational matrix exactly,
// by symmetric Gaussian elimination (LDL^T) with diagonal pivots taken in
// natural order. A zero pivot is sound to skip only when its entire residual
// row vanishes; a zero pivot with a nonzero residual row, or a negative
// pivot, disproves semidefiniteness and yields a certificate vector.
// positive_definite holds iff the matrix is psd with no skipped pivots.
PsdReport check_psd(const RatMatrix& symmetric);

}  // namespace ncmops

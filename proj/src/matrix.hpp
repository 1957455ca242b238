#pragma once

#include <cstddef>
#include <vector>

#include "bigint.hpp"
#include "polynomial.hpp"

namespace gcdval {

// Row-major rectangular matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    const std::vector<Int>& entries() const { return entries_; }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.entries_ == b.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

// (k+l)-square matrix: first l rows carry the coefficients of f (descending,
// shifted right per row), last k rows carry g. Degenerate: 0x0 when either
// degree is 0 (the resultant of a monic constant is 1, an empty determinant).
// Throws NotMonicError unless both inputs are monic.
IntegerMatrix sylvester_matrix(const IntPolynomial& f, const IntPolynomial& g);

// Fraction-free elimination (Bareiss) with exact divisions; det of 0x0 is 1.
Int determinant_bareiss(IntegerMatrix m);

// Signed determinant of the Sylvester matrix; 1 when either input is constant.
Int resultant(const IntPolynomial& f, const IntPolynomial& g);

struct SmithForm {
    std::vector<Int> invariant_factors;  // positive, d1 | d2 | ...
    std::size_t rank = 0;                // == invariant_factors.size()
    std::size_t rows = 0, cols = 0;
};

SmithForm smith_normal_form(IntegerMatrix m);

// Invariant factors > 1 of Z[x]/(f, g); their product equals |resultant(f,g)|.
// Throws ZeroResultantError when the resultant vanishes.
std::vector<Int> quotient_group(const IntPolynomial& f, const IntPolynomial& g);

}  // namespace gcdval

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace zac {

using Int = mpz_class;

// Dense arbitrary-precision integer matrix, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntegerMatrix& o) const = default;

    IntegerMatrix operator*(const IntegerMatrix& o) const;
    IntegerMatrix transposed() const;
    bool is_zero() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

struct SNFResult {
    std::vector<Int> diagonal;  // positive, d1 | d2 | ... | dr
    IntegerMatrix U, V;         // unimodular, U*A*V = diag(diagonal) padded with zeros
    std::size_t rank = 0;       // = diagonal.size()
};

// Smith normal form. Pivot rule: smallest non-zero absolute value,
// lexicographic (row, col) tie-break.
SNFResult smith_normal_form(const IntegerMatrix& A);

// |det| of a square unimodular-candidate matrix (used by tests).
Int determinant(const IntegerMatrix& A);

std::size_t matrix_rank(const IntegerMatrix& A);

}  // namespace zac

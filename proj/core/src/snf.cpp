#include "zacyclic/integer_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace zac {

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    IntegerMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool IntegerMatrix::is_zero() const {
    for (const Int& x : data_)
        if (x != 0) return false;
    return true;
}

namespace {

void swap_rows(IntegerMatrix& A, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < A.cols(); ++c) std::swap(A(i, c), A(j, c));
}
void swap_cols(IntegerMatrix& A, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < A.rows(); ++r) std::swap(A(r, i), A(r, j));
}
// row i -= q * row j
void add_row(IntegerMatrix& A, std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) -= q * A(j, c);
}
void add_col(IntegerMatrix& A, std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t r = 0; r < A.rows(); ++r) A(r, i) -= q * A(r, j);
}
void negate_row(IntegerMatrix& A, std::size_t i) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) = -A(i, c);
}

}  // namespace

SNFResult smith_normal_form(const IntegerMatrix& A) {
    IntegerMatrix S = A;
    const std::size_t m = S.rows(), n = S.cols();
    IntegerMatrix U = IntegerMatrix::identity(m);
    IntegerMatrix V = IntegerMatrix::identity(n);

    std::size_t t = 0;
    while (t < m && t < n) {
        for (;;) {
            // pivot: smallest non-zero |entry| in the trailing submatrix,
            // re-selected after every pass so remainders drive a Euclidean
            // descent
            bool found = false;
            std::size_t pi = t, pj = t;
            Int best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (S(i, j) == 0) continue;
                    Int a = abs(S(i, j));
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) goto finished;

            if (pi != t) { swap_rows(S, pi, t); swap_rows(U, pi, t); }
            if (pj != t) { swap_cols(S, pj, t); swap_cols(V, pj, t); }

            bool clean = true;
            // reduce column t; non-zero remainders stay for re-selection
            for (std::size_t i = t + 1; i < m; ++i) {
                if (S(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
                add_row(S, i, t, q);
                add_row(U, i, t, q);
                if (S(i, t) != 0) clean = false;
            }
            // reduce row t
            for (std::size_t j = t + 1; j < n; ++j) {
                if (S(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
                add_col(S, j, t, q);
                add_col(V, j, t, q);
                if (S(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the rest by the pivot
            for (std::size_t i = t + 1; i < m && clean; ++i)
                for (std::size_t j = t + 1; j < n && clean; ++j) {
                    if (S(i, j) % S(t, t) != 0) {
                        add_row(S, t, i, Int(-1));  // row t += row i
                        add_row(U, t, i, Int(-1));
                        clean = false;
                    }
                }
            if (clean) break;
        }
        if (S(t, t) < 0) { negate_row(S, t); negate_row(U, t); }
        ++t;
    }
finished:;

    SNFResult r;
    r.rank = t;
    for (std::size_t i = 0; i < t; ++i) r.diagonal.push_back(S(i, i));
    r.U = std::move(U);
    r.V = std::move(V);
    return r;
}

Int determinant(const IntegerMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("determinant: non-square");
    const std::size_t n = A.rows();
    if (n == 0) return 1;
    // fraction-free Gaussian elimination (Bareiss)
    IntegerMatrix M = A;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && M(p, k) == 0) ++p;
            if (p == n) return 0;
            swap_rows(M, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = M(i, j) * M(k, k) - M(i, k) * M(k, j);
                M(i, j) = num / prev;
            }
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

std::size_t matrix_rank(const IntegerMatrix& A) { return smith_normal_form(A).rank; }

}  // namespace zac

#include "matrix.hpp"

#include <algorithm>

#include "errors.hpp"

namespace gcdval {

IntegerMatrix sylvester_matrix(const IntPolynomial& f, const IntPolynomial& g) {
    if (!f.is_monic()) throw NotMonicError("sylvester_matrix: f is not monic");
    if (!g.is_monic()) throw NotMonicError("sylvester_matrix: g is not monic");
    std::size_t k = static_cast<std::size_t>(f.degree());
    std::size_t l = static_cast<std::size_t>(g.degree());
    if (k == 0 || l == 0) return IntegerMatrix(0, 0);
    IntegerMatrix m(k + l, k + l);
    for (std::size_t row = 0; row < l; ++row)
        for (std::size_t i = 0; i <= k; ++i)
            m.at(row, row + i) = f.coefficient(k - i);
    for (std::size_t row = 0; row < k; ++row)
        for (std::size_t i = 0; i <= l; ++i)
            m.at(l + row, row + i) = g.coefficient(l - i);
    return m;
}

Int determinant_bareiss(IntegerMatrix m) {
    if (m.rows() != m.cols())
        throw std::logic_error("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Int(1);
    int sign = 1;
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return Int(0);
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    Int det = m.at(n - 1, n - 1);
    return sign == 1 ? det : Int(-det);
}

Int resultant(const IntPolynomial& f, const IntPolynomial& g) {
    return determinant_bareiss(sylvester_matrix(f, g));
}

namespace {

// Index of a nonzero entry of minimal |value| in the submatrix at (t, t),
// or {rows, cols} if the submatrix is zero.
std::pair<std::size_t, std::size_t> min_pivot(const IntegerMatrix& m,
                                              std::size_t t) {
    std::pair<std::size_t, std::size_t> best{m.rows(), m.cols()};
    Int best_abs(0);
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            if (m.at(i, j) == 0) continue;
            Int a = abs(m.at(i, j));
            if (best_abs == 0 || a < best_abs) {
                best_abs = a;
                best = {i, j};
            }
        }
    return best;
}

}  // namespace

SmithForm smith_normal_form(IntegerMatrix m) {
    SmithForm out;
    out.rows = m.rows();
    out.cols = m.cols();
    std::size_t bound = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < bound; ++t) {
        auto [pr, pc] = min_pivot(m, t);
        if (pr == m.rows()) break;  // submatrix is zero
        for (;;) {
            // Move the current minimal entry to (t, t).
            std::tie(pr, pc) = min_pivot(m, t);
            if (pr != t)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    std::swap(m.at(t, j), m.at(pr, j));
            if (pc != t)
                for (std::size_t i = 0; i < m.rows(); ++i)
                    std::swap(m.at(i, t), m.at(i, pc));

            // Reduce the pivot column and row; a nonzero remainder becomes
            // the new (smaller) pivot candidate, so restart.
            bool shrunk = false;
            for (std::size_t i = t + 1; i < m.rows() && !shrunk; ++i) {
                if (m.at(i, t) == 0) continue;
                Int q = m.at(i, t) / m.at(t, t);  // truncated division
                if (q != 0)
                    for (std::size_t j = t; j < m.cols(); ++j)
                        m.at(i, j) -= q * m.at(t, j);
                if (m.at(i, t) != 0) shrunk = true;
            }
            if (shrunk) continue;
            for (std::size_t j = t + 1; j < m.cols() && !shrunk; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q = m.at(t, j) / m.at(t, t);
                if (q != 0)
                    for (std::size_t i = t; i < m.rows(); ++i)
                        m.at(i, j) -= q * m.at(i, t);
                if (m.at(t, j) != 0) shrunk = true;
            }
            if (shrunk) continue;

            // Divisibility fix: pull a non-divisible entry into row t.
            bool fixed = true;
            for (std::size_t i = t + 1; i < m.rows() && fixed; ++i)
                for (std::size_t j = t + 1; j < m.cols() && fixed; ++j)
                    if (!mpz_divisible_p(m.at(i, j).get_mpz_t(),
                                         m.at(t, t).get_mpz_t())) {
                        for (std::size_t jj = 0; jj < m.cols(); ++jj)
                            m.at(t, jj) += m.at(i, jj);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (m.at(t, t) < 0) m.at(t, t) = -m.at(t, t);
        out.invariant_factors.push_back(m.at(t, t));
    }
    out.rank = out.invariant_factors.size();
    return out;
}

std::vector<Int> quotient_group(const IntPolynomial& f,
                                const IntPolynomial& g) {
    IntegerMatrix m = sylvester_matrix(f, g);
    Int det = determinant_bareiss(m);
    if (det == 0)
        throw ZeroResultantError(
            "quotient_group: zero resultant (f and g share a factor)");
    SmithForm smith = smith_normal_form(std::move(m));
    std::vector<Int> factors;
    for (const Int& d : smith.invariant_factors)
        if (d > 1) factors.push_back(d);
    return factors;
}

}  // namespace gcdval

#pragma once

#include "shimura/rational.hpp"
#include "shimura/scalar.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace shimura {

template <class T>
using Matrix = std::vector<std::vector<T>>;

enum class SolveTag { Unique, Inconsistent, Underdetermined };

template <class T>
struct LinearSolveOutcome {
    SolveTag tag = SolveTag::Inconsistent;
    /// Unique: the solution. Underdetermined: one particular solution.
    std::vector<T> solution;
    /// Underdetermined only; each vector's leading nonzero entry is 1.
    std::vector<std::vector<T>> nullspace;
    std::size_t rank = 0;
};

namespace detail {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Scalar& x) { return x.is_zero(); }

// Scales each row of a rational system to integer entries so that the
// Bareiss quotients stay integral.
inline void clear_denominators(Matrix<Rational>& rows)
{
    for (auto& row : rows) {
        Integer l = 1;
        for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        if (l != 1)
            for (auto& x : row) x *= l;
    }
}
inline void clear_denominators(Matrix<Scalar>&) {}

} // namespace detail

/// Classifies A·x = b exactly by fraction-free (Bareiss) elimination on the
/// augmented matrix, then back-substitutes in the field.
template <class T>
LinearSolveOutcome<T> solve_exact(const Matrix<T>& A, const std::vector<T>& b)
{
    const std::size_t rows = A.size();
    if (b.size() != rows) throw std::invalid_argument("solve_exact: right-hand side length does not match row count");
    const std::size_t cols = rows ? A.front().size() : 0;
    for (const auto& r : A)
        if (r.size() != cols) throw std::invalid_argument("solve_exact: ragged matrix");

    Matrix<T> M(rows, std::vector<T>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) M[i][j] = A[i][j];
        M[i][cols] = b[i];
    }
    detail::clear_denominators(M);

    // Bareiss: after step k every entry below the pivot row equals a minor
    // of the original matrix, so division by the previous pivot is exact.
    std::vector<std::size_t> pivot_cols;
    T prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c <= cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && detail::is_zero(M[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j <= cols; ++j) {
                T v = M[r][c] * M[i][j];
                v -= M[i][c] * M[r][j];
                v /= prev;
                M[i][j] = std::move(v);
            }
            M[i][c] = T(0);
        }
        prev = M[r][c];
        pivot_cols.push_back(c);
        ++r;
    }

    LinearSolveOutcome<T> out;
    if (!pivot_cols.empty() && pivot_cols.back() == cols) {
        out.tag = SolveTag::Inconsistent;
        out.rank = pivot_cols.size() - 1;
        return out;
    }
    out.rank = pivot_cols.size();

    // Back substitution with free variables set to zero.
    std::vector<T> x(cols, T(0));
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
        const std::size_t c = pivot_cols[k];
        T acc = M[k][cols];
        for (std::size_t j = c + 1; j < cols; ++j)
            if (!detail::is_zero(x[j])) acc -= M[k][j] * x[j];
        x[c] = acc / M[k][c];
    }
    out.solution = x;
    if (out.rank == cols) {
        out.tag = SolveTag::Unique;
        return out;
    }

    out.tag = SolveTag::Underdetermined;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(cols, T(0));
        v[f] = T(1);
        for (std::size_t k = pivot_cols.size(); k-- > 0;) {
            const std::size_t c = pivot_cols[k];
            T acc(0);
            for (std::size_t j = c + 1; j < cols; ++j)
                if (!detail::is_zero(v[j])) acc -= M[k][j] * v[j];
            v[c] = acc / M[k][c];
        }
        std::size_t lead = 0;
        while (detail::is_zero(v[lead])) ++lead;
        const T inv = T(1) / v[lead];
        for (auto& e : v) e *= inv;
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

} // namespace shimura

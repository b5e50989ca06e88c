#pragma once

#include <moncat/int_matrix.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace moncat {

/// Invertible change-of-basis pair for a diagonalized matrix: U * M * V = S,
/// with U, V unimodular, S diagonal with nonnegative entries satisfying the
/// divisibility chain S(0,0) | S(1,1) | ... . U_inv and V_inv are the exact
/// inverses, accumulated alongside the elimination.
struct SmithNormalForm {
    IntMatrix U, S, V, U_inv, V_inv;
    std::size_t rank = 0;

    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        const std::size_t n = std::min(S.rows(), S.cols());
        d.reserve(n);
        for (std::size_t i = 0; i < n; ++i) d.push_back(S.at(i, i));
        return d;
    }

    /// Nonzero diagonal entries, in chain order (including any leading 1s).
    std::vector<Int> invariant_factors() const {
        std::vector<Int> d;
        for (const Int& v : diagonal())
            if (v != 0) d.push_back(v);
        return d;
    }
};

namespace detail {

// Truncated quotient, |remainder| < |b|.
inline Int trunc_div(const Int& a, const Int& b) { return a / b; }

// Floor quotient, remainder in [0, |b|) for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

}  // namespace detail

/// Smith normal form with deterministic pivoting: among the nonzero entries of
/// the working submatrix the one of smallest absolute value is chosen, ties
/// broken in row-major order.
inline SmithNormalForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithNormalForm f;
    f.S = m;
    f.U = IntMatrix::identity(rows);
    f.U_inv = IntMatrix::identity(rows);
    f.V = IntMatrix::identity(cols);
    f.V_inv = IntMatrix::identity(cols);
    IntMatrix& S = f.S;

    auto row_swap = [&](std::size_t i, std::size_t j) {
        S.swap_rows(i, j);
        f.U.swap_rows(i, j);
        f.U_inv.swap_cols(i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        S.swap_cols(i, j);
        f.V.swap_cols(i, j);
        f.V_inv.swap_rows(i, j);
    };
    auto row_add = [&](std::size_t i, std::size_t j, const Int& q) {  // row i += q * row j
        S.add_row_multiple(i, j, q);
        f.U.add_row_multiple(i, j, q);
        f.U_inv.add_col_multiple(j, i, -q);
    };
    auto col_add = [&](std::size_t i, std::size_t j, const Int& q) {  // col i += q * col j
        S.add_col_multiple(i, j, q);
        f.V.add_col_multiple(i, j, q);
        f.V_inv.add_row_multiple(j, i, -q);
    };

    const std::size_t bound = std::min(rows, cols);
    for (std::size_t k = 0; k < bound; ++k) {
        for (;;) {
            // Pivot search over S[k.., k..]; an entry of absolute value 1 is
            // already minimal, so the scan stops at the first one.
            std::size_t pi = rows, pj = cols;
            Int best = 0;
            for (std::size_t i = k; i < rows && best != 1; ++i)
                for (std::size_t j = k; j < cols; ++j) {
                    const Int& v = S.at(i, j);
                    if (v == 0) continue;
                    Int a = abs(v);
                    if (best == 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                        if (best == 1) break;
                    }
                }
            if (best == 0) {  // submatrix exhausted
                k = bound;
                break;
            }
            if (pi != k) row_swap(pi, k);
            if (pj != k) col_swap(pj, k);

            bool remainder = false;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (S.at(i, k) == 0) continue;
                row_add(i, k, -detail::trunc_div(S.at(i, k), S.at(k, k)));
                if (S.at(i, k) != 0) remainder = true;
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (S.at(k, j) == 0) continue;
                col_add(j, k, -detail::trunc_div(S.at(k, j), S.at(k, k)));
                if (S.at(k, j) != 0) remainder = true;
            }
            if (remainder) continue;

            // Pivot row and column are clear; pull any entry the pivot does
            // not divide into the pivot row and keep reducing.
            bool divides = true;
            for (std::size_t i = k + 1; i < rows && divides; ++i)
                for (std::size_t j = k + 1; j < cols; ++j)
                    if (S.at(i, j) % S.at(k, k) != 0) {
                        row_add(k, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (k == bound) break;
    }

    for (std::size_t k = 0; k < bound; ++k) {
        if (S.at(k, k) < 0) {
            S.negate_row(k);
            f.U.negate_row(k);
            f.U_inv.negate_col(k);
        }
        if (S.at(k, k) != 0) ++f.rank;
    }
    return f;
}

/// Solver for M x = b over the integers, reusing one Smith decomposition of M
/// across many right-hand sides.
class SnfSolver {
public:
    explicit SnfSolver(IntMatrix m) : m_(std::move(m)), f_(smith_normal_form(m_)) {}

    const SmithNormalForm& form() const { return f_; }
    const IntMatrix& matrix() const { return m_; }

    /// A particular integer solution of M x = b, or nullopt when none exists.
    std::optional<IntMatrix> solve(const IntMatrix& b) const {
        if (b.rows() != m_.rows() || b.cols() != 1) return std::nullopt;
        const std::size_t n = m_.cols();
        IntMatrix y = f_.U * b;
        IntMatrix z(n, 1);
        const std::size_t bound = std::min(m_.rows(), n);
        for (std::size_t i = 0; i < m_.rows(); ++i) {
            const Int& yi = y.at(i, 0);
            if (i < bound && f_.S.at(i, i) != 0) {
                if (yi % f_.S.at(i, i) != 0) return std::nullopt;
                z.at(i, 0) = yi / f_.S.at(i, i);
            } else if (yi != 0) {
                return std::nullopt;
            }
        }
        return f_.V * z;
    }

    /// Columnwise solve for a matrix right-hand side.
    std::optional<IntMatrix> solve_matrix(const IntMatrix& b) const {
        if (b.rows() != m_.rows()) return std::nullopt;
        IntMatrix x(m_.cols(), b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) {
            auto col = solve(b.col(j));
            if (!col) return std::nullopt;
            x.set_col(j, *col);
        }
        return x;
    }

    /// Whether b lies in the lattice spanned by the columns of M.
    bool contains(const IntMatrix& b) const { return solve(b).has_value(); }

private:
    IntMatrix m_;
    SmithNormalForm f_;
};

/// Columns generating { x : M x = 0 }.
inline IntMatrix kernel_basis(const IntMatrix& m) {
    SmithNormalForm f = smith_normal_form(m);
    const std::size_t n = m.cols();
    const std::size_t bound = std::min(m.rows(), n);
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (j >= bound || f.S.at(j, j) == 0) free_cols.push_back(j);
    IntMatrix k(n, free_cols.size());
    for (std::size_t c = 0; c < free_cols.size(); ++c)
        k.set_col(c, f.V.col(free_cols[c]));
    return k;
}

/// Canonical basis of the column lattice of M: column echelon form with
/// strictly increasing pivot rows, positive pivots, and every entry in a pivot
/// row reduced into [0, pivot) to the left of its pivot. Two integer matrices
/// span the same column lattice exactly when their forms coincide; zero
/// columns are dropped.
inline IntMatrix hermite_column_form(const IntMatrix& m) {
    IntMatrix h = m;
    const std::size_t rows = h.rows(), cols = h.cols();
    std::size_t next = 0;  // next pivot column slot
    std::vector<std::size_t> pivot_rows;
    for (std::size_t row = 0; row < rows && next < cols; ++row) {
        // gcd sweep: reduce until at most one column has a nonzero at this row
        for (;;) {
            std::size_t jmin = cols;
            Int best = 0;
            for (std::size_t j = next; j < cols; ++j) {
                const Int& v = h.at(row, j);
                if (v == 0) continue;
                Int a = abs(v);
                if (best == 0 || a < best) {
                    best = a;
                    jmin = j;
                }
            }
            if (jmin == cols) break;  // row clear
            bool reduced_any = false;
            for (std::size_t j = next; j < cols; ++j) {
                if (j == jmin || h.at(row, j) == 0) continue;
                h.add_col_multiple(j, jmin, -detail::trunc_div(h.at(row, j), h.at(row, jmin)));
                reduced_any = true;
            }
            if (!reduced_any) {
                if (jmin != next) h.swap_cols(jmin, next);
                if (h.at(row, next) < 0) h.negate_col(next);
                pivot_rows.push_back(row);
                ++next;
                break;
            }
        }
    }
    // Normalize entries left of each pivot into [0, pivot).
    for (std::size_t j = 0; j < pivot_rows.size(); ++j) {
        const std::size_t pr = pivot_rows[j];
        for (std::size_t k = 0; k < j; ++k)
            h.add_col_multiple(k, j, -detail::floor_div(h.at(pr, k), h.at(pr, j)));
    }
    // Keep only the pivot columns.
    IntMatrix out(rows, pivot_rows.size());
    for (std::size_t j = 0; j < pivot_rows.size(); ++j) out.set_col(j, h.col(j));
    return out;
}

}  // namespace moncat

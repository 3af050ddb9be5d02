#pragma once

// Exact linear algebra on IntMatrix / RationalMatrix: determinants, minors,
// adjugate-based inverses, Schur complements, Kronecker products and rank.
// Integer determinants run on checked 64-bit arithmetic first and are
// recomputed with BigInt if the 64-bit path overflows; nothing ever wraps.

#include <vector>

#include "eprlab/kernel.hpp"
#include "eprlab/matrix.hpp"

namespace eprlab {

namespace detail {

inline BigInt det_cells_escalating(const std::vector<std::int64_t>& cells, int n) {
    try {
        std::vector<CheckedI64> buf(cells.begin(), cells.end());
        return BigInt(bareiss_det_inplace(buf.data(), n).v);
    } catch (const OverflowError&) {
        std::vector<BigInt> buf(cells.begin(), cells.end());
        return bareiss_det_inplace(buf.data(), n);
    }
}

template <class T>
std::vector<T> gather(const basic_matrix<T>& m, const std::vector<int>& rows,
                      const std::vector<int>& cols) {
    std::vector<T> out;
    out.reserve(rows.size() * cols.size());
    for (int r : rows)
        for (int c : cols) out.push_back(m.at(r, c));
    return out;
}

} // namespace detail

inline BigInt det(const IntMatrix& m) {
    return detail::det_cells_escalating(m.cells(), m.order());
}

inline Rational det(const RationalMatrix& m) {
    std::vector<Rational> buf = m.cells();
    return bareiss_det_inplace(buf.data(), m.order());
}

/// det of the submatrix in `rows` x `cols`; principal when rows = cols.
inline BigInt minor(const IntMatrix& m, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size())
        throw PreconditionError("minor: row and column sets differ in size");
    if (rows.empty())
        throw PreconditionError("minor: index sets must be non-empty");
    rows.check_within(m.order());
    cols.check_within(m.order());
    return detail::det_cells_escalating(
        detail::gather(m, rows.members(), cols.members()), rows.size());
}

inline Rational minor(const RationalMatrix& m, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size())
        throw PreconditionError("minor: row and column sets differ in size");
    if (rows.empty())
        throw PreconditionError("minor: index sets must be non-empty");
    rows.check_within(m.order());
    cols.check_within(m.order());
    std::vector<Rational> buf = detail::gather(m, rows.members(), cols.members());
    return bareiss_det_inplace(buf.data(), rows.size());
}

inline BigInt principal_minor(const IntMatrix& m, const IndexSet& mu) {
    return minor(m, mu, mu);
}

/// det of the submatrix with 1-based row i and column j deleted.
/// Order 1 yields the empty minor, which is 1.
inline BigInt deleted_minor(const IntMatrix& m, int i, int j) {
    const int n = m.order();
    if (i < 1 || i > n || j < 1 || j > n)
        throw PreconditionError("deleted_minor: index out of range");
    if (n == 1) return 1;
    std::vector<std::int64_t> cells;
    cells.reserve(static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 1));
    for (int r = 1; r <= n; ++r) {
        if (r == i) continue;
        for (int c = 1; c <= n; ++c) {
            if (c == j) continue;
            cells.push_back(m.at(r, c));
        }
    }
    return detail::det_cells_escalating(cells, n - 1);
}

/// Exact inverse via the adjugate formula; entry (i,j) is
/// (-1)^{i+j} det(M with row j, column i deleted) / det(M), in lowest terms.
inline RationalMatrix inverse(const IntMatrix& m) {
    const BigInt d = det(m);
    if (d == 0) throw PreconditionError("inverse: matrix is singular");
    const int n = m.order();
    RationalMatrix out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            BigInt cof = deleted_minor(m, j, i);
            if ((i + j) % 2 != 0) cof = -cof;
            out.at(i, j) = Rational(cof, d);
        }
    return out;
}

/// Gauss-Jordan inverse over the rationals.
inline RationalMatrix inverse(const RationalMatrix& m) {
    const int n = m.order();
    RationalMatrix work = m;
    RationalMatrix inv(n);
    for (int i = 1; i <= n; ++i) inv.at(i, i) = Rational(1);

    for (int col = 1; col <= n; ++col) {
        int pivot = 0;
        for (int r = col; r <= n; ++r)
            if (!work.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == 0) throw PreconditionError("inverse: matrix is singular");
        if (pivot != col)
            for (int c = 1; c <= n; ++c) {
                std::swap(work.at(col, c), work.at(pivot, c));
                std::swap(inv.at(col, c), inv.at(pivot, c));
            }
        const Rational p = work.at(col, col);
        for (int c = 1; c <= n; ++c) {
            work.at(col, c) /= p;
            inv.at(col, c) /= p;
        }
        for (int r = 1; r <= n; ++r) {
            if (r == col || work.at(r, col).is_zero()) continue;
            const Rational f = work.at(r, col);
            for (int c = 1; c <= n; ++c) {
                work.at(r, c) -= f * work.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.order() != b.order())
        throw PreconditionError("multiply: order mismatch");
    const int n = a.order();
    RationalMatrix out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Rational s(0);
            for (int k = 1; k <= n; ++k) s += a.at(i, k) * b.at(k, j);
            out.at(i, j) = s;
        }
    return out;
}

/// Schur complement M / M[mu]: M[mu^c] - M[mu^c,mu] (M[mu])^{-1} M[mu,mu^c].
/// Requires a nonsingular pivot block and a proper, non-empty mu.
inline RationalMatrix schur_complement(const IntMatrix& m, const IndexSet& mu) {
    const int n = m.order();
    mu.check_within(n);
    if (mu.empty() || mu.size() >= n)
        throw PreconditionError("schur_complement: mu must be a proper non-empty subset");
    if (principal_minor(m, mu) == 0)
        throw PreconditionError("schur_complement: singular pivot block");

    const IndexSet muc = mu.complement(n);
    const RationalMatrix pivot_inv = inverse(m.principal_submatrix(mu));
    const int q = muc.size();
    const int k = mu.size();

    RationalMatrix out(q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            const int ri = muc.members()[static_cast<std::size_t>(i)];
            const int cj = muc.members()[static_cast<std::size_t>(j)];
            Rational s(m.at(ri, cj));
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) {
                    const int ra = mu.members()[static_cast<std::size_t>(a)];
                    const int cb = mu.members()[static_cast<std::size_t>(b)];
                    s -= Rational(m.at(ri, ra)) * pivot_inv.at(a + 1, b + 1) *
                         Rational(m.at(cb, cj));
                }
            out.at(i + 1, j + 1) = s;
        }
    return out;
}

inline IntMatrix kronecker(const IntMatrix& p, const IntMatrix& q) {
    const int np = p.order(), nq = q.order();
    IntMatrix out(np * nq);
    for (int i = 1; i <= np; ++i)
        for (int j = 1; j <= np; ++j) {
            const std::int64_t f = p.at(i, j);
            for (int a = 1; a <= nq; ++a)
                for (int b = 1; b <= nq; ++b)
                    out.at((i - 1) * nq + a, (j - 1) * nq + b) =
                        checked_mul_i64(f, q.at(a, b));
        }
    return out;
}

/// Rank by exact elimination over the rationals.
inline int rank(const RationalMatrix& m) {
    const int n = m.order();
    RationalMatrix work = m;
    int r = 0;
    for (int col = 1; col <= n && r < n; ++col) {
        int pivot = 0;
        for (int row = r + 1; row <= n; ++row)
            if (!work.at(row, col).is_zero()) {
                pivot = row;
                break;
            }
        if (pivot == 0) continue;
        ++r;
        if (pivot != r)
            for (int c = 1; c <= n; ++c) std::swap(work.at(r, c), work.at(pivot, c));
        const Rational p = work.at(r, col);
        for (int row = r + 1; row <= n; ++row) {
            if (work.at(row, col).is_zero()) continue;
            const Rational f = work.at(row, col) / p;
            for (int c = col; c <= n; ++c) work.at(row, c) -= f * work.at(r, c);
        }
    }
    return r;
}

inline int rank(const IntMatrix& m) { return rank(to_rational(m)); }

/// Rank of a symmetric matrix, which equals the largest order of a
/// nonsingular principal submatrix (0 for the zero matrix).
inline int rank_principal(const IntMatrix& m) {
    if (!m.is_symmetric())
        throw PreconditionError("rank_principal: matrix is not symmetric");
    return rank(m);
}

} // namespace eprlab

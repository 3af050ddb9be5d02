#pragma once

// Allocation-free exact kernels shared by the library operations and the
// enumeration harness. Everything here works on small row-major buffers.

#include <array>
#include <cstdint>
#include <cstdlib>

#include "eprlab/common.hpp"

namespace eprlab {

/// Fraction-free (Bareiss) elimination on a row-major n x n buffer.
/// Destroys the buffer and returns the exact determinant. Every division
/// performed is exact over any integral domain, so T may be a checked
/// 64-bit integer, BigInt, or Rational.
template <class T>
T bareiss_det_inplace(T* a, int n) {
    if (n == 0) return T(1);
    bool negate = false;
    T prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        int pivot_row = -1;
        for (int r = k; r < n; ++r) {
            if (!(a[r * n + k] == T(0))) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) return T(0);
        if (pivot_row != k) {
            for (int j = k; j < n; ++j) std::swap(a[k * n + j], a[pivot_row * n + j]);
            negate = !negate;
        }
        const T pivot = a[k * n + k];
        for (int i = k + 1; i < n; ++i) {
            const T head = a[i * n + k];
            for (int j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * pivot - head * a[k * n + j]) / prev;
        }
        prev = pivot;
    }
    T d = a[(n - 1) * n + (n - 1)];
    return negate ? -d : d;
}

/// Lexicographic k-subsets of {0, ..., n-1}. `idx` must hold the current
/// combination; returns false when exhausted.
inline void first_combination(int* idx, int k) {
    for (int i = 0; i < k; ++i) idx[i] = i;
}

inline bool next_combination(int* idx, int k, int n) {
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

/// Upper bound on the order handled by the fixed-size kernels below. For
/// 0-1 matrices up to this order every minor fits comfortably in 64 bits
/// (Hadamard-type bound), so the checked arithmetic never escalates.
inline constexpr int kFlatCap = 13;

/// Small row-major matrix on the stack; the enumeration harness works on
/// these to avoid per-candidate allocation.
struct FlatMatrix {
    int n = 0;
    std::array<std::int64_t, kFlatCap * kFlatCap> a{};

    std::int64_t get(int i0, int j0) const { return a[static_cast<std::size_t>(i0 * n + j0)]; }
    void set(int i0, int j0, std::int64_t v) { a[static_cast<std::size_t>(i0 * n + j0)] = v; }
};

namespace detail {

inline std::int64_t det_checked(const std::int64_t* src, int n) {
    CheckedI64 buf[kFlatCap * kFlatCap];
    for (int i = 0; i < n * n; ++i) buf[i] = src[i];
    return bareiss_det_inplace(buf, n).v;
}

} // namespace detail

/// Determinant of a flat matrix; throws OverflowError rather than wrapping.
inline std::int64_t det_flat(const FlatMatrix& m) {
    return detail::det_checked(m.a.data(), m.n);
}

/// Determinant of the principal submatrix selected by `idx` (0-based rows).
inline std::int64_t principal_minor_flat(const FlatMatrix& m, const int* idx, int k) {
    CheckedI64 buf[kFlatCap * kFlatCap];
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            buf[i * k + j] = m.get(idx[i], idx[j]);
    return bareiss_det_inplace(buf, k).v;
}

/// Determinant of the submatrix with row i0 and column j0 deleted (0-based).
inline std::int64_t deleted_minor_flat(const FlatMatrix& m, int i0, int j0) {
    const int k = m.n - 1;
    CheckedI64 buf[kFlatCap * kFlatCap];
    int r = 0;
    for (int i = 0; i < m.n; ++i) {
        if (i == i0) continue;
        int c = 0;
        for (int j = 0; j < m.n; ++j) {
            if (j == j0) continue;
            buf[r * k + c] = m.get(i, j);
            ++c;
        }
        ++r;
    }
    return bareiss_det_inplace(buf, k).v;
}

/// True iff every order-k principal minor is zero (early exit on the first
/// nonzero one).
inline bool all_principal_minors_zero(const FlatMatrix& m, int k) {
    int idx[kFlatCap];
    first_combination(idx, k);
    do {
        if (principal_minor_flat(m, idx, k) != 0) return false;
    } while (next_combination(idx, k, m.n));
    return true;
}

/// True iff every order-k principal minor is nonzero (early exit on zero).
inline bool all_principal_minors_nonzero(const FlatMatrix& m, int k) {
    int idx[kFlatCap];
    first_combination(idx, k);
    do {
        if (principal_minor_flat(m, idx, k) == 0) return false;
    } while (next_combination(idx, k, m.n));
    return true;
}

/// Exhaustive letter at one order: 'A' all nonzero, 'N' all zero, 'S' mixed
/// (exits as soon as both a zero and a nonzero minor have been seen).
inline char letter_at_flat(const FlatMatrix& m, int k) {
    bool seen_zero = false, seen_nonzero = false;
    int idx[kFlatCap];
    first_combination(idx, k);
    do {
        if (principal_minor_flat(m, idx, k) == 0)
            seen_zero = true;
        else
            seen_nonzero = true;
        if (seen_zero && seen_nonzero) return 'S';
    } while (next_combination(idx, k, m.n));
    return seen_zero ? 'N' : 'A';
}

/// Tail-only evaluator for the harness: all order-(n-2) principal minors
/// zero, all order-(n-1) nonzero, det nonzero. `det` must be det(m).
inline bool ends_naa_flat(const FlatMatrix& m, std::int64_t det) {
    if (m.n < 3 || det == 0) return false;
    if (!all_principal_minors_zero(m, m.n - 2)) return false;
    return all_principal_minors_nonzero(m, m.n - 1);
}

struct EquimodFlat {
    bool equimodular = false;
    bool constant_diagonal = false;
    std::int64_t cofactor_modulus = 0; // shared |minor| when equimodular
};

/// Equimodularity and constant diagonal of the inverse, decided entirely
/// from integer cofactors: the inverse is equimodular iff all n^2 minors of
/// order n-1 share one nonzero modulus, and has constant diagonal iff the
/// principal ones are equal as integers. `det` must be det(m) and nonzero.
inline EquimodFlat equimodular_flat(const FlatMatrix& m, std::int64_t det) {
    EquimodFlat out;
    if (det == 0) return out;
    if (m.n == 1) {
        out.equimodular = true;
        out.constant_diagonal = true;
        out.cofactor_modulus = 1;
        return out;
    }
    const std::int64_t first = deleted_minor_flat(m, 0, 0);
    const std::int64_t mod = first < 0 ? -first : first;
    if (mod == 0) return out;
    bool cd = true;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            if (i == 0 && j == 0) continue;
            const std::int64_t v = deleted_minor_flat(m, i, j);
            if (v != mod && v != -mod) return out;
            if (i == j && v != first) cd = false;
        }
    out.equimodular = true;
    out.constant_diagonal = cd;
    out.cofactor_modulus = mod;
    return out;
}

// --- GF(2) -------------------------------------------------------------
//
// Rows are packed into machine words, bit j0 = column j0. Supports orders
// up to 64; the harness only ever uses n <= 13.

inline int gf2_rank_det(std::uint64_t* rows, int k) {
    for (int c = 0; c < k; ++c) {
        int p = -1;
        for (int r = c; r < k; ++r)
            if ((rows[r] >> c) & 1u) {
                p = r;
                break;
            }
        if (p < 0) return 0;
        std::swap(rows[c], rows[p]);
        for (int r = c + 1; r < k; ++r)
            if ((rows[r] >> c) & 1u) rows[r] ^= rows[c];
    }
    return 1;
}

/// Parity (0 or 1) of the principal minor of the packed matrix selected by
/// `idx`.
inline int gf2_principal_minor(const std::uint64_t* packed_rows, const int* idx, int k) {
    std::uint64_t sub[64];
    for (int r = 0; r < k; ++r) {
        std::uint64_t v = 0;
        const std::uint64_t row = packed_rows[idx[r]];
        for (int c = 0; c < k; ++c) v |= ((row >> idx[c]) & 1u) << c;
        sub[r] = v;
    }
    return gf2_rank_det(sub, k);
}

/// Letter of the GF(2) epr-sequence at one order.
inline char gf2_letter_at(const std::uint64_t* packed_rows, int n, int k) {
    bool seen_zero = false, seen_nonzero = false;
    int idx[64];
    first_combination(idx, k);
    do {
        if (gf2_principal_minor(packed_rows, idx, k) == 0)
            seen_zero = true;
        else
            seen_nonzero = true;
        if (seen_zero && seen_nonzero) return 'S';
    } while (next_combination(idx, k, n));
    return seen_zero ? 'N' : 'A';
}

} // namespace eprlab

#pragma once

// Named matrix constructions used throughout: I_n, O_n, J_n, J_n - 2I_n,
// cycle adjacency matrices, and the bordering construction that appends a
// duplicate of the last row and column.

#include <string>

#include "eprlab/matrix.hpp"

namespace eprlab {

inline IntMatrix identity_matrix(int n) {
    IntMatrix m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
    return m;
}

inline IntMatrix zero_matrix(int n) { return IntMatrix(n); }

inline IntMatrix all_ones_matrix(int n) { return IntMatrix(n, 1); }

inline IntMatrix ones_minus_two_identity(int n) {
    IntMatrix m(n, 1);
    for (int i = 1; i <= n; ++i) m.at(i, i) = -1;
    return m;
}

/// 0-1 adjacency matrix of the cycle 1-2-...-n-1, n >= 3.
inline IntMatrix cycle_adjacency(int n) {
    if (n < 3) throw PreconditionError("cycle_adjacency requires n >= 3");
    IntMatrix m(n);
    for (int i = 1; i <= n; ++i) {
        const int j = i % n + 1;
        m.at(i, j) = 1;
        m.at(j, i) = 1;
    }
    return m;
}

/// Appends a copy of the last row and column (the corner entry included),
/// producing an (n+1)-order symmetric matrix whose final two rows are equal.
inline IntMatrix border_duplicate(const IntMatrix& m) {
    if (!m.is_symmetric())
        throw PreconditionError("border_duplicate requires a symmetric matrix");
    const int n = m.order();
    IntMatrix out(n + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) out.at(i, j) = m.at(i, j);
    for (int i = 1; i <= n; ++i) {
        out.at(i, n + 1) = m.at(i, n);
        out.at(n + 1, i) = m.at(n, i);
    }
    out.at(n + 1, n + 1) = m.at(n, n);
    return out;
}

enum class MatrixKind { Identity, Zero, AllOnes, AllOnesMinusTwoIdentity, CycleAdjacency };

inline IntMatrix construct(MatrixKind kind, int n) {
    switch (kind) {
        case MatrixKind::Identity: return identity_matrix(n);
        case MatrixKind::Zero: return zero_matrix(n);
        case MatrixKind::AllOnes: return all_ones_matrix(n);
        case MatrixKind::AllOnesMinusTwoIdentity: return ones_minus_two_identity(n);
        case MatrixKind::CycleAdjacency: return cycle_adjacency(n);
    }
    throw PreconditionError("construct: unknown kind");
}

/// CLI-facing kind names.
inline MatrixKind parse_matrix_kind(const std::string& name) {
    if (name == "identity") return MatrixKind::Identity;
    if (name == "zero") return MatrixKind::Zero;
    if (name == "ones") return MatrixKind::AllOnes;
    if (name == "jn-2i") return MatrixKind::AllOnesMinusTwoIdentity;
    if (name == "cycle") return MatrixKind::CycleAdjacency;
    throw PreconditionError("unknown matrix kind: " + name);
}

} // namespace eprlab

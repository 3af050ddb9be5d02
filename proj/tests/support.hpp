#pragma once

// Shared test helpers. The oracles here are intentionally independent of
// the implementation paths they check: the determinant oracle is plain
// cofactor expansion, subset searches are brute force.

#include <random>
#include <vector>

#include "eprlab/exact.hpp"
#include "eprlab/kernel.hpp"
#include "eprlab/matrix.hpp"

namespace testsupport {

using eprlab::BigInt;
using eprlab::IndexSet;
using eprlab::IntMatrix;

/// Cofactor expansion along the first row; exponential, test-only.
inline BigInt det_cofactor(const IntMatrix& m) {
    const int n = m.order();
    if (n == 1) return m.at(1, 1);
    BigInt sum = 0;
    for (int j = 1; j <= n; ++j) {
        if (m.at(1, j) == 0) continue;
        IntMatrix sub(n - 1);
        for (int r = 2; r <= n; ++r) {
            int cc = 0;
            for (int c = 1; c <= n; ++c) {
                if (c == j) continue;
                ++cc;
                sub.at(r - 1, cc) = m.at(r, c);
            }
        }
        BigInt term = BigInt(m.at(1, j)) * det_cofactor(sub);
        if (j % 2 == 0) term = -term;
        sum += term;
    }
    return sum;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.at(i, j) = dist(rng);
    return m;
}

inline IntMatrix random_symmetric(std::mt19937_64& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            const int v = dist(rng);
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

/// All k-subsets of {1, ..., n} as IndexSets.
inline std::vector<IndexSet> subsets_of_size(int n, int k) {
    std::vector<IndexSet> out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    eprlab::first_combination(idx.data(), k);
    do {
        std::vector<int> members(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) members[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i)] + 1;
        out.push_back(IndexSet(std::move(members)));
    } while (eprlab::next_combination(idx.data(), k, n));
    return out;
}

/// 1-based positions of `sub`'s members inside `super` (both ascending).
inline IndexSet positions_in(const IndexSet& super, const IndexSet& sub) {
    std::vector<int> pos;
    for (int x : sub.members()) {
        for (int i = 0; i < super.size(); ++i)
            if (super.members()[static_cast<std::size_t>(i)] == x) {
                pos.push_back(i + 1);
                break;
            }
    }
    return IndexSet(std::move(pos));
}

/// Largest order of a nonsingular principal submatrix, by brute force.
inline int principal_rank_bruteforce(const IntMatrix& m) {
    for (int k = m.order(); k >= 1; --k)
        for (const auto& mu : subsets_of_size(m.order(), k))
            if (eprlab::principal_minor(m, mu) != 0) return k;
    return 0;
}

} // namespace testsupport

#pragma once

// Enumeration of all symmetric 0-1 matrices of order n as masks over the
// n(n+1)/2 free entries.
//
// Bit order (frozen; checkpoints and reports depend on it):
//   bits 0 .. n-1          the diagonal entries (1,1), (2,2), ..., (n,n)
//   bits n .. n(n+1)/2 - 1 the strict upper triangle in row-major order:
//                          (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n)
// Bit b of the mask is (mask >> b) & 1.
//
// The mask space is split into `count` contiguous shards; shard i covers
// [floor(i * total / count), floor((i+1) * total / count)).

#include <cstdint>
#include <string>
#include <utility>

#include "eprlab/common.hpp"
#include "eprlab/kernel.hpp"
#include "eprlab/matrix.hpp"

namespace eprlab {

/// Hard cap on enumeration order: minors of 0-1 matrices up to this order
/// are guaranteed to fit in 64 bits.
inline constexpr int kMaxEnumerationOrder = 13;

struct Shard {
    int index = 0;
    int count = 1;

    void validate() const {
        if (count < 1 || index < 0 || index >= count)
            throw PreconditionError("invalid shard " + std::to_string(index) + "/" +
                                    std::to_string(count));
    }
    friend bool operator==(const Shard& a, const Shard& b) {
        return a.index == b.index && a.count == b.count;
    }
};

inline int triangle_bits(int n) { return n * (n + 1) / 2; }

inline void check_enumeration_order(int n) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw PreconditionError("enumeration order must be in [1, " +
                                std::to_string(kMaxEnumerationOrder) + "], got " +
                                std::to_string(n));
}

inline BigInt mask_space_size(int n) {
    check_enumeration_order(n);
    return BigInt(1) << triangle_bits(n);
}

/// [lo, hi) of the masks owned by the shard.
inline std::pair<BigInt, BigInt> shard_range(int n, const Shard& shard) {
    shard.validate();
    const BigInt total = mask_space_size(n);
    const BigInt lo = total * shard.index / shard.count;
    const BigInt hi = total * (shard.index + 1) / shard.count;
    return {lo, hi};
}

namespace detail {

inline void place_mask_bit(int n, int b, bool on, FlatMatrix& m) {
    if (!on) return;
    if (b < n) {
        m.set(b, b, 1);
        return;
    }
    int off = b - n;
    for (int i = 0; i < n; ++i) {
        const int row_len = n - 1 - i;
        if (off < row_len) {
            const int j = i + 1 + off;
            m.set(i, j, 1);
            m.set(j, i, 1);
            return;
        }
        off -= row_len;
    }
}

} // namespace detail

/// Decodes a mask that fits in 64 bits (n <= 10 always does).
inline void decode_mask(int n, std::uint64_t mask, FlatMatrix& out) {
    out.n = n;
    out.a.fill(0);
    const int bits = triangle_bits(n);
    for (int b = 0; b < bits; ++b)
        detail::place_mask_bit(n, b, (mask >> b) & 1u, out);
}

inline void decode_mask(int n, const BigInt& mask, FlatMatrix& out) {
    out.n = n;
    out.a.fill(0);
    const int bits = triangle_bits(n);
    for (int b = 0; b < bits; ++b)
        detail::place_mask_bit(n, b, boost::multiprecision::bit_test(mask, static_cast<unsigned>(b)),
                               out);
}

inline IntMatrix matrix_from_mask(int n, const BigInt& mask) {
    check_enumeration_order(n);
    if (mask < 0 || mask >= mask_space_size(n))
        throw PreconditionError("mask out of range for order " + std::to_string(n));
    FlatMatrix flat;
    decode_mask(n, mask, flat);
    IntMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.at(i, j) = flat.get(i - 1, j - 1);
    return m;
}

inline BigInt mask_of_matrix(const IntMatrix& m) {
    check_enumeration_order(m.order());
    if (!m.is_symmetric() || !m.is_zero_one())
        throw PreconditionError("mask_of_matrix: matrix must be symmetric 0-1");
    const int n = m.order();
    BigInt mask = 0;
    int b = 0;
    for (int i = 1; i <= n; ++i, ++b)
        if (m.at(i, i) != 0) boost::multiprecision::bit_set(mask, static_cast<unsigned>(b));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++b)
            if (m.at(i, j) != 0) boost::multiprecision::bit_set(mask, static_cast<unsigned>(b));
    return mask;
}

/// Calls fn(mask, flat_matrix) for every mask in [lo, hi), in mask order.
/// Uses a 64-bit counter whenever the space allows it.
template <class Fn>
void for_each_in_range(int n, const BigInt& lo, const BigInt& hi, Fn&& fn) {
    check_enumeration_order(n);
    if (lo < 0 || hi > mask_space_size(n) || lo > hi)
        throw PreconditionError("mask range out of bounds");
    FlatMatrix flat;
    if (triangle_bits(n) <= 63) {
        const std::uint64_t l = lo.convert_to<std::uint64_t>();
        const std::uint64_t h = hi.convert_to<std::uint64_t>();
        for (std::uint64_t mask = l; mask < h; ++mask) {
            decode_mask(n, mask, flat);
            fn(BigInt(mask), flat);
        }
    } else {
        for (BigInt mask = lo; mask < hi; ++mask) {
            decode_mask(n, mask, flat);
            fn(mask, flat);
        }
    }
}

/// Calls fn for every symmetric 0-1 matrix of order n in the shard,
/// exactly once, in mask order.
template <class Fn>
void enumerate(int n, const Shard& shard, Fn&& fn) {
    const auto [lo, hi] = shard_range(n, shard);
    for_each_in_range(n, lo, hi, std::forward<Fn>(fn));
}

/// Minimum mask over all simultaneous row/column permutations: a canonical
/// form for census reporting. Cost grows as n!, so this is restricted to
/// small orders and small surviving sets.
inline BigInt canonical_mask(const IntMatrix& m) {
    const int n = m.order();
    if (n > 8)
        throw PreconditionError("canonical_mask supports order <= 8 only");
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    BigInt best = -1;
    IntMatrix p(n);
    do {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                p.at(i, j) = m.at(perm[static_cast<std::size_t>(i - 1)],
                                  perm[static_cast<std::size_t>(j - 1)]);
        const BigInt mask = mask_of_matrix(p);
        if (best < 0 || mask < best) best = mask;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace eprlab

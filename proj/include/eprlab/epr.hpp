#pragma once

// Enhanced principal rank characteristic sequences over the rationals and
// over GF(2). Letter j of the sequence is 'A' when all order-j principal
// minors are nonzero (in the tagged field), 'N' when all are zero, and 'S'
// otherwise. Every order is evaluated exhaustively; nothing is inferred
// from sequence theorems, so those theorems stay testable.

#include <string>
#include <vector>

#include "eprlab/exact.hpp"
#include "eprlab/kernel.hpp"
#include "eprlab/matrix.hpp"

namespace eprlab {

enum class FieldTag { Rationals, GF2 };

inline const char* field_tag_suffix(FieldTag t) {
    return t == FieldTag::Rationals ? "@Q" : "@GF2";
}

struct EprSequence {
    std::string letters; // word over {A, S, N}, letter j at index j-1
    FieldTag field = FieldTag::Rationals;

    int size() const { return static_cast<int>(letters.size()); }

    char at(int j) const { // 1-based
        if (j < 1 || j > size())
            throw PreconditionError("sequence letter index out of range");
        return letters[static_cast<std::size_t>(j - 1)];
    }

    const std::string& str() const { return letters; }
    std::string tagged() const { return letters + field_tag_suffix(field); }

    friend bool operator==(const EprSequence& a, const EprSequence& b) {
        return a.letters == b.letters && a.field == b.field;
    }
};

/// Parses "NSNAA" or "NSNAA@Q" / "NSNAN@GF2". Defaults to the rationals
/// when no tag is given.
inline EprSequence parse_sequence(const std::string& text) {
    std::string word = text;
    FieldTag tag = FieldTag::Rationals;
    if (auto pos = text.find('@'); pos != std::string::npos) {
        word = text.substr(0, pos);
        const std::string suffix = text.substr(pos);
        if (suffix == "@Q")
            tag = FieldTag::Rationals;
        else if (suffix == "@GF2")
            tag = FieldTag::GF2;
        else
            throw ParseError("unknown field tag '" + suffix + "'", pos);
    }
    if (word.empty()) throw ParseError("empty epr-sequence", 0);
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] != 'A' && word[i] != 'S' && word[i] != 'N')
            throw ParseError("epr-sequence letters must be A, S or N", i);
    return EprSequence{word, tag};
}

namespace detail {

template <class T, class Scalar>
char letter_from_minors(const basic_matrix<T>& m, int order) {
    const int n = m.order();
    std::vector<int> idx(static_cast<std::size_t>(order));
    first_combination(idx.data(), order);
    std::vector<Scalar> buf(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
    bool seen_zero = false, seen_nonzero = false;
    do {
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j)
                buf[static_cast<std::size_t>(i * order + j)] =
                    Scalar(m.at(idx[static_cast<std::size_t>(i)] + 1,
                                idx[static_cast<std::size_t>(j)] + 1));
        if (bareiss_det_inplace(buf.data(), order) == Scalar(0))
            seen_zero = true;
        else
            seen_nonzero = true;
        if (seen_zero && seen_nonzero) return 'S';
    } while (next_combination(idx.data(), order, n));
    return seen_zero ? 'N' : 'A';
}

} // namespace detail

/// Letter of epr at one order, by exhaustive evaluation of all C(n, order)
/// principal minors with exact arithmetic (early exit once mixed).
inline char letter_at_order(const IntMatrix& m, int order) {
    if (order < 1 || order > m.order())
        throw PreconditionError("letter_at_order: order out of range");
    try {
        return detail::letter_from_minors<std::int64_t, CheckedI64>(m, order);
    } catch (const OverflowError&) {
        return detail::letter_from_minors<std::int64_t, BigInt>(m, order);
    }
}

inline char letter_at_order(const RationalMatrix& m, int order) {
    if (order < 1 || order > m.order())
        throw PreconditionError("letter_at_order: order out of range");
    return detail::letter_from_minors<Rational, Rational>(m, order);
}

inline EprSequence epr(const IntMatrix& m) {
    if (!m.is_symmetric()) throw PreconditionError("epr: matrix is not symmetric");
    EprSequence seq;
    seq.field = FieldTag::Rationals;
    for (int j = 1; j <= m.order(); ++j) seq.letters.push_back(letter_at_order(m, j));
    return seq;
}

inline EprSequence epr(const RationalMatrix& m) {
    if (!m.is_symmetric()) throw PreconditionError("epr: matrix is not symmetric");
    EprSequence seq;
    seq.field = FieldTag::Rationals;
    for (int j = 1; j <= m.order(); ++j) seq.letters.push_back(letter_at_order(m, j));
    return seq;
}

/// epr-sequence of a symmetric 0-1 matrix read over GF(2): letter j records
/// whether all / some / none of the order-j principal minors are odd.
inline EprSequence epr2(const IntMatrix& m) {
    if (!m.is_symmetric()) throw PreconditionError("epr2: matrix is not symmetric");
    if (!m.is_zero_one()) throw PreconditionError("epr2: matrix is not 0-1");
    const int n = m.order();
    if (n > 64) throw PreconditionError("epr2: order above 64 is unsupported");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (m.at(i, j) != 0)
                rows[static_cast<std::size_t>(i - 1)] |= std::uint64_t(1) << (j - 1);
    EprSequence seq;
    seq.field = FieldTag::GF2;
    for (int j = 1; j <= n; ++j)
        seq.letters.push_back(gf2_letter_at(rows.data(), n, j));
    return seq;
}

/// epr of the inverse of a nonsingular symmetric matrix: the first n-1
/// letters reversed, then 'A'.
inline EprSequence inverse_epr(const EprSequence& seq) {
    const int n = seq.size();
    if (n < 1 || seq.letters.back() != 'A')
        throw PreconditionError("inverse_epr: sequence must end with A (nonsingular)");
    EprSequence out;
    out.field = seq.field;
    out.letters.assign(seq.letters.rbegin() + 1, seq.letters.rend());
    out.letters.push_back('A');
    return out;
}

} // namespace eprlab

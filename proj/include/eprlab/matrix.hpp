#pragma once

#include <algorithm>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "eprlab/common.hpp"
#include "eprlab/rational.hpp"

namespace eprlab {

/// Sorted, duplicate-free subset of {1, ..., n}. Index sets are 1-based
/// throughout the public API.
class IndexSet {
public:
    IndexSet() = default;

    explicit IndexSet(std::vector<int> members) : members_(std::move(members)) {
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (members_[i] < 1)
                throw PreconditionError("index set members must be >= 1");
            if (i > 0 && members_[i] <= members_[i - 1])
                throw PreconditionError("index set must be strictly ascending");
        }
    }

    IndexSet(std::initializer_list<int> members)
        : IndexSet(std::vector<int>(members)) {}

    /// {1, 2, ..., n}
    static IndexSet full(int n) {
        std::vector<int> m(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i + 1;
        return IndexSet(std::move(m));
    }

    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    const std::vector<int>& members() const { return members_; }

    bool contains(int i) const {
        return std::binary_search(members_.begin(), members_.end(), i);
    }

    IndexSet complement(int n) const {
        check_within(n);
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(n) - members_.size());
        for (int i = 1; i <= n; ++i)
            if (!contains(i)) out.push_back(i);
        return IndexSet(std::move(out));
    }

    IndexSet unite(const IndexSet& other) const {
        std::vector<int> out;
        std::set_union(members_.begin(), members_.end(),
                       other.members_.begin(), other.members_.end(),
                       std::back_inserter(out));
        return IndexSet(std::move(out));
    }

    void check_within(int n) const {
        if (!members_.empty() && members_.back() > n)
            throw PreconditionError("index out of range: " +
                                    std::to_string(members_.back()) + " > " +
                                    std::to_string(n));
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        return a.members_ == b.members_;
    }

private:
    std::vector<int> members_;
};

/// Dense square matrix over an exact scalar type. Entries are stored
/// row-major; the accessor API is 1-based to match the usual [n] convention.
template <class T>
class basic_matrix {
public:
    explicit basic_matrix(int n, const T& fill = T(0))
        : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {
        if (n < 1) throw PreconditionError("matrix order must be >= 1");
    }

    static basic_matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
        const int n = static_cast<int>(rows.size());
        basic_matrix m(n);
        int i = 1;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n)
                throw PreconditionError("matrix rows must all have length n");
            int j = 1;
            for (const auto& x : row) m.at(i, j++) = x;
            ++i;
        }
        return m;
    }

    int order() const { return n_; }

    const T& at(int i, int j) const {
        check_index(i, j);
        return cells_[idx(i, j)];
    }
    T& at(int i, int j) {
        check_index(i, j);
        return cells_[idx(i, j)];
    }

    const std::vector<T>& cells() const { return cells_; }

    bool is_symmetric() const {
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                if (!(cells_[idx(i, j)] == cells_[idx(j, i)])) return false;
        return true;
    }

    bool is_zero_one() const {
        for (const T& x : cells_)
            if (!(x == T(0)) && !(x == T(1))) return false;
        return true;
    }

    bool has_zero_diagonal() const {
        for (int i = 1; i <= n_; ++i)
            if (!(cells_[idx(i, i)] == T(0))) return false;
        return true;
    }

    basic_matrix submatrix(const IndexSet& rows, const IndexSet& cols) const {
        rows.check_within(n_);
        cols.check_within(n_);
        if (rows.size() != cols.size())
            throw PreconditionError("row and column index sets differ in size");
        if (rows.empty())
            throw PreconditionError("empty index set selects no submatrix");
        basic_matrix out(rows.size());
        for (int i = 0; i < rows.size(); ++i)
            for (int j = 0; j < cols.size(); ++j)
                out.at(i + 1, j + 1) =
                    cells_[idx(rows.members()[static_cast<std::size_t>(i)],
                               cols.members()[static_cast<std::size_t>(j)])];
        return out;
    }

    basic_matrix principal_submatrix(const IndexSet& mu) const {
        return submatrix(mu, mu);
    }

    friend bool operator==(const basic_matrix& a, const basic_matrix& b) {
        return a.n_ == b.n_ && a.cells_ == b.cells_;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j - 1);
    }
    void check_index(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw PreconditionError("matrix index out of range");
    }

    int n_;
    std::vector<T> cells_;
};

using IntMatrix = basic_matrix<std::int64_t>;
using RationalMatrix = basic_matrix<Rational>;

inline RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix out(m.order());
    for (int i = 1; i <= m.order(); ++i)
        for (int j = 1; j <= m.order(); ++j)
            out.at(i, j) = Rational(m.at(i, j));
    return out;
}

// --- text format -----------------------------------------------------------
//
// First line: the order n. Then n lines of n whitespace-separated integers.
// Rational matrices serialize entries as p/q, or just p when q = 1.

inline constexpr int kMaxParsedOrder = 1024;

inline IntMatrix read_int_matrix(std::istream& in) {
    long long n = 0;
    if (!(in >> n))
        throw ParseError("expected matrix order on first line", 0);
    if (n < 1 || n > kMaxParsedOrder)
        throw ParseError("matrix order out of range [1, " +
                             std::to_string(kMaxParsedOrder) + "]",
                         0);
    IntMatrix m(static_cast<int>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            long long v;
            if (!(in >> v))
                throw ParseError("expected " + std::to_string(n * n) +
                                     " integer entries after the order",
                                 static_cast<std::size_t>(in.tellg() == -1
                                                              ? 0
                                                              : in.tellg()));
            m.at(i, j) = static_cast<std::int64_t>(v);
        }
    return m;
}

inline IntMatrix read_int_matrix(const std::string& text) {
    std::istringstream in(text);
    return read_int_matrix(in);
}

template <class T>
void write_matrix(std::ostream& out, const basic_matrix<T>& m) {
    out << m.order() << "\n";
    for (int i = 1; i <= m.order(); ++i) {
        for (int j = 1; j <= m.order(); ++j) {
            if (j > 1) out << ' ';
            if constexpr (std::is_same_v<T, Rational>)
                out << m.at(i, j).str();
            else
                out << m.at(i, j);
        }
        out << "\n";
    }
}

template <class T>
std::string matrix_to_string(const basic_matrix<T>& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

} // namespace eprlab

#pragma once

// Graphs of zero-diagonal symmetric matrices, their odd-girth and
// bipartiteness computed combinatorially, and the same facts read off an
// epr-sequence. The two routes are independent so they can cross-check
// each other.

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eprlab/epr.hpp"
#include "eprlab/matrix.hpp"
#include "eprlab/pattern.hpp"

namespace eprlab {

/// Simple undirected loopless graph on vertices {1, ..., order}.
struct Graph {
    int order = 0;
    std::vector<std::pair<int, int>> edges; // normalized i < j, sorted, unique

    static Graph make(int order, std::vector<std::pair<int, int>> raw_edges) {
        if (order < 1) throw PreconditionError("graph order must be >= 1");
        Graph g;
        g.order = order;
        for (auto& [a, b] : raw_edges) {
            if (a == b) throw PreconditionError("graph has a loop");
            if (a > b) std::swap(a, b);
            if (a < 1 || b > order)
                throw PreconditionError("graph edge endpoint out of range");
        }
        std::sort(raw_edges.begin(), raw_edges.end());
        raw_edges.erase(std::unique(raw_edges.begin(), raw_edges.end()), raw_edges.end());
        g.edges = std::move(raw_edges);
        return g;
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(order + 1));
        for (auto [a, b] : edges) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        return adj;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order == b.order && a.edges == b.edges;
    }
};

/// Length of a shortest odd cycle, or infinite when none exists.
class OddGirth {
public:
    static OddGirth infinite() { return OddGirth(); }
    static OddGirth finite(int v) {
        if (v < 3 || v % 2 == 0)
            throw PreconditionError("odd-girth must be an odd integer >= 3");
        OddGirth g;
        g.value_ = v;
        return g;
    }

    bool is_finite() const { return value_ != 0; }
    int value() const {
        if (!is_finite()) throw PreconditionError("odd-girth is infinite");
        return value_;
    }
    std::string str() const { return is_finite() ? std::to_string(value_) : "inf"; }

    friend bool operator==(const OddGirth& a, const OddGirth& b) {
        return a.value_ == b.value_;
    }

private:
    int value_ = 0;
};

/// Graph of a symmetric zero-diagonal matrix: an edge wherever the
/// off-diagonal entry is nonzero.
inline Graph graph_of(const IntMatrix& m) {
    if (!m.is_symmetric()) throw PreconditionError("graph_of: matrix is not symmetric");
    if (!m.has_zero_diagonal())
        throw PreconditionError("graph_of: matrix has a nonzero diagonal entry");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= m.order(); ++i)
        for (int j = i + 1; j <= m.order(); ++j)
            if (m.at(i, j) != 0) edges.emplace_back(i, j);
    return Graph::make(m.order(), std::move(edges));
}

/// Shortest odd cycle length by breadth-first layering: any edge joining
/// two vertices on the same BFS level closes an odd walk of length
/// 2*level + 1, and the minimum of those over all start vertices is the
/// odd-girth.
inline OddGirth odd_girth_search(const Graph& g) {
    const auto adj = g.adjacency();
    int best = 0;
    std::vector<int> dist(static_cast<std::size_t>(g.order + 1));
    for (int s = 1; s <= g.order; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : adj[static_cast<std::size_t>(u)])
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                }
        }
        for (auto [a, b] : g.edges) {
            const int da = dist[static_cast<std::size_t>(a)];
            const int db = dist[static_cast<std::size_t>(b)];
            if (da >= 0 && da == db) {
                const int len = 2 * da + 1;
                if (best == 0 || len < best) best = len;
            }
        }
    }
    return best == 0 ? OddGirth::infinite() : OddGirth::finite(best);
}

/// Proper 2-colorability. An order-1 graph is treated as an isolated
/// vertex, not as a bipartite graph, matching the convention under which
/// bipartiteness is deducible from the epr-sequence.
inline bool is_bipartite_by_coloring(const Graph& g) {
    if (g.order < 2) return false;
    const auto adj = g.adjacency();
    std::vector<int> color(static_cast<std::size_t>(g.order + 1), -1);
    for (int s = 1; s <= g.order; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (color[static_cast<std::size_t>(v)] == -1) {
                    color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                    queue.push_back(v);
                } else if (color[static_cast<std::size_t>(v)] ==
                           color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Structural test for "the graph is an odd cycle": connected, every vertex
/// of degree 2, odd order. Independent of the epr machinery.
inline bool is_odd_cycle_structural(const Graph& g) {
    if (g.order < 3 || g.order % 2 == 0) return false;
    const auto adj = g.adjacency();
    for (int v = 1; v <= g.order; ++v)
        if (adj[static_cast<std::size_t>(v)].size() != 2) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.order + 1), 0);
    std::deque<int> queue{1};
    seen[1] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                queue.push_back(v);
            }
    }
    return reached == g.order;
}

/// Odd-girth read off the epr-sequence of a zero-diagonal symmetric matrix:
/// the smallest odd j whose letter is not N, infinite when there is none.
inline OddGirth odd_girth_from_epr(const EprSequence& seq) {
    if (seq.size() < 1 || seq.letters[0] != 'N')
        throw PreconditionError("odd_girth_from_epr: sequence must start with N");
    for (int j = 1; j <= seq.size(); j += 2)
        if (seq.at(j) != 'N') return OddGirth::finite(j);
    return OddGirth::infinite();
}

inline bool bipartite_from_epr(const EprSequence& seq) {
    if (seq.size() < 1 || seq.letters[0] != 'N')
        throw PreconditionError("bipartite_from_epr: sequence must start with N");
    return matches(seq.letters, "NN(N)*") || matches(seq.letters, "(NS)*NA") ||
           matches(seq.letters, "NS(NS)*N(N)*");
}

inline bool odd_cycle_from_epr(const EprSequence& seq) {
    if (seq.size() < 1 || seq.letters[0] != 'N')
        throw PreconditionError("odd_cycle_from_epr: sequence must start with N");
    return matches(seq.letters, "(NS)*NAA");
}

// --- text format: order on the first line, then one "i j" pair per line ---

inline Graph read_graph(std::istream& in) {
    int order = 0;
    if (!(in >> order)) throw ParseError("expected graph order on first line", 0);
    std::vector<std::pair<int, int>> edges;
    int a, b;
    while (in >> a >> b) edges.emplace_back(a, b);
    return Graph::make(order, std::move(edges));
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.order << "\n";
    for (auto [a, b] : g.edges) out << a << ' ' << b << "\n";
}

inline std::string graph_to_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

} // namespace eprlab

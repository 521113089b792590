#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bitset.hpp"

namespace elimtw {

constexpr int kMaxVertices = VertexSet::capacity;

enum class GraphFormat { pace_gr, dimacs_col };

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Simple undirected graph over vertices 0..n-1, immutable once built.
// Bit rows and sorted adjacency lists are kept in sync; self-loops and
// duplicate edges are normalized away at construction.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph from_rows(int n, const std::vector<VertexSet>& rows);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }
    VertexSet vertices() const { return VertexSet::first_n(n_); }

    VertexSet neighbors(int v) const { return rows_[v]; }
    const std::vector<int>& neighbor_list(int v) const { return lists_[v]; }
    int degree(int v) const { return static_cast<int>(lists_[v].size()); }
    bool adjacent(int u, int v) const { return rows_[u].contains(v); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<VertexSet> rows_;
    std::vector<std::vector<int>> lists_;
};

Graph parse_graph(std::string_view text, GraphFormat format);
GraphFormat detect_format(std::string_view text);
std::string serialize_gr(const Graph& g);

using EliminationOrder = std::vector<int>;

// Vertices outside s and distinct from v that v reaches via paths whose
// interior lies entirely in s. With s empty this is just N(v).
// Equals the neighborhood of v after eliminating s, but runs on the
// original graph: a DFS from v that only walks through members of s.
inline VertexSet q_set(const Graph& g, VertexSet s, int v) {
    VertexSet result;
    VertexSet visited = VertexSet::single(v);
    int stack[kMaxVertices];
    int top = 0;
    stack[top++] = v;
    while (top > 0) {
        int x = stack[--top];
        for (int y : g.neighbors(x) - visited) {
            visited.add(y);
            if (s.contains(y))
                stack[top++] = y;
            else
                result.add(y);
        }
    }
    return result;
}

// The graph left after eliminating every vertex of s: eliminated vertices
// lose all incident edges and each former neighborhood becomes a clique.
// The result does not depend on the order s is eliminated in.
Graph eliminate_all(const Graph& g, VertexSet s);

bool is_permutation(const Graph& g, const EliminationOrder& pi);

// Width of the elimination order: max over i of |Q(prefix_i, pi[i])|.
// Throws std::invalid_argument if pi is not a permutation of V.
int verify_order(const Graph& g, const EliminationOrder& pi);

}  // namespace elimtw

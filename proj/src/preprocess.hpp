#pragma once

#include <vector>

#include "graph.hpp"

namespace elimtw {

enum class SplitMode { none, connected, biconnected };

// A sub-instance produced by splitting, with its map back to original
// vertex ids. For biconnected splitting, parent_cut is the local id of the
// articulation vertex shared with the parent block (-1 at roots), and the
// list is post-ordered: every child block appears before its parent, so a
// stitched elimination order can defer each cut vertex to its parent.
struct SubInstance {
    Graph graph;
    std::vector<int> to_original;
    int parent_cut = -1;
};

std::vector<SubInstance> split_instance(const Graph& g, SplitMode mode);

// Exact maximum clique by branch and bound; among maximum cliques the
// lexicographically smallest vertex list wins.
VertexSet max_clique(const Graph& g);

// counts[u][v] = maximum number of internally vertex-disjoint u-v paths,
// kAdjacentPair for edges of g (those entries are never consulted).
struct DisjointPathsMatrix {
    static constexpr int kAdjacentPair = 255;
    int n = 0;
    std::vector<uint8_t> counts;
    int at(int u, int v) const { return counts[static_cast<size_t>(u) * n + v]; }
};

// Computed once per input graph; improve_graph reuses it across k values.
DisjointPathsMatrix vertex_disjoint_paths(const Graph& g);

// Adds every edge {u,v} whose endpoints are joined by at least k+1
// vertex-disjoint paths. Such an edge exists in some optimal tree
// decomposition whenever tw(g) <= k, so feasibility at k is unaffected
// while the search space shrinks.
Graph improve_graph(const Graph& g, int k, const DisjointPathsMatrix& m);

}  // namespace elimtw

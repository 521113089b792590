#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace elimtw {

// Tree decomposition induced by an elimination order: one bag per vertex,
// bag(v) = {v} plus the vertices reachable from v through the prefix
// eliminated before it. Edges link each bag to the bag of the earliest
// eliminated member of that reachable set, giving a forest with one root
// per connected component.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> edges;
    int width = -1;
};

TreeDecomposition tree_decomposition_from_order(const Graph& g,
                                                const EliminationOrder& order);

// Checks the three decomposition properties plus the recorded width: every
// vertex appears in its own bag, every edge fits inside some bag, the bags
// containing any fixed vertex form a connected subtree, and width equals
// the largest bag size minus one. On failure a short reason lands in *why.
bool validate_decomposition(const Graph& g, const TreeDecomposition& td,
                            std::string* why = nullptr);

}  // namespace elimtw

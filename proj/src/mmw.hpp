#pragma once

#include <climits>
#include <vector>

#include "graph.hpp"

namespace elimtw {

// Contracted-minor view over eliminate(g, s), kept in two bytes per vertex:
// a disjoint-set parent and, for alive class roots, the class degree in the
// minor. Traversals run on the original graph and walk through eliminated
// vertices and same-class members instead of materializing the minor.
struct MinorView {
    uint8_t parent[kMaxVertices];
    uint8_t degree[kMaxVertices];
    VertexSet alive;
    VertexSet eliminated;
    int n = 0;

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
};

// Initial view: singleton classes whose degrees are the q_set sizes.
MinorView init_view(const Graph& g, VertexSet s);

// View for eliminate(g, s + v), derived from the reachable sets of (g, s):
// rows[w] must equal q_set(g, s, w) for every w outside s. Avoids n fresh
// q_set calls when the caller already has the parent state's rows.
MinorView init_view_after(const Graph& g, VertexSet s, int v, const VertexSet* rows);

struct ContractStep {
    int v;                 // surviving class root
    int u;                 // merged class root, -1 when an isolated class was dropped
    int common;            // alive classes adjacent to both
    int min_degree_after;  // smallest alive degree once the step is done
};

// Removes an isolated minimum-degree class, or contracts it with its
// minimum-degree neighbor. Requires at least two alive classes.
ContractStep contract_step(MinorView& view, const Graph& g);

// Max over steps of the second-smallest alive degree, a treewidth lower
// bound for eliminate(g, s). Returns early once the bound exceeds cap.
int mmw_lower_bound(const Graph& g, VertexSet s, int cap = INT_MAX);
int mmw_from_view(MinorView& view, const Graph& g, int cap = INT_MAX);

struct MmwTraceStep {
    ContractStep step;
    int bound_after;
};

// Same driver as mmw_lower_bound but records every step, for tests that
// compare against the explicit reference implementation.
std::vector<MmwTraceStep> mmw_trace(const Graph& g, VertexSet s, int cap, int* bound_out);

}  // namespace elimtw

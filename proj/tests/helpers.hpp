#pragma once

#include <random>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace elimtw::test {

// Deterministic G(n, p)-style graph; mt19937 keeps the stream portable.
inline Graph random_graph(uint32_t seed, int n, double density) {
    std::mt19937 rng(seed);
    uint64_t threshold = static_cast<uint64_t>(density * 4294967296.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() < threshold) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

// Random graph plus a path through all vertices, so it is connected.
inline Graph random_connected_graph(uint32_t seed, int n, double density) {
    std::mt19937 rng(seed);
    uint64_t threshold = static_cast<uint64_t>(density * 4294967296.0);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() < threshold) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

// Complete bipartite graph on a+b vertices, first side 0..a-1.
inline Graph biclique(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, edges);
}

inline Graph grid_graph(int rows, int cols) {
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph::from_edges(rows * cols, edges);
}

inline Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 5; ++v) {
        edges.emplace_back(v, (v + 1) % 5);          // outer cycle
        edges.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        edges.emplace_back(v, 5 + v);                // spokes
    }
    return Graph::from_edges(10, edges);
}

}  // namespace elimtw::test

#pragma once

#include <climits>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

// Small brute-force reference implementations used by tests as ground truth.
// Everything here favors obvious correctness over speed and is written
// independently of the solver's data structures where practical.
namespace elimtw::oracle {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact treewidth by depth-first search over all elimination orderings,
// pruning branches that already reach the best known width.
int treewidth_by_permutations(const Graph& g, int max_n = 10);

// Exact treewidth by dynamic programming over all vertex subsets.
int treewidth_by_subset_dp(const Graph& g, int max_n = 20);

struct MmwStep {
    int v;                 // surviving class root
    int u;                 // merged class root, -1 when an isolated class was dropped
    int common;            // alive classes adjacent to both v and u
    int min_degree_after;  // smallest alive degree once the step is done
    int bound_after;
};

struct MmwTrace {
    int bound = 0;
    std::vector<MmwStep> steps;
};

// Minor-min-width on eliminate(g, s), computed on explicit adjacency rows
// that are rebuilt after every contraction. Stops early once the bound
// exceeds cap.
MmwTrace explicit_mmw(const Graph& g, VertexSet s, int cap = INT_MAX);

// Largest clique, ties broken by lexicographically smallest vertex list.
VertexSet max_clique_by_enumeration(const Graph& g, int max_n = 16);

// Smallest vertex set whose removal separates non-adjacent s and t.
// By Menger this equals the number of pairwise vertex-disjoint s-t paths.
int min_vertex_cut_by_enumeration(const Graph& g, int s, int t, int max_n = 14);

}  // namespace elimtw::oracle

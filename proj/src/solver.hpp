#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp.hpp"
#include "preprocess.hpp"

namespace elimtw {

struct SolveOptions {
    DpConfig dp;
    SplitMode split = SplitMode::biconnected;
    bool use_clique = true;
    bool use_improvement = true;
    // Replaces the computed max(clique size - 1, minor-min-width) start.
    std::optional<int> starting_k;
    bool emit_order = true;
};

enum class ResultKind { exact, lower_bound_only };

struct AttemptReport {
    int k = 0;
    int added_edges = 0;
    Outcome outcome = Outcome::infeasible;
    bool overflowed = false;
    std::vector<LayerStats> layers;
};

struct ComponentReport {
    std::vector<int> vertices;  // original ids
    int parent_cut = -1;        // original id of the shared articulation vertex
    int clique_size = 0;
    int mmw_bound = 0;
    int start_k = 0;
    ResultKind kind = ResultKind::exact;
    int value = 0;
    uint64_t reconstruction_expanded = 0;
    std::vector<AttemptReport> attempts;
};

struct SolveResult {
    ResultKind kind = ResultKind::exact;
    int value = 0;  // the treewidth, or a lower bound when capacity ran out
    EliminationOrder order;  // original ids; filled for exact results on request
    std::vector<ComponentReport> components;
};

// A reconstruction rerun contradicted the search phase. With Bloom
// deduplication this can follow a false positive that suppressed every
// witness of a sub-run; solve retries such blocks with exact_set before
// letting the error escape.
struct ReconstructError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SolveResult solve(const Graph& g, const SolveOptions& opts);

// Deterministic JSON report of a finished run. Contains no wall-clock
// fields, so identical runs serialize byte-identically.
std::string stats_json(const Graph& g, const SolveOptions& opts,
                       const SolveResult& result);

}  // namespace elimtw

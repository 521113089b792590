#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bloom.hpp"
#include "graph.hpp"

namespace elimtw {

// One frontier state: the eliminated prefix plus a packed trail of the last
// four eliminations, newest in the low byte, 0xFF marking empty slots.
struct SearchState {
    uint64_t set = 0;
    uint32_t history = 0xFFFFFFFFu;
};

inline uint32_t push_history(uint32_t history, int v) {
    return (history << 8) | static_cast<uint32_t>(v & 0xFF);
}

enum class DedupMode { bloom, exact_set };

struct DpConfig {
    uint64_t max_layer_states = 10'000'000;
    DedupMode dedup = DedupMode::bloom;
    BloomParams bloom;
    bool use_mmw = false;
    int thread_count = 1;
    // Test hook, called with every finished layer; empty in production.
    std::function<void(int k, int round, const std::vector<SearchState>&)> observer;
};

struct LayerStats {
    int k = 0;
    int round = 0;
    uint64_t expanded = 0;    // input states processed
    uint64_t emitted = 0;     // states kept in the next layer
    uint64_t duplicates = 0;  // candidates dropped by deduplication
    uint64_t mmw_pruned = 0;  // candidates cut by the lower bound
    bool overflowed = false;  // appends refused at the capacity wall
};

struct LayerList {
    std::vector<SearchState> states;
    bool overflowed = false;
};

enum class Outcome { feasible, infeasible, indeterminate };

struct DecideResult {
    Outcome outcome = Outcome::infeasible;
    SearchState witness;  // first state of the final layer when feasible
    bool overflowed = false;
    std::vector<LayerStats> rounds;
};

// One wavefront round: expands every input state by one eliminated vertex.
// Candidates outside `forbidden` pass the degree test (|q_set| <= k), then
// optional minor-min-width pruning, then deduplication; appends beyond
// cfg.max_layer_states are dropped and flag the layer as overflowed.
//
// With exact_set dedup the output is byte-identical to a sequential run at
// any thread count: candidates carry their sequential emission rank, the
// merge keeps the lowest rank per key, and the capacity wall drops the
// highest ranks (the newest appends).
LayerList expand_layer(const Graph& g, int k, VertexSet forbidden,
                       const std::vector<SearchState>& input, const DpConfig& cfg,
                       LayerStats& stats);

// Decision procedure: does some elimination prefix of `rounds` vertices
// avoiding `forbidden` keep every eliminated degree <= k? With the default
// rounds = n-k-1 and `forbidden` a clique, feasibility is tw(g) <= k: the
// remaining k+1 vertices can then be eliminated in any order. Infeasible
// needs an empty layer with no prior overflow; an empty layer after an
// overflow is indeterminate, since discarded states may have been viable.
DecideResult decide(const Graph& g, int k, VertexSet forbidden, const DpConfig& cfg,
                    int rounds = -1);

}  // namespace elimtw

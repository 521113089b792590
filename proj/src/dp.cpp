#include "dp.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <stdexcept>
#include <thread>

#include "mmw.hpp"

namespace elimtw {

namespace {

// Child key plus its sequential emission rank (parent index major, vertex
// minor) so the exact-set merge can reproduce first-wins order exactly.
struct ExactEntry {
    uint64_t key;
    uint64_t rank;
    uint32_t history;
};

template <typename Worker>
void run_partitioned(int threads, size_t size, Worker&& worker) {
    if (threads <= 1) {
        worker(0, size_t{0}, size);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        size_t lo = size * static_cast<size_t>(t) / threads;
        size_t hi = size * static_cast<size_t>(t + 1) / threads;
        pool.emplace_back([&worker, t, lo, hi] { worker(t, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

template <typename Emit>
void expand_range(const Graph& g, int k, VertexSet forbidden,
                  const std::vector<SearchState>& input, size_t lo, size_t hi,
                  bool use_mmw, uint64_t& mmw_pruned, Emit&& emit) {
    VertexSet universe = g.vertices();
    VertexSet rows[kMaxVertices];
    for (size_t idx = lo; idx < hi; ++idx) {
        const SearchState& state = input[idx];
        VertexSet s;
        s.w[0] = state.set;
        VertexSet open = universe - s;
        VertexSet eligible = open - forbidden;
        if (use_mmw) {
            for (int w : open) rows[w] = q_set(g, s, w);
        }
        for (int v : eligible) {
            VertexSet q = use_mmw ? rows[v] : q_set(g, s, v);
            if (q.count() > k) continue;
            if (use_mmw) {
                MinorView view = init_view_after(g, s, v, rows);
                if (mmw_from_view(view, g, k) > k) {
                    ++mmw_pruned;
                    continue;
                }
            }
            SearchState child{state.set | (uint64_t{1} << v),
                              push_history(state.history, v)};
            emit(child, idx * 64 + static_cast<uint64_t>(v));
        }
    }
}

}  // namespace

LayerList expand_layer(const Graph& g, int k, VertexSet forbidden,
                       const std::vector<SearchState>& input, const DpConfig& cfg,
                       LayerStats& stats) {
    LayerList out;
    stats.expanded = input.size();
    stats.emitted = 0;
    stats.duplicates = 0;
    stats.mmw_pruned = 0;
    stats.overflowed = false;
    if (input.empty()) return out;

    int free_count = std::max(0, g.vertex_count() - forbidden.count());
    uint64_t upper = static_cast<uint64_t>(input.size()) * static_cast<uint64_t>(free_count);
    uint64_t cap = std::min(cfg.max_layer_states, std::max<uint64_t>(upper, 1));
    int threads = static_cast<int>(
        std::min<size_t>(std::max(cfg.thread_count, 1), input.size()));

    std::atomic<uint64_t> dup_total{0};
    std::atomic<uint64_t> mmw_total{0};

    if (cfg.dedup == DedupMode::bloom) {
        ConcurrentBloom filter(cap, cfg.bloom);
        auto slots = std::make_unique_for_overwrite<SearchState[]>(cap);
        std::atomic<uint64_t> cursor{0};

        run_partitioned(threads, input.size(), [&](int, size_t lo, size_t hi) {
            uint64_t dup = 0;
            uint64_t mmw = 0;
            expand_range(g, k, forbidden, input, lo, hi, cfg.use_mmw, mmw,
                         [&](const SearchState& child, uint64_t) {
                             if (!filter.insert_and_check(child.set)) {
                                 ++dup;
                                 return;
                             }
                             uint64_t slot = cursor.fetch_add(1, std::memory_order_relaxed);
                             if (slot < cap) slots[slot] = child;
                         });
            dup_total.fetch_add(dup, std::memory_order_relaxed);
            mmw_total.fetch_add(mmw, std::memory_order_relaxed);
        });

        uint64_t produced = cursor.load();
        uint64_t kept = std::min(produced, cap);
        out.states.assign(slots.get(), slots.get() + kept);
        out.overflowed = produced > cap;
    } else {
        std::vector<std::vector<ExactEntry>> locals(threads);
        run_partitioned(threads, input.size(), [&](int tid, size_t lo, size_t hi) {
            uint64_t mmw = 0;
            auto& buf = locals[tid];
            expand_range(g, k, forbidden, input, lo, hi, cfg.use_mmw, mmw,
                         [&](const SearchState& child, uint64_t rank) {
                             buf.push_back({child.set, rank, child.history});
                         });
            mmw_total.fetch_add(mmw, std::memory_order_relaxed);
        });

        size_t total = 0;
        for (const auto& buf : locals) total += buf.size();
        std::vector<ExactEntry> all;
        all.reserve(total);
        for (auto& buf : locals) {
            all.insert(all.end(), buf.begin(), buf.end());
            buf.clear();
            buf.shrink_to_fit();
        }

        std::sort(all.begin(), all.end(), [](const ExactEntry& a, const ExactEntry& b) {
            return a.key != b.key ? a.key < b.key : a.rank < b.rank;
        });
        size_t unique_count = 0;
        for (size_t i = 0; i < all.size(); ++i) {
            if (i == 0 || all[i].key != all[unique_count - 1].key) all[unique_count++] = all[i];
        }
        all.resize(unique_count);
        dup_total = total - unique_count;

        std::sort(all.begin(), all.end(),
                  [](const ExactEntry& a, const ExactEntry& b) { return a.rank < b.rank; });
        if (all.size() > cap) {
            all.resize(cap);
            out.overflowed = true;
        }
        out.states.reserve(all.size());
        for (const auto& e : all) out.states.push_back({e.key, e.history});
    }

    stats.emitted = out.states.size();
    stats.duplicates = dup_total.load();
    stats.mmw_pruned = mmw_total.load();
    stats.overflowed = out.overflowed;
    return out;
}

DecideResult decide(const Graph& g, int k, VertexSet forbidden, const DpConfig& cfg,
                    int rounds) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (cfg.max_layer_states == 0)
        throw std::invalid_argument("layer capacity must be positive");
    if (rounds < 0) rounds = std::max(0, g.vertex_count() - k - 1);

    DecideResult result;
    std::vector<SearchState> layer{SearchState{}};
    for (int round = 0; round < rounds; ++round) {
        LayerStats stats;
        stats.k = k;
        stats.round = round;
        LayerList next = expand_layer(g, k, forbidden, layer, cfg, stats);
        result.overflowed = result.overflowed || next.overflowed;
        result.rounds.push_back(stats);
        if (cfg.observer) cfg.observer(k, round, next.states);
        if (next.states.empty()) {
            result.outcome =
                result.overflowed ? Outcome::indeterminate : Outcome::infeasible;
            return result;
        }
        layer = std::move(next.states);
    }
    result.outcome = Outcome::feasible;
    result.witness = layer.front();
    return result;
}

}  // namespace elimtw

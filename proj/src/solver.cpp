#include "solver.hpp"

#include <algorithm>
#include <bit>

#include "json.hpp"
#include "mmw.hpp"

namespace elimtw {

namespace {

struct BlockContext {
    VertexSet clique;
    DisjointPathsMatrix paths;
    bool have_paths = false;
    Graph final_graph;
    DecideResult final_decide;
};

ComponentReport solve_block(const SubInstance& sub, const SolveOptions& opts,
                            BlockContext& ctx) {
    const Graph& b = sub.graph;
    int n = b.vertex_count();

    ComponentReport rep;
    rep.vertices = sub.to_original;
    rep.parent_cut = sub.parent_cut >= 0 ? sub.to_original[sub.parent_cut] : -1;
    if (opts.use_clique) ctx.clique = max_clique(b);
    rep.clique_size = ctx.clique.count();
    rep.mmw_bound = mmw_lower_bound(b, VertexSet{});
    int k0 = opts.starting_k ? *opts.starting_k
                             : std::max(rep.clique_size - 1, rep.mmw_bound);
    k0 = std::clamp(k0, 0, std::max(0, n - 1));
    rep.start_k = k0;
    if (opts.use_improvement) {
        ctx.paths = vertex_disjoint_paths(b);
        ctx.have_paths = true;
    }

    for (int k = k0; k < n; ++k) {
        Graph gk = ctx.have_paths ? improve_graph(b, k, ctx.paths) : b;
        AttemptReport att;
        att.k = k;
        att.added_edges = static_cast<int>(gk.edge_count() - b.edge_count());
        DecideResult r = decide(gk, k, ctx.clique, opts.dp);
        att.outcome = r.outcome;
        att.overflowed = r.overflowed;
        att.layers = std::move(r.rounds);
        rep.attempts.push_back(std::move(att));
        if (r.outcome == Outcome::feasible) {
            rep.kind = ResultKind::exact;
            rep.value = k;
            ctx.final_graph = std::move(gk);
            ctx.final_decide.outcome = r.outcome;
            ctx.final_decide.witness = r.witness;
            ctx.final_decide.overflowed = r.overflowed;
            return rep;
        }
        if (r.outcome == Outcome::indeterminate) {
            rep.kind = ResultKind::lower_bound_only;
            rep.value = k;
            return rep;
        }
    }
    throw std::logic_error("deepening ran past k = n - 1");
}

uint64_t count_expanded(const std::vector<LayerStats>& layers) {
    uint64_t total = 0;
    for (const auto& s : layers) total += s.expanded;
    return total;
}

// Rebuilds a full elimination prefix from a feasible decide result by
// reading the witness history four vertices at a time and rerunning decide
// on the shrinking remainder. The returned order covers all of gk: prefix
// first, then the free vertices ascending, then the forbidden ones.
EliminationOrder unwind_order(const Graph& gk, int k, VertexSet forbidden,
                              const DpConfig& dp, const DecideResult& final,
                              uint64_t& expanded) {
    std::vector<int> tail_first;
    uint64_t cur_set = final.witness.set;
    uint32_t cur_hist = final.witness.history;
    while (cur_set != 0) {
        int take = std::min(4, std::popcount(cur_set));
        for (int i = 0; i < take; ++i) {
            int v = static_cast<int>(cur_hist & 0xFF);
            cur_hist >>= 8;
            if (v >= gk.vertex_count() || (cur_set & (uint64_t{1} << v)) == 0)
                throw ReconstructError("witness history names a vertex outside the set");
            tail_first.push_back(v);
            cur_set &= ~(uint64_t{1} << v);
        }
        if (cur_set == 0) break;
        VertexSet remaining;
        remaining.w[0] = cur_set;
        DecideResult r =
            decide(gk, k, gk.vertices() - remaining, dp, remaining.count());
        expanded += count_expanded(r.rounds);
        if (r.outcome != Outcome::feasible || r.witness.set != cur_set)
            throw ReconstructError("prefix rerun lost every witness");
        cur_hist = r.witness.history;
    }

    EliminationOrder order(tail_first.rbegin(), tail_first.rend());
    VertexSet prefix;
    prefix.w[0] = final.witness.set;
    for (int v : gk.vertices())
        if (!prefix.contains(v) && !forbidden.contains(v)) order.push_back(v);
    for (int v : forbidden) order.push_back(v);
    return order;
}

EliminationOrder reconstruct_block(const SubInstance& sub, const BlockContext& ctx,
                                   int value, const DpConfig& dp,
                                   uint64_t& expanded) {
    const Graph& gk = ctx.final_graph;
    DpConfig cfg = dp;
    cfg.observer = nullptr;
    if (sub.parent_cut < 0)
        return unwind_order(gk, value, ctx.clique, cfg, ctx.final_decide, expanded);

    // Non-root blocks hand their articulation vertex to the parent, so the
    // stitched order needs it last; some optimal order ends there, found by
    // rerunning the decision with only that vertex forbidden.
    VertexSet forbidden = VertexSet::single(sub.parent_cut);
    DecideResult r = decide(gk, value, forbidden, cfg);
    expanded += count_expanded(r.rounds);
    if (r.outcome != Outcome::feasible)
        throw ReconstructError("cut-last rerun infeasible at the proven width");
    return unwind_order(gk, value, forbidden, cfg, r, expanded);
}

const char* kind_name(ResultKind k) {
    return k == ResultKind::exact ? "exact" : "lower_bound_only";
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::feasible: return "feasible";
        case Outcome::infeasible: return "infeasible";
        default: return "indeterminate";
    }
}

}  // namespace

SolveResult solve(const Graph& g, const SolveOptions& opts) {
    if (opts.dp.thread_count < 1)
        throw std::invalid_argument("thread count must be at least 1");
    if (opts.dp.max_layer_states == 0)
        throw std::invalid_argument("layer capacity must be positive");
    if (opts.starting_k && *opts.starting_k < 0)
        throw std::invalid_argument("starting k must be non-negative");

    SolveResult res;
    std::vector<SubInstance> subs = split_instance(g, opts.split);
    if (subs.empty()) return res;

    std::vector<EliminationOrder> block_orders(subs.size());
    bool all_exact = true;
    for (size_t i = 0; i < subs.size(); ++i) {
        BlockContext ctx;
        ComponentReport rep = solve_block(subs[i], opts, ctx);
        res.value = std::max(res.value, rep.value);
        if (rep.kind == ResultKind::exact) {
            if (opts.emit_order) {
                try {
                    block_orders[i] = reconstruct_block(subs[i], ctx, rep.value, opts.dp,
                                                        rep.reconstruction_expanded);
                } catch (const ReconstructError&) {
                    if (opts.dp.dedup != DedupMode::bloom) throw;
                    DpConfig retry = opts.dp;
                    retry.dedup = DedupMode::exact_set;
                    block_orders[i] = reconstruct_block(subs[i], ctx, rep.value, retry,
                                                        rep.reconstruction_expanded);
                }
            }
        } else {
            all_exact = false;
        }
        res.components.push_back(std::move(rep));
    }
    res.kind = all_exact ? ResultKind::exact : ResultKind::lower_bound_only;

    if (res.kind == ResultKind::exact && opts.emit_order) {
        for (size_t i = 0; i < subs.size(); ++i) {
            for (int v : block_orders[i]) {
                if (v == subs[i].parent_cut) continue;
                res.order.push_back(subs[i].to_original[v]);
            }
        }
    }
    return res;
}

std::string stats_json(const Graph& g, const SolveOptions& opts,
                       const SolveResult& result) {
    using ordered_json = nlohmann::ordered_json;
    ordered_json j;
    j["schema_version"] = 1;
    j["instance"] = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};

    ordered_json jo;
    jo["dedup"] = opts.dp.dedup == DedupMode::bloom ? "bloom" : "exact";
    jo["bloom_bits_per_element"] = opts.dp.bloom.bits_per_element;
    jo["bloom_hashes"] = opts.dp.bloom.num_hashes;
    jo["mmw"] = opts.dp.use_mmw;
    jo["threads"] = opts.dp.thread_count;
    jo["max_layer_states"] = opts.dp.max_layer_states;
    switch (opts.split) {
        case SplitMode::none: jo["split"] = "none"; break;
        case SplitMode::connected: jo["split"] = "connected"; break;
        case SplitMode::biconnected: jo["split"] = "biconnected"; break;
    }
    jo["clique"] = opts.use_clique;
    jo["improvement"] = opts.use_improvement;
    if (opts.starting_k)
        jo["start_k"] = *opts.starting_k;
    else
        jo["start_k"] = nullptr;
    j["options"] = std::move(jo);

    ordered_json jr;
    jr["kind"] = kind_name(result.kind);
    jr["value"] = result.value;
    if (result.order.empty()) {
        jr["order"] = nullptr;
    } else {
        ordered_json arr = ordered_json::array();
        for (int v : result.order) arr.push_back(v + 1);
        jr["order"] = std::move(arr);
    }
    j["result"] = std::move(jr);

    uint64_t total_expanded = 0;
    uint64_t total_emitted = 0;
    uint64_t total_duplicates = 0;
    uint64_t total_mmw = 0;
    uint64_t total_reconstruction = 0;

    ordered_json comps = ordered_json::array();
    for (const auto& comp : result.components) {
        ordered_json jc;
        ordered_json verts = ordered_json::array();
        for (int v : comp.vertices) verts.push_back(v + 1);
        jc["vertices"] = std::move(verts);
        if (comp.parent_cut >= 0)
            jc["parent_cut"] = comp.parent_cut + 1;
        else
            jc["parent_cut"] = nullptr;
        jc["clique_size"] = comp.clique_size;
        jc["mmw_bound"] = comp.mmw_bound;
        jc["start_k"] = comp.start_k;
        jc["kind"] = kind_name(comp.kind);
        jc["value"] = comp.value;
        jc["reconstruction_expanded"] = comp.reconstruction_expanded;
        total_reconstruction += comp.reconstruction_expanded;

        ordered_json atts = ordered_json::array();
        for (const auto& att : comp.attempts) {
            ordered_json ja;
            ja["k"] = att.k;
            ja["added_edges"] = att.added_edges;
            ja["outcome"] = outcome_name(att.outcome);
            ja["overflowed"] = att.overflowed;
            ordered_json layers = ordered_json::array();
            for (const auto& ls : att.layers) {
                ordered_json jl;
                jl["round"] = ls.round;
                jl["expanded"] = ls.expanded;
                jl["emitted"] = ls.emitted;
                jl["duplicates"] = ls.duplicates;
                jl["mmw_pruned"] = ls.mmw_pruned;
                jl["overflowed"] = ls.overflowed;
                layers.push_back(std::move(jl));
                total_expanded += ls.expanded;
                total_emitted += ls.emitted;
                total_duplicates += ls.duplicates;
                total_mmw += ls.mmw_pruned;
            }
            ja["layers"] = std::move(layers);
            atts.push_back(std::move(ja));
        }
        jc["attempts"] = std::move(atts);
        comps.push_back(std::move(jc));
    }
    j["components"] = std::move(comps);

    j["totals"] = {{"expanded", total_expanded},
                   {"emitted", total_emitted},
                   {"duplicates", total_duplicates},
                   {"mmw_pruned", total_mmw},
                   {"reconstruction_expanded", total_reconstruction}};
    return j.dump(2) + "\n";
}

}  // namespace elimtw

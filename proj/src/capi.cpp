#include "elimtw.h"

#include <cstdio>
#include <exception>
#include <string>

#include "graph.hpp"
#include "solver.hpp"
#include "treedec.hpp"

using namespace elimtw;

struct etw_graph {
    Graph g;
};

struct etw_result {
    SolveResult result;
    Graph graph;
    SolveOptions opts;
    std::string stats;
};

namespace {

void put_error(char* err, size_t err_len, const char* msg) {
    if (err != nullptr && err_len > 0) std::snprintf(err, err_len, "%s", msg);
}

etw_status from_exception(char* err, size_t err_len) {
    try {
        throw;
    } catch (const ParseError& e) {
        put_error(err, err_len, e.what());
        return ETW_ERROR_PARSE;
    } catch (const std::invalid_argument& e) {
        put_error(err, err_len, e.what());
        return ETW_ERROR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        put_error(err, err_len, e.what());
        return ETW_ERROR_INTERNAL;
    } catch (...) {
        put_error(err, err_len, "unknown error");
        return ETW_ERROR_INTERNAL;
    }
}

SolveOptions to_solve_options(const etw_options& o) {
    SolveOptions opts;
    opts.dp.dedup = o.dedup == ETW_DEDUP_EXACT ? DedupMode::exact_set : DedupMode::bloom;
    opts.dp.use_mmw = o.use_mmw != 0;
    opts.dp.thread_count = o.thread_count;
    opts.dp.max_layer_states = o.max_layer_states;
    opts.dp.bloom.bits_per_element = o.bloom_bits_per_element;
    opts.dp.bloom.num_hashes = o.bloom_hashes;
    switch (o.split) {
        case ETW_SPLIT_NONE: opts.split = SplitMode::none; break;
        case ETW_SPLIT_CONNECTED: opts.split = SplitMode::connected; break;
        default: opts.split = SplitMode::biconnected; break;
    }
    opts.use_clique = o.use_clique != 0;
    opts.use_improvement = o.use_improvement != 0;
    if (o.start_k >= 0) opts.starting_k = o.start_k;
    opts.emit_order = o.emit_order != 0;
    return opts;
}

}  // namespace

extern "C" {

void etw_options_init(etw_options* opts) {
    if (opts == nullptr) return;
    opts->dedup = ETW_DEDUP_BLOOM;
    opts->split = ETW_SPLIT_BICONNECTED;
    opts->use_mmw = 0;
    opts->use_clique = 1;
    opts->use_improvement = 1;
    opts->thread_count = 1;
    opts->max_layer_states = 10000000;
    opts->bloom_bits_per_element = 24;
    opts->bloom_hashes = 17;
    opts->start_k = -1;
    opts->emit_order = 0;
}

etw_status etw_graph_parse(const char* text, size_t len, etw_format format,
                           etw_graph** out, char* err, size_t err_len) {
    if (out == nullptr) return ETW_ERROR_INVALID_ARGUMENT;
    *out = nullptr;
    if (text == nullptr) {
        put_error(err, err_len, "text is null");
        return ETW_ERROR_INVALID_ARGUMENT;
    }
    try {
        std::string body(text, len);
        GraphFormat fmt = format == ETW_FORMAT_DIMACS ? GraphFormat::dimacs_col
                                                      : GraphFormat::pace_gr;
        if (format == ETW_FORMAT_AUTO) fmt = detect_format(body);
        auto* wrapper = new etw_graph{parse_graph(body, fmt)};
        *out = wrapper;
        return ETW_OK;
    } catch (...) {
        return from_exception(err, err_len);
    }
}

void etw_graph_free(etw_graph* g) { delete g; }

int etw_graph_vertex_count(const etw_graph* g) {
    return g == nullptr ? 0 : g->g.vertex_count();
}

long long etw_graph_edge_count(const etw_graph* g) {
    return g == nullptr ? 0 : g->g.edge_count();
}

etw_status etw_solve(const etw_graph* g, const etw_options* opts, etw_result** out,
                     char* err, size_t err_len) {
    if (out == nullptr) return ETW_ERROR_INVALID_ARGUMENT;
    *out = nullptr;
    if (g == nullptr || opts == nullptr) {
        put_error(err, err_len, "graph or options is null");
        return ETW_ERROR_INVALID_ARGUMENT;
    }
    try {
        SolveOptions solve_opts = to_solve_options(*opts);
        auto* res = new etw_result;
        res->graph = g->g;
        res->opts = solve_opts;
        res->result = solve(g->g, solve_opts);
        *out = res;
        return ETW_OK;
    } catch (...) {
        return from_exception(err, err_len);
    }
}

void etw_result_free(etw_result* r) { delete r; }

etw_result_kind etw_result_kind_of(const etw_result* r) {
    return r != nullptr && r->result.kind == ResultKind::lower_bound_only
               ? ETW_RESULT_LOWER_BOUND
               : ETW_RESULT_EXACT;
}

int etw_result_value(const etw_result* r) {
    return r == nullptr ? 0 : r->result.value;
}

size_t etw_result_order_len(const etw_result* r) {
    return r == nullptr ? 0 : r->result.order.size();
}

const int* etw_result_order(const etw_result* r) {
    return r == nullptr || r->result.order.empty() ? nullptr : r->result.order.data();
}

const char* etw_result_stats_json(etw_result* r) {
    if (r == nullptr) return "";
    if (r->stats.empty()) {
        try {
            r->stats = stats_json(r->graph, r->opts, r->result);
        } catch (...) {
            return "";
        }
    }
    return r->stats.c_str();
}

etw_status etw_check_order(const etw_graph* g, const int* order, size_t len,
                           int* width_out, int* decomposition_valid_out, char* err,
                           size_t err_len) {
    if (g == nullptr || (order == nullptr && len > 0)) {
        put_error(err, err_len, "graph or order is null");
        return ETW_ERROR_INVALID_ARGUMENT;
    }
    try {
        EliminationOrder pi(order, order + len);
        if (!is_permutation(g->g, pi)) {
            put_error(err, err_len, "order is not a permutation of the vertices");
            return ETW_ERROR_INVALID_ARGUMENT;
        }
        int width = verify_order(g->g, pi);
        if (width_out != nullptr) *width_out = width;
        if (decomposition_valid_out != nullptr) {
            TreeDecomposition td = tree_decomposition_from_order(g->g, pi);
            std::string why;
            *decomposition_valid_out =
                td.width == width && validate_decomposition(g->g, td, &why) ? 1 : 0;
        }
        return ETW_OK;
    } catch (...) {
        return from_exception(err, err_len);
    }
}

const char* etw_version(void) { return "1.0.0"; }

}  // extern "C"

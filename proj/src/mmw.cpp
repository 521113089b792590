#include "mmw.hpp"

#include <algorithm>

namespace elimtw {

MinorView init_view(const Graph& g, VertexSet s) {
    MinorView view;
    view.n = g.vertex_count();
    view.eliminated = s;
    view.alive = g.vertices() - s;
    for (int x = 0; x < view.n; ++x) {
        view.parent[x] = static_cast<uint8_t>(x);
        view.degree[x] = 0;
    }
    for (int x : view.alive) view.degree[x] = static_cast<uint8_t>(q_set(g, s, x).count());
    return view;
}

MinorView init_view_after(const Graph& g, VertexSet s, int v, const VertexSet* rows) {
    MinorView view;
    view.n = g.vertex_count();
    view.eliminated = s;
    view.eliminated.add(v);
    view.alive = g.vertices() - view.eliminated;
    for (int x = 0; x < view.n; ++x) {
        view.parent[x] = static_cast<uint8_t>(x);
        view.degree[x] = 0;
    }
    // Eliminating v joins its reachable set into a clique: members of
    // rows[v] see each other afterwards, everyone else is unaffected.
    for (int w : view.alive) {
        if (rows[v].contains(w)) {
            VertexSet joined = rows[w] | rows[v];
            joined.remove(v);
            joined.remove(w);
            view.degree[w] = static_cast<uint8_t>(joined.count());
        } else {
            view.degree[w] = static_cast<uint8_t>(rows[w].count());
        }
    }
    return view;
}

namespace {

// Alive class roots adjacent to the class rooted at r: a DFS from r that
// walks through eliminated vertices and members of r's own class.
VertexSet adjacent_roots(MinorView& view, const Graph& g, int r) {
    VertexSet roots;
    VertexSet visited = VertexSet::single(r);
    int stack[kMaxVertices];
    int top = 0;
    stack[top++] = r;
    while (top > 0) {
        int x = stack[--top];
        for (int y : g.neighbors(x) - visited) {
            visited.add(y);
            if (view.eliminated.contains(y)) {
                stack[top++] = y;
                continue;
            }
            int ry = view.find(y);
            if (ry == r)
                stack[top++] = y;
            else if (view.alive.contains(ry))
                roots.add(ry);
        }
    }
    return roots;
}

int min_alive_degree(const MinorView& view) {
    int best = INT_MAX;
    for (int x : view.alive) best = std::min<int>(best, view.degree[x]);
    return best == INT_MAX ? 0 : best;
}

}  // namespace

ContractStep contract_step(MinorView& view, const Graph& g) {
    int v = -1, dv = INT_MAX;
    for (int x : view.alive) {
        if (view.degree[x] < dv) {
            dv = view.degree[x];
            v = x;
        }
    }

    if (dv == 0) {
        view.alive.remove(v);
        return {v, -1, 0, min_alive_degree(view)};
    }

    VertexSet adj_v = adjacent_roots(view, g, v);
    int u = -1, du = INT_MAX;
    for (int x : adj_v) {
        if (view.degree[x] < du) {
            du = view.degree[x];
            u = x;
        }
    }

    VertexSet adj_u = adjacent_roots(view, g, u);
    VertexSet common = adj_v & adj_u;
    common.remove(v);
    common.remove(u);
    int c = common.count();

    view.parent[u] = static_cast<uint8_t>(v);
    view.alive.remove(u);
    view.degree[v] = static_cast<uint8_t>(view.degree[v] + view.degree[u] - c - 2);
    for (int w : common) --view.degree[w];

    return {v, u, c, min_alive_degree(view)};
}

namespace {

template <typename OnStep>
int run_mmw(MinorView& view, const Graph& g, int cap, OnStep&& on_step) {
    int bound = 0;
    while (view.alive.count() >= 2) {
        int d1 = INT_MAX, d2 = INT_MAX;
        for (int x : view.alive) {
            int d = view.degree[x];
            if (d < d1) {
                d2 = d1;
                d1 = d;
            } else if (d < d2) {
                d2 = d;
            }
        }
        bound = std::max(bound, d2);
        if (bound > cap) return bound;
        ContractStep step = contract_step(view, g);
        on_step(step, bound);
    }
    return bound;
}

}  // namespace

int mmw_from_view(MinorView& view, const Graph& g, int cap) {
    return run_mmw(view, g, cap, [](const ContractStep&, int) {});
}

int mmw_lower_bound(const Graph& g, VertexSet s, int cap) {
    MinorView view = init_view(g, s);
    return mmw_from_view(view, g, cap);
}

std::vector<MmwTraceStep> mmw_trace(const Graph& g, VertexSet s, int cap, int* bound_out) {
    MinorView view = init_view(g, s);
    std::vector<MmwTraceStep> steps;
    int bound = run_mmw(view, g, cap, [&steps](const ContractStep& step, int bound_after) {
        steps.push_back({step, bound_after});
    });
    if (bound_out) *bound_out = bound;
    return steps;
}

}  // namespace elimtw

#include "preprocess.hpp"

#include <algorithm>
#include <array>

namespace elimtw {

namespace {

SubInstance make_sub(const Graph& g, VertexSet verts, int parent_cut_original) {
    SubInstance sub;
    sub.to_original.assign(verts.begin(), verts.end());
    std::array<int, kMaxVertices> local{};
    for (size_t i = 0; i < sub.to_original.size(); ++i)
        local[sub.to_original[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int v : verts)
        for (int u : g.neighbors(v) & verts)
            if (v < u) edges.emplace_back(local[v], local[u]);
    sub.graph = Graph::from_edges(static_cast<int>(sub.to_original.size()), edges);
    sub.parent_cut = parent_cut_original < 0 ? -1 : local[parent_cut_original];
    return sub;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (seen.contains(root)) continue;
        VertexSet comp = VertexSet::single(root);
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v) - comp) {
                comp.add(u);
                stack.push_back(u);
            }
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

// Tarjan's biconnected components over one connected component.
struct BlockFinder {
    const Graph& g;
    int timer = 0;
    std::array<int, kMaxVertices> disc{};
    std::array<int, kMaxVertices> low{};
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<VertexSet> blocks;

    explicit BlockFinder(const Graph& graph) : g(graph) {}

    void dfs(int u, int parent) {
        disc[u] = low[u] = ++timer;
        for (int v : g.neighbor_list(u)) {
            if (v == parent) continue;
            if (disc[v] == 0) {
                edge_stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    VertexSet block;
                    std::pair<int, int> e;
                    do {
                        e = edge_stack.back();
                        edge_stack.pop_back();
                        block.add(e.first);
                        block.add(e.second);
                    } while (e != std::make_pair(u, v));
                    blocks.push_back(block);
                }
            } else if (disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

std::vector<int> sorted_list(VertexSet s) { return {s.begin(), s.end()}; }

// Emits the blocks of one component in post-order over its block-cut tree.
void order_blocks(const Graph& g, const std::vector<VertexSet>& blocks,
                  std::vector<SubInstance>& out) {
    size_t count = blocks.size();
    std::vector<size_t> by_list(count);
    for (size_t i = 0; i < count; ++i) by_list[i] = i;
    std::sort(by_list.begin(), by_list.end(), [&](size_t a, size_t b) {
        return sorted_list(blocks[a]) < sorted_list(blocks[b]);
    });

    std::array<int, kMaxVertices> membership{};
    for (const VertexSet& b : blocks)
        for (int v : b) ++membership[v];

    std::vector<bool> visited(count, false);
    // recursive lambda over (block, cut vertex that leads to the parent)
    auto emit = [&](auto&& self, size_t b, int parent_cut) -> void {
        visited[b] = true;
        for (int c : blocks[b]) {
            if (membership[c] < 2 || c == parent_cut) continue;
            for (size_t other : by_list)
                if (!visited[other] && blocks[other].contains(c)) self(self, other, c);
        }
        out.push_back(make_sub(g, blocks[b], parent_cut));
    };
    emit(emit, by_list.front(), -1);
}

// Unit-capacity max flow, enough for counting disjoint paths.
struct Dinic {
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> adj;
    std::vector<int> level, iter;

    explicit Dinic(int nodes) : adj(nodes), level(nodes), iter(nodes) {}

    void add_arc(int from, int to, int cap) {
        adj[from].push_back({to, cap, static_cast<int>(adj[to].size())});
        adj[to].push_back({from, 0, static_cast<int>(adj[from].size()) - 1});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::vector<int> queue{s};
        level[s] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (const Arc& a : adj[v]) {
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        return level[t] >= 0;
    }

    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(adj[v].size()); ++i) {
            Arc& a = adj[v][i];
            if (a.cap > 0 && level[v] < level[a.to]) {
                int d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    adj[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    int max_flow(int s, int t) {
        int flow = 0;
        while (bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            while (int f = dfs(s, t, 1 << 30)) flow += f;
        }
        return flow;
    }
};

void clique_dfs(const Graph& g, std::vector<int>& cur, VertexSet cand, std::vector<int>& best) {
    if (cand.empty()) {
        if (cur.size() > best.size() || (cur.size() == best.size() && cur < best)) best = cur;
        return;
    }
    while (cand.any()) {
        if (cur.size() + static_cast<size_t>(cand.count()) < best.size()) return;
        int v = cand.lowest();
        cand.remove(v);
        cur.push_back(v);
        clique_dfs(g, cur, cand & g.neighbors(v), best);
        cur.pop_back();
    }
}

}  // namespace

std::vector<SubInstance> split_instance(const Graph& g, SplitMode mode) {
    std::vector<SubInstance> out;
    if (mode == SplitMode::none) {
        out.push_back(make_sub(g, g.vertices(), -1));
        return out;
    }
    for (VertexSet comp : connected_components(g)) {
        if (mode == SplitMode::connected) {
            out.push_back(make_sub(g, comp, -1));
            continue;
        }
        if (comp.count() == 1) {
            out.push_back(make_sub(g, comp, -1));
            continue;
        }
        BlockFinder finder(g);
        finder.dfs(comp.lowest(), -1);
        order_blocks(g, finder.blocks, out);
    }
    return out;
}

VertexSet max_clique(const Graph& g) {
    std::vector<int> cur, best;
    clique_dfs(g, cur, g.vertices(), best);
    VertexSet result;
    for (int v : best) result.add(v);
    return result;
}

DisjointPathsMatrix vertex_disjoint_paths(const Graph& g) {
    int n = g.vertex_count();
    DisjointPathsMatrix m;
    m.n = n;
    m.counts.assign(static_cast<size_t>(n) * n, 0);
    auto in = [](int v) { return v; };
    auto out = [n](int v) { return n + v; };
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            int value;
            if (g.adjacent(s, t)) {
                value = DisjointPathsMatrix::kAdjacentPair;
            } else {
                Dinic flow(2 * n);
                for (int v = 0; v < n; ++v)
                    if (v != s && v != t) flow.add_arc(in(v), out(v), 1);
                for (int v = 0; v < n; ++v)
                    for (int u : g.neighbor_list(v)) flow.add_arc(out(v), in(u), 1 << 20);
                value = flow.max_flow(out(s), in(t));
            }
            m.counts[static_cast<size_t>(s) * n + t] = static_cast<uint8_t>(value);
            m.counts[static_cast<size_t>(t) * n + s] = static_cast<uint8_t>(value);
        }
    }
    return m;
}

Graph improve_graph(const Graph& g, int k, const DisjointPathsMatrix& m) {
    int n = g.vertex_count();
    std::vector<VertexSet> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            if (m.at(u, v) >= k + 1) {
                rows[u].add(v);
                rows[v].add(u);
            }
        }
    return Graph::from_rows(n, rows);
}

}  // namespace elimtw

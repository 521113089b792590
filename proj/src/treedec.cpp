#include "treedec.hpp"

#include <numeric>
#include <stdexcept>

namespace elimtw {

TreeDecomposition tree_decomposition_from_order(const Graph& g,
                                                const EliminationOrder& order) {
    if (!is_permutation(g, order))
        throw std::invalid_argument("order is not a permutation of the vertices");
    int n = g.vertex_count();
    TreeDecomposition td;
    td.bags.resize(n);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    VertexSet prefix;
    int width = n == 0 ? -1 : 0;
    for (int v : order) {
        VertexSet q = q_set(g, prefix, v);
        td.bags[v] = q;
        td.bags[v].add(v);
        width = std::max(width, q.count());
        if (!q.empty()) {
            int parent = -1;
            for (int u : q) {
                if (parent == -1 || pos[u] < pos[parent]) parent = u;
            }
            td.edges.push_back({v, parent});
        }
        prefix.add(v);
    }
    td.width = width;
    return td;
}

namespace {

struct Uf {
    std::vector<int> parent;
    explicit Uf(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

bool fail(std::string* why, const std::string& reason) {
    if (why) *why = reason;
    return false;
}

}  // namespace

bool validate_decomposition(const Graph& g, const TreeDecomposition& td,
                            std::string* why) {
    int n = g.vertex_count();
    if (static_cast<int>(td.bags.size()) != n)
        return fail(why, "bag count does not match vertex count");

    int width = n == 0 ? -1 : 0;
    for (int v = 0; v < n; ++v) {
        if (!td.bags[v].contains(v)) return fail(why, "vertex missing from its own bag");
        if (!td.bags[v].is_subset_of(g.vertices()))
            return fail(why, "bag contains an unknown vertex");
        width = std::max(width, td.bags[v].count() - 1);
    }
    if (width != td.width) return fail(why, "recorded width does not match the bags");

    Uf uf(std::max(n, 1));
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : td.edges) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b)
            return fail(why, "malformed tree edge");
        if (!uf.unite(a, b)) return fail(why, "tree edges contain a cycle");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbor_list(u)) {
            if (v < u) continue;
            bool covered = false;
            for (int b = 0; b < n && !covered; ++b)
                covered = td.bags[b].contains(u) && td.bags[b].contains(v);
            if (!covered) return fail(why, "edge not covered by any bag");
        }
    }

    for (int x = 0; x < n; ++x) {
        VertexSet holders;
        for (int b = 0; b < n; ++b)
            if (td.bags[b].contains(x)) holders.add(b);
        int start = holders.lowest();
        VertexSet seen = VertexSet::single(start);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int b = stack.back();
            stack.pop_back();
            for (int nb : adj[b]) {
                if (holders.contains(nb) && !seen.contains(nb)) {
                    seen.add(nb);
                    stack.push_back(nb);
                }
            }
        }
        if (seen != holders) return fail(why, "bags of a vertex are not connected");
    }

    if (why) why->clear();
    return true;
}

}  // namespace elimtw

#include "oracle.hpp"

#include <algorithm>
#include <array>

namespace elimtw::oracle {

namespace {

// Vertices outside `inside` reached from v through members of `inside`,
// as a breadth-first search over adjacency lists.
int reached_outside_count(const Graph& g, uint64_t inside, int v) {
    std::array<int, 64> queue;
    int head = 0, tail = 0;
    uint64_t seen = uint64_t{1} << v;
    queue[tail++] = v;
    int count = 0;
    while (head < tail) {
        int x = queue[head++];
        for (int u : g.neighbor_list(x)) {
            if (seen >> u & 1) continue;
            seen |= uint64_t{1} << u;
            if (inside >> u & 1)
                queue[tail++] = u;
            else
                ++count;
        }
    }
    return count;
}

void order_dfs(const Graph& g, uint64_t prefix, int depth, int width_so_far, int& best) {
    if (width_so_far >= best) return;
    int n = g.vertex_count();
    if (depth == n) {
        best = width_so_far;
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (prefix >> v & 1) continue;
        int d = reached_outside_count(g, prefix, v);
        order_dfs(g, prefix | uint64_t{1} << v, depth + 1, std::max(width_so_far, d), best);
    }
}

}  // namespace

int treewidth_by_permutations(const Graph& g, int max_n) {
    int n = g.vertex_count();
    if (n > max_n)
        throw BudgetExceeded("permutation oracle limited to " + std::to_string(max_n) + " vertices");
    if (n == 0) return 0;
    int best = n;
    order_dfs(g, 0, 0, 0, best);
    return best;
}

int treewidth_by_subset_dp(const Graph& g, int max_n) {
    int n = g.vertex_count();
    if (n > max_n)
        throw BudgetExceeded("subset oracle limited to " + std::to_string(max_n) + " vertices");
    if (n == 0) return 0;
    // f[S] = smallest width achievable when the vertices of S are
    // eliminated first, in the best possible internal order.
    std::vector<uint8_t> f(uint64_t{1} << n);
    f[0] = 0;
    for (uint64_t s = 1; s < (uint64_t{1} << n); ++s) {
        int best = 255;
        for (uint64_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            uint64_t prev = s & ~(uint64_t{1} << v);
            int d = reached_outside_count(g, prev, v);
            best = std::min(best, std::max<int>(f[prev], d));
        }
        f[s] = static_cast<uint8_t>(best);
    }
    return f[(uint64_t{1} << n) - 1];
}

MmwTrace explicit_mmw(const Graph& g, VertexSet s, int cap) {
    int n = g.vertex_count();
    Graph base = eliminate_all(g, s);
    std::vector<VertexSet> rows(n);
    VertexSet alive = base.vertices() - s;
    for (int v : alive) rows[v] = base.neighbors(v);

    auto degree_of = [&](int v) { return rows[v].count(); };

    MmwTrace trace;
    while (alive.count() >= 2) {
        int v = -1, d1 = INT_MAX;
        for (int x : alive) {
            int d = degree_of(x);
            if (d < d1) d1 = d, v = x;
        }
        int d2 = INT_MAX;
        for (int x : alive) {
            if (x == v) continue;
            d2 = std::min(d2, degree_of(x));
        }
        trace.bound = std::max(trace.bound, d2);
        if (trace.bound > cap) return trace;

        if (d1 == 0) {
            alive.remove(v);
            int min_after = INT_MAX;
            for (int x : alive) min_after = std::min(min_after, degree_of(x));
            trace.steps.push_back({v, -1, 0, min_after, trace.bound});
            continue;
        }

        int u = -1, du = INT_MAX;
        for (int x : rows[v]) {
            int d = degree_of(x);
            if (d < du) du = d, u = x;
        }
        int common = (rows[v] & rows[u]).count();

        // merge class u into class v
        for (int w : rows[u]) {
            rows[w].remove(u);
            if (w != v) rows[w].add(v);
        }
        rows[v] |= rows[u];
        rows[v].remove(v);
        rows[v].remove(u);
        rows[u] = VertexSet{};
        alive.remove(u);

        int min_after = INT_MAX;
        for (int x : alive) min_after = std::min(min_after, degree_of(x));
        trace.steps.push_back({v, u, common, min_after, trace.bound});
    }
    return trace;
}

VertexSet max_clique_by_enumeration(const Graph& g, int max_n) {
    int n = g.vertex_count();
    if (n > max_n)
        throw BudgetExceeded("clique oracle limited to " + std::to_string(max_n) + " vertices");
    std::vector<int> best_list;
    VertexSet best;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        VertexSet s;
        s.w[0] = mask;
        bool clique = true;
        for (int v : s) {
            VertexSet closed = g.neighbors(v);
            closed.add(v);
            if (!s.is_subset_of(closed)) {
                clique = false;
                break;
            }
        }
        if (!clique) continue;
        std::vector<int> list(s.begin(), s.end());
        if (list.size() > best_list.size() ||
            (list.size() == best_list.size() && list < best_list)) {
            best_list = list;
            best = s;
        }
    }
    return best;
}

int min_vertex_cut_by_enumeration(const Graph& g, int s, int t, int max_n) {
    int n = g.vertex_count();
    if (n > max_n)
        throw BudgetExceeded("cut oracle limited to " + std::to_string(max_n) + " vertices");
    if (s == t || g.adjacent(s, t))
        throw std::invalid_argument("cut oracle needs distinct non-adjacent endpoints");

    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (v != s && v != t) rest.push_back(v);

    auto connected_avoiding = [&](uint64_t removed) {
        std::array<int, 64> queue;
        int head = 0, tail = 0;
        uint64_t seen = uint64_t{1} << s;
        queue[tail++] = s;
        while (head < tail) {
            int x = queue[head++];
            for (int u : g.neighbor_list(x)) {
                if (removed >> u & 1 || seen >> u & 1) continue;
                if (u == t) return true;
                seen |= uint64_t{1} << u;
                queue[tail++] = u;
            }
        }
        return false;
    };

    int best = static_cast<int>(rest.size());
    for (uint64_t pick = 0; pick < (uint64_t{1} << rest.size()); ++pick) {
        int size = std::popcount(pick);
        if (size >= best) continue;
        uint64_t removed = 0;
        for (size_t i = 0; i < rest.size(); ++i)
            if (pick >> i & 1) removed |= uint64_t{1} << rest[i];
        if (!connected_avoiding(removed)) best = size;
    }
    return best;
}

}  // namespace elimtw::oracle

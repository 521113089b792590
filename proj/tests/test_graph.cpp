#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace elimtw;
using test::random_graph;

namespace {

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbor_list(v))
            if (v < u) out.emplace_back(v, u);
    return out;
}

// One elimination step on explicit neighbor sets, used to cross-check
// eliminate_all against a very literal implementation.
void eliminate_one(std::vector<std::set<int>>& adj, int v) {
    std::vector<int> nb(adj[v].begin(), adj[v].end());
    for (int a : nb)
        for (int b : nb)
            if (a != b) adj[a].insert(b);
    for (int a : nb) adj[a].erase(v);
    adj[v].clear();
}

Graph graph_of(const std::vector<std::set<int>>& adj) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
        for (int u : adj[v])
            if (v < u) edges.emplace_back(v, u);
    return Graph::from_edges(static_cast<int>(adj.size()), edges);
}

std::vector<std::set<int>> sets_of(const Graph& g) {
    std::vector<std::set<int>> adj(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        adj[v] = {g.neighbor_list(v).begin(), g.neighbor_list(v).end()};
    return adj;
}

}  // namespace

TEST_CASE("parse pace gr") {
    Graph g = parse_graph("p tw 3 2\n1 2\n2 3\n", GraphFormat::pace_gr);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK(!g.adjacent(0, 2));
}

TEST_CASE("parse dimacs col") {
    Graph g = parse_graph("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", GraphFormat::dimacs_col);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(0, 2));
}

TEST_CASE("parse normalizes loops and duplicates") {
    Graph g = parse_graph("p tw 4 5\n1 1\n1 2\n2 1\n3 4\n3 4\n", GraphFormat::pace_gr);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(!g.adjacent(0, 0));
}

TEST_CASE("parse keeps isolated vertices") {
    Graph g = parse_graph("p tw 5 1\n1 2\n", GraphFormat::pace_gr);
    CHECK(g.vertex_count() == 5);
    CHECK(g.degree(2) == 0);
    CHECK(g.degree(4) == 0);
}

TEST_CASE("parse tolerates crlf and comments and blank lines") {
    Graph g = parse_graph("c hi\r\n\r\np tw 2 1\r\n1 2\r\n\n", GraphFormat::pace_gr);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_graph("p tw 4 1\n5 6\n", GraphFormat::pace_gr);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_graph("1 2\n", GraphFormat::pace_gr), ParseError);
    CHECK_THROWS_AS(parse_graph("p tw 2\n", GraphFormat::pace_gr), ParseError);
    CHECK_THROWS_AS(parse_graph("p tw 2 1\np tw 2 1\n", GraphFormat::pace_gr), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 3 1\nx 1 2\n", GraphFormat::dimacs_col), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1\n", GraphFormat::dimacs_col), ParseError);
    CHECK_THROWS_AS(parse_graph("p tw 3 1\n1 2 3\n", GraphFormat::pace_gr), ParseError);
    CHECK_THROWS_AS(parse_graph("p tw 3 1\n1 two\n", GraphFormat::pace_gr), ParseError);
    CHECK_THROWS_AS(parse_graph("", GraphFormat::pace_gr), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1 2\n", GraphFormat::pace_gr), ParseError);
}

TEST_CASE("vertex limit enforced") {
    CHECK_THROWS_AS(parse_graph("p tw 65 0\n", GraphFormat::pace_gr), ParseError);
    std::string big = "p tw 64 1\n1 64\n";
    CHECK(parse_graph(big, GraphFormat::pace_gr).vertex_count() == 64);
}

TEST_CASE("format detection") {
    CHECK(detect_format("c x\np tw 3 0\n") == GraphFormat::pace_gr);
    CHECK(detect_format("p edge 3 0\n") == GraphFormat::dimacs_col);
    CHECK_THROWS_AS(detect_format("hello\n"), ParseError);
    CHECK_THROWS_AS(detect_format("c only comments\n"), ParseError);
}

TEST_CASE("serialize round trip") {
    for (uint32_t seed : {1u, 2u, 3u}) {
        Graph g = random_graph(seed, 9, 0.4);
        Graph h = parse_graph(serialize_gr(g), GraphFormat::pace_gr);
        CHECK(g == h);
    }
}

TEST_CASE("q_set with empty prefix is the neighborhood") {
    Graph g = random_graph(7, 8, 0.5);
    for (int v = 0; v < 8; ++v) CHECK(q_set(g, VertexSet{}, v) == g.neighbors(v));
}

TEST_CASE("q_set walks through eliminated vertices") {
    Graph p = test::path_graph(3);  // a-b-c
    VertexSet s = VertexSet::single(1);
    CHECK(q_set(p, s, 0) == VertexSet::single(2));
    CHECK(q_set(p, s, 2) == VertexSet::single(0));
}

TEST_CASE("q_set matches neighborhoods after eliminate_all") {
    for (uint32_t seed : {11u, 12u, 13u}) {
        Graph g = random_graph(seed, 6, 0.5);
        for (uint64_t mask = 0; mask < 64; ++mask) {
            VertexSet s;
            s.w[0] = mask;
            Graph h = eliminate_all(g, s);
            for (int v = 0; v < 6; ++v) {
                if (s.contains(v)) continue;
                CHECK(q_set(g, s, v) == h.neighbors(v));
            }
        }
    }
}

TEST_CASE("q_set monotonicity") {
    Graph g = random_graph(21, 10, 0.4);
    std::mt19937 rng(5);
    for (int it = 0; it < 200; ++it) {
        VertexSet s1, s2;
        s1.w[0] = rng() & 1023;
        s2.w[0] = s1.w[0] | (rng() & 1023);
        for (int v = 0; v < 10; ++v) {
            if (s2.contains(v)) continue;
            VertexSet extra = q_set(g, s1, v) - s2;
            CHECK(extra.is_subset_of(q_set(g, s2, v)));
        }
    }
}

TEST_CASE("eliminate_all of the empty set is the identity") {
    Graph g = random_graph(3, 9, 0.3);
    CHECK(eliminate_all(g, VertexSet{}) == g);
}

TEST_CASE("eliminating the center of a star connects the leaves") {
    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    Graph h = eliminate_all(star, VertexSet::single(0));
    CHECK(h.degree(0) == 0);
    CHECK(h.adjacent(1, 2));
    CHECK(h.adjacent(1, 3));
    CHECK(h.adjacent(2, 3));
    CHECK(h.edge_count() == 3);
}

TEST_CASE("eliminate_all is order independent") {
    std::mt19937 rng(99);
    for (int it = 0; it < 50; ++it) {
        Graph g = random_graph(1000 + it, 8, 0.4);
        VertexSet s;
        s.w[0] = rng() & 255;
        std::vector<int> order(s.begin(), s.end());
        Graph lib = eliminate_all(g, s);
        for (int rounds = 0; rounds < 2; ++rounds) {
            std::shuffle(order.begin(), order.end(), rng);
            auto adj = sets_of(g);
            for (int v : order) eliminate_one(adj, v);
            CHECK(graph_of(adj) == lib);
        }
    }
}

TEST_CASE("verify_order on small knowns") {
    Graph k4 = test::complete_graph(4);
    CHECK(verify_order(k4, {0, 1, 2, 3}) == 3);
    CHECK(verify_order(k4, {3, 1, 0, 2}) == 3);
    Graph p4 = test::path_graph(4);
    CHECK(verify_order(p4, {0, 1, 2, 3}) == 1);
    CHECK(verify_order(p4, {3, 2, 1, 0}) == 1);
    CHECK(verify_order(p4, {1, 2, 0, 3}) == 2);
}

TEST_CASE("verify_order rejects non-permutations") {
    Graph g = test::path_graph(3);
    CHECK_THROWS_AS(verify_order(g, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(verify_order(g, {0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(verify_order(g, {0, 1, 3}), std::invalid_argument);
}

TEST_CASE("minimum over all orders equals oracle treewidth") {
    for (uint32_t seed : {5u, 6u}) {
        Graph g = random_graph(seed, 6, 0.5);
        std::vector<int> pi{0, 1, 2, 3, 4, 5};
        int best = 6;
        do {
            best = std::min(best, verify_order(g, pi));
        } while (std::next_permutation(pi.begin(), pi.end()));
        CHECK(best == oracle::treewidth_by_subset_dp(g));
    }
}

TEST_CASE("edge list round trips through from_edges") {
    Graph g = random_graph(42, 12, 0.3);
    Graph h = Graph::from_edges(12, edge_list(g));
    CHECK(g == h);
}

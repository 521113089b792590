#include "doctest.h"
#include "helpers.hpp"
#include "mmw.hpp"
#include "oracle.hpp"

using namespace elimtw;
using namespace elimtw::test;

namespace {

VertexSet random_subset(std::mt19937& rng, int n, int max_size) {
    VertexSet s;
    int want = static_cast<int>(rng() % (max_size + 1));
    while (s.count() < want) s.add(static_cast<int>(rng() % n));
    return s;
}

void check_trace_matches_explicit(const Graph& g, VertexSet s, int cap) {
    auto expected = oracle::explicit_mmw(g, s, cap);
    int bound = 0;
    auto steps = mmw_trace(g, s, cap, &bound);
    CHECK(bound == expected.bound);
    REQUIRE(steps.size() == expected.steps.size());
    for (size_t i = 0; i < steps.size(); ++i) {
        CAPTURE(i);
        CHECK(steps[i].step.v == expected.steps[i].v);
        CHECK(steps[i].step.u == expected.steps[i].u);
        CHECK(steps[i].step.common == expected.steps[i].common);
        CHECK(steps[i].step.min_degree_after == expected.steps[i].min_degree_after);
        CHECK(steps[i].bound_after == expected.steps[i].bound_after);
    }
}

}  // namespace

TEST_CASE("initial view degrees are the q_set sizes") {
    std::mt19937 rng(31);
    for (int it = 0; it < 50; ++it) {
        int n = 3 + static_cast<int>(rng() % 8);
        Graph g = random_graph(rng(), n, 0.4);
        VertexSet s = random_subset(rng, n, n - 1);
        MinorView view = init_view(g, s);
        CHECK(view.alive == (g.vertices() - s));
        for (int v : view.alive) CHECK(view.degree[v] == q_set(g, s, v).count());
        for (int v = 0; v < n; ++v) CHECK(view.find(v) == v);
    }
}

TEST_CASE("derived child view equals a fresh one") {
    std::mt19937 rng(32);
    for (int it = 0; it < 120; ++it) {
        int n = 3 + static_cast<int>(rng() % 9);
        Graph g = random_graph(rng(), n, 0.2 + 0.1 * (it % 6));
        VertexSet s = random_subset(rng, n, n - 2);
        VertexSet rows_owner = g.vertices() - s;
        VertexSet rows_set[kMaxVertices];
        for (int w : rows_owner) rows_set[w] = q_set(g, s, w);
        for (int v : rows_owner) {
            MinorView derived = init_view_after(g, s, v, rows_set);
            VertexSet s2 = s;
            s2.add(v);
            MinorView fresh = init_view(g, s2);
            CHECK(derived.alive == fresh.alive);
            for (int w : fresh.alive) {
                CAPTURE(v);
                CAPTURE(w);
                CHECK(derived.degree[w] == fresh.degree[w]);
            }
        }
    }
}

TEST_CASE("contract step on k4") {
    MinorView view = init_view(complete_graph(4), VertexSet{});
    ContractStep step = contract_step(view, complete_graph(4));
    CHECK(step.v == 0);
    CHECK(step.u == 1);
    CHECK(step.common == 2);
    CHECK(step.min_degree_after == 2);
    CHECK(view.degree[0] == 2);
    CHECK(view.degree[2] == 2);
    CHECK(view.degree[3] == 2);
    CHECK(view.alive.count() == 3);
    CHECK(view.find(1) == 0);
}

TEST_CASE("isolated classes are dropped") {
    Graph g = Graph::from_edges(3, {{1, 2}});
    MinorView view = init_view(g, VertexSet{});
    ContractStep step = contract_step(view, g);
    CHECK(step.v == 0);
    CHECK(step.u == -1);
    CHECK(view.alive.count() == 2);
    CHECK(mmw_lower_bound(g, VertexSet{}) == 1);
}

TEST_CASE("mmw lower bound small knowns") {
    CHECK(mmw_lower_bound(complete_graph(4), VertexSet{}) == 3);
    CHECK(mmw_lower_bound(complete_graph(6), VertexSet{}) == 5);
    CHECK(mmw_lower_bound(cycle_graph(6), VertexSet{}) == 2);
    CHECK(mmw_lower_bound(path_graph(5), VertexSet{}) == 1);
    CHECK(mmw_lower_bound(Graph::from_edges(4, {}), VertexSet{}) == 0);
    CHECK(mmw_lower_bound(Graph::from_edges(1, {}), VertexSet{}) == 0);
    CHECK(mmw_lower_bound(grid_graph(3, 3), VertexSet{}) ==
          oracle::explicit_mmw(grid_graph(3, 3), VertexSet{}).bound);
}

TEST_CASE("mmw trace matches the explicit reference") {
    check_trace_matches_explicit(complete_graph(4), VertexSet{}, INT_MAX);
    check_trace_matches_explicit(grid_graph(3, 3), VertexSet{}, INT_MAX);
    check_trace_matches_explicit(petersen_graph(), VertexSet{}, INT_MAX);

    std::mt19937 rng(33);
    for (int it = 0; it < 400; ++it) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = random_graph(rng(), n, 0.15 + 0.1 * (it % 8));
        VertexSet s = random_subset(rng, n, n - 1);
        int cap = (it % 3 == 0) ? static_cast<int>(rng() % 4) : INT_MAX;
        CAPTURE(it);
        check_trace_matches_explicit(g, s, cap);
    }
}

TEST_CASE("mmw never exceeds the treewidth of the eliminated graph") {
    std::mt19937 rng(34);
    for (int it = 0; it < 150; ++it) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = random_graph(rng(), n, 0.2 + 0.1 * (it % 7));
        VertexSet s = random_subset(rng, n, n - 1);
        int bound = mmw_lower_bound(g, s);
        int tw = oracle::treewidth_by_subset_dp(eliminate_all(g, s));
        CHECK(bound <= tw);
    }
}

TEST_CASE("capped runs agree with uncapped runs on the verdict") {
    std::mt19937 rng(35);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = random_graph(rng(), n, 0.3 + 0.08 * (it % 6));
        int cap = static_cast<int>(rng() % 5);
        int full = mmw_lower_bound(g, VertexSet{});
        int capped = mmw_lower_bound(g, VertexSet{}, cap);
        CHECK((full > cap) == (capped > cap));
        if (full <= cap) CHECK(capped == full);
    }
}

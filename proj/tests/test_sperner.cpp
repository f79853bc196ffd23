#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include <treekkm/oracles.hpp>
#include <treekkm/sperner.hpp>

#include "generators.hpp"

using namespace treekkm;
using testgen::Rng;

namespace {

MetricTree path3() {
    return MetricTree(3, {{0, 1, Rat(1)}, {1, 2, Rat(1)}});
}

MetricTree star4() {
    return MetricTree(4, {{0, 1, Rat(1)}, {0, 2, Rat(1)}, {0, 3, Rat(1)}});
}

}  // namespace

TEST_CASE("properness on a path") {
    MetricTree t = path3();
    Labelling l{{0, 2}, {{0}, {0}, {2}}};
    CHECK(is_proper(t, l));
    CHECK(successor(t, l, 0) == 1);
    CHECK(successor(t, l, 1) == 2);
    CHECK(successor(t, l, 2) == 1);
    CHECK_FALSE(edge_fully_labelled(t, l, 0));
    CHECK(edge_fully_labelled(t, l, 1));
    SpernerResult r = find_fully_labelled_edge(t, l);
    CHECK(r.edge == 1);
    CHECK(r.walk.front() == 0);
    CHECK(scan_fully_labelled(t, l) == std::vector<int>{1});
}

TEST_CASE("improper labellings name their defect") {
    MetricTree t = star4();
    auto reason = [&](Labelling l) {
        auto v = labelling_violation(t, l);
        REQUIRE(v.has_value());
        return *v;
    };
    CHECK(reason({{}, {{}, {}, {}, {}}}) == "the label set is empty");
    CHECK(reason({{2, 1}, {{}, {1}, {2}, {}}}).find("sorted") != std::string::npos);
    CHECK(reason({{1, 4}, {{}, {1}, {}, {}}}).find("missing vertex") != std::string::npos);
    CHECK(reason({{1}, {{}, {1}, {}}}).find("every vertex") != std::string::npos);
    CHECK(reason({{1}, {{}, {}, {}, {}}}).find("does not carry its own label") !=
          std::string::npos);
    CHECK(reason({{1}, {{3}, {1}, {}, {}}}).find("not in the label set") != std::string::npos);
    // center misses leaves sitting in different components
    CHECK(reason({{1, 2}, {{}, {1}, {2}, {}}}).find("different components") != std::string::npos);
    CHECK_FALSE(is_proper(t, {{1, 2}, {{}, {1}, {2}, {}}}));
}

TEST_CASE("a vertex carrying every label short-circuits") {
    MetricTree t = path3();
    Labelling l{{0, 2}, {{0}, {0, 2}, {2}}};
    SpernerResult r = find_fully_labelled_edge(t, l);
    // smallest full vertex is 1; its smallest incident edge is 0
    CHECK(r.edge == 0);
    CHECK(edge_fully_labelled(t, l, 0));
}

TEST_CASE("successor walks settle on a both-ways edge") {
    WalkOutcome w = successor_walk(3, 0, [](int v) { return v == 0 ? 1 : (v == 1 ? 2 : 1); });
    CHECK_FALSE(w.stopped_at_vertex);
    REQUIRE(w.walk.size() >= 2);
    int a = w.walk[w.walk.size() - 2], b = w.walk.back();
    CHECK(((a == 1 && b == 2) || (a == 2 && b == 1)));
    WalkOutcome stop = successor_walk(3, 2, [](int v) { return v == 2 ? 1 : -1; });
    CHECK(stop.stopped_at_vertex);
    CHECK(stop.walk == std::vector<int>{2, 1});
    // a succ that cycles without ever reversing an edge violates the
    // adjacent-step contract and runs into the step cap
    CHECK_THROWS_AS(successor_walk(4, 1, [](int v) { return v % 3 + 1; }), ValidationError);
}

TEST_CASE("vertex maps induce proper labellings and back") {
    MetricTree t = star4();
    std::vector<int> f = {1, 0, 0, 0};
    Labelling l = labelling_from_vertex_map(t, f);
    CHECK(is_proper(t, l));
    // vertex 0 misses exactly the vertices on its image's side: {1}
    CHECK(l.label_set == std::vector<int>{0, 1, 2, 3});
    CHECK(l.labels[0] == std::vector<int>{0, 2, 3});
    CHECK(l.labels[1] == std::vector<int>{1});
    std::vector<int> g = vertex_map_from_labelling(t, l);
    CHECK(g == std::vector<int>{1, 0, 0, 0});
    Labelling full{{0}, {{0}, {0}, {0}, {0}}};
    CHECK_THROWS_AS(vertex_map_from_labelling(t, full), ValidationError);
}

TEST_CASE("maps with a fixed vertex are rejected") {
    MetricTree t = path3();
    CHECK_THROWS_AS(labelling_from_vertex_map(t, {0, 2, 1}), ValidationError);
    CHECK_THROWS_AS(inverted_edge(t, {0, 2, 1}), ValidationError);
}

TEST_CASE("inverted edge on a fixed instance") {
    MetricTree t = path3();
    std::vector<int> f = {2, 2, 0};
    InvertedEdgeResult r = inverted_edge(t, f);
    CHECK(r.edge == 1);
    const Edge& ed = t.edge(r.edge);
    CHECK(t.next_hop(ed.u, f[ed.u]) == ed.v);
    CHECK(t.next_hop(ed.v, f[ed.v]) == ed.u);
    DiscreteFpWitnesses all = exhaustive_discrete_fp(t, f);
    CHECK(all.fixed_vertices.empty());
    CHECK(all.inverted_edges == std::vector<int>{1});
}

TEST_CASE("random proper labellings: walk agrees with the scan") {
    Rng rng(20260805);
    for (int round = 0; round < 100; ++round) {
        MetricTree t = testgen::random_tree(rng, testgen::uniform_int(rng, 2, 30));
        Labelling l = testgen::random_proper_labelling(rng, t);
        REQUIRE(is_proper(t, l));
        SpernerResult r = find_fully_labelled_edge(t, l);
        CHECK(edge_fully_labelled(t, l, r.edge));
        std::vector<int> all = scan_fully_labelled(t, l);
        CHECK(std::find(all.begin(), all.end(), r.edge) != all.end());
        CHECK(r.walk.size() <= 2 * (size_t)t.vertex_count());
        // deterministic: the same instance yields the same witness
        CHECK(find_fully_labelled_edge(t, l).edge == r.edge);
    }
}

TEST_CASE("random fixed-point-free maps: inverted edge matches the oracle") {
    Rng rng(20260806);
    for (int round = 0; round < 100; ++round) {
        MetricTree t = testgen::random_tree(rng, testgen::uniform_int(rng, 2, 30));
        std::vector<int> f = testgen::random_fixed_point_free_map(rng, t);
        InvertedEdgeResult r = inverted_edge(t, f);
        DiscreteFpWitnesses all = exhaustive_discrete_fp(t, f);
        CHECK(all.fixed_vertices.empty());
        CHECK(std::find(all.inverted_edges.begin(), all.inverted_edges.end(), r.edge) !=
              all.inverted_edges.end());
        Labelling l = labelling_from_vertex_map(t, f);
        CHECK(is_proper(t, l));
        CHECK(edge_fully_labelled(t, l, r.edge));
    }
}

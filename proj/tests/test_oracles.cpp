#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "treekkm/errors.hpp"
#include "treekkm/oracles.hpp"

#include "generators.hpp"

using namespace treekkm;

namespace {

MetricTree path3() {
    return MetricTree(3, {{0, 1, Rat(1)}, {1, 2, Rat(1, 2)}});
}

}  // namespace

TEST_CASE("grid_sample covers a tree at the requested resolution") {
    MetricTree t = path3();
    GridSample g = grid_sample(t, Rat(1, 4));

    // All vertices come first, then edge interiors.
    REQUIRE(g.points.size() >= 3);
    for (int v = 0; v < 3; ++v) CHECK(g.points[v] == t.vertex_point(v));

    // Edge 0 has length 1 -> 3 interior points, edge 1 has length 1/2 -> 1.
    CHECK(g.points.size() == 3 + 3 + 1);

    // Per edge: consecutive sample gaps never exceed the resolution.
    for (int e = 0; e < t.edge_count(); ++e) {
        std::vector<Rat> offs{Rat(0), t.edge(e).length};
        for (const TreePoint& p : g.points)
            if (!p.is_vertex() && p.edge == e) offs.push_back(p.offset);
        std::sort(offs.begin(), offs.end());
        for (size_t i = 1; i < offs.size(); ++i)
            CHECK(offs[i] - offs[i - 1] <= Rat(1, 4));
    }

    // Interior samples are canonical (strictly inside their edge).
    for (const TreePoint& p : g.points)
        if (!p.is_vertex()) {
            CHECK(sgn(p.offset) > 0);
            CHECK(p.offset < t.edge(p.edge).length);
        }
}

TEST_CASE("grid_sample degenerates to the vertex set when coarse") {
    MetricTree t = path3();
    GridSample g = grid_sample(t, Rat(5));
    CHECK(g.points.size() == 3);
}

TEST_CASE("grid_sample rejects useless resolutions") {
    MetricTree t = path3();
    CHECK_THROWS_AS(grid_sample(t, Rat(0)), ValidationError);
    CHECK_THROWS_AS(grid_sample(t, Rat(-1, 2)), ValidationError);
    CHECK_THROWS_AS(grid_sample(t, Rat(1, 2'000'000)), ValidationError);
}

TEST_CASE("grid_sample walks a cycle the same way") {
    MetricCycle c(3, {Rat(1), Rat(1), Rat(1)});
    GridSample g = grid_sample(c, Rat(1, 2));
    CHECK(g.points.size() == 3 + 3);  // one interior midpoint per unit edge
    for (const TreePoint& p : g.points)
        if (!p.is_vertex()) CHECK(p.offset == Rat(1, 2));
    CHECK_THROWS_AS(grid_sample(c, Rat(0)), ValidationError);
}

TEST_CASE("scan_fully_labelled lists exactly the edges whose endpoints join to A") {
    MetricTree t = path3();
    Labelling both{{0, 2}, {{0}, {0, 2}, {2}}};
    CHECK(scan_fully_labelled(t, both) == std::vector<int>{0, 1});

    Labelling one{{0, 2}, {{0}, {0}, {2}}};
    CHECK(scan_fully_labelled(t, one) == std::vector<int>{1});
}

TEST_CASE("grid membership audit separates faithful sets from corrupted ones") {
    MetricTree t = path3();
    ClosedSet ball(t);
    ball.add_vertex(0);
    ball.add_interval(0, Rat(0), Rat(1, 2));

    auto within = [&](const Rat& r) {
        return [&t, r](const TreePoint& p) { return t.distance(p, t.vertex_point(0)) <= r; };
    };
    GridSample g = grid_sample(t, Rat(1, 8));

    CHECK(grid_membership_audit(ball, within(Rat(1, 2)), g).empty());

    // Shrinking the predicate exposes the stored tail of the interval.
    auto bad = grid_membership_audit(ball, within(Rat(1, 4)), g);
    REQUIRE(!bad.empty());
    for (const TreePoint& p : bad) {
        CHECK(ball.contains(p));
        CHECK(t.distance(p, t.vertex_point(0)) > Rat(1, 4));
    }
}

TEST_CASE("grid membership audit works on cycle sets") {
    MetricCycle c(4, {Rat(1), Rat(1), Rat(1), Rat(1)});
    CycleSet s(c);
    s.add_arc(Rat(3), Rat(5));  // wraps through vertex 0
    auto near0 = [&](const TreePoint& p) {
        return c.distance(p, c.vertex_point(0)) <= Rat(1);
    };
    GridSample g = grid_sample(c, Rat(1, 4));
    CHECK(grid_membership_audit(s, near0, g).empty());
}

TEST_CASE("exhaustive discrete fixed point scan finds fixed vertices and inversions") {
    MetricTree t = path3();

    auto w = exhaustive_discrete_fp(t, {0, 2, 1});
    CHECK(w.fixed_vertices == std::vector<int>{0});
    CHECK(w.inverted_edges == std::vector<int>{1});

    // A shift map has neither on the edge it slides along.
    auto s = exhaustive_discrete_fp(t, {1, 2, 2});
    CHECK(s.fixed_vertices == std::vector<int>{2});
    CHECK(s.inverted_edges.empty());

    CHECK_THROWS_AS(exhaustive_discrete_fp(t, {0, 1}), ValidationError);
}

TEST_CASE("exhaustive scan agrees with itself across random maps") {
    testgen::Rng rng(20260811);
    for (int round = 0; round < 50; ++round) {
        MetricTree t = testgen::random_tree(rng, testgen::uniform_int(rng, 2, 12));
        auto f = testgen::random_fixed_point_free_map(rng, t);
        auto w = exhaustive_discrete_fp(t, f);
        CHECK(w.fixed_vertices.empty());
        REQUIRE(!w.inverted_edges.empty());
        for (int e : w.inverted_edges) {
            int x = t.edge(e).u, y = t.edge(e).v;
            CHECK(t.next_hop(x, f[x]) == y);
            CHECK(t.next_hop(y, f[y]) == x);
        }
    }
}

TEST_CASE("grid_max_depth reports the deepest sample") {
    MetricCycle c(3, {Rat(1), Rat(1), Rat(1)});
    CycleKkmCover k;
    for (int v = 0; v < 3; ++v) {
        CycleSet s(c);
        Rat at = c.position(c.vertex_point(v));
        s.add_arc(at - 1, at + 1);
        k.sets.push_back(s);
    }
    // Each vertex lies in all three unit-radius arcs; edge interiors in two.
    GridSample g = grid_sample(c, Rat(1, 4));
    CHECK(grid_max_depth(k, g) == 3);

    CycleKkmCover lone;
    lone.sets.push_back(k.sets[0]);
    CHECK(grid_max_depth(lone, g) == 1);
}

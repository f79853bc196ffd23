#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <treekkm/closed_set.hpp>
#include <treekkm/oracles.hpp>

#include "generators.hpp"

using namespace treekkm;
using testgen::Rng;

namespace {

MetricTree path3() {
    return MetricTree(3, {{0, 1, Rat(2)}, {1, 2, Rat(1)}});
}

ClosedSet random_set(Rng& rng, const MetricTree& t) {
    ClosedSet s(t);
    int pieces = testgen::uniform_int(rng, 1, 5);
    for (int i = 0; i < pieces; ++i) {
        switch (testgen::uniform_int(rng, 0, 2)) {
            case 0:
                s.add_point(testgen::random_point(rng, t));
                break;
            case 1: {
                int e = testgen::uniform_int(rng, 0, t.edge_count() - 1);
                Rat a = testgen::uniform_rational(rng, Rat(0), t.edge(e).length);
                Rat b = testgen::uniform_rational(rng, Rat(0), t.edge(e).length);
                s.add_interval(e, std::min(a, b), std::max(a, b));
                break;
            }
            default:
                s = set_union(s, ClosedSet::path_between(t, testgen::random_point(rng, t),
                                                         testgen::random_point(rng, t)));
        }
    }
    return s;
}

}  // namespace

TEST_CASE("interval list algebra") {
    std::vector<Interval> xs = merge_intervals({{Rat(2), Rat(3)}, {Rat(0), Rat(1)}, {Rat(1), Rat(2)}});
    REQUIRE(xs.size() == 1);
    CHECK(xs[0] == Interval{Rat(0), Rat(3)});
    xs = merge_intervals({{Rat(0), Rat(1)}, {Rat(2), Rat(3)}});
    CHECK(xs.size() == 2);
    auto u = union_interval_lists({{Rat(0), Rat(1)}}, {{Rat(3, 2), Rat(2)}});
    CHECK(u.size() == 2);
    auto i = intersect_interval_lists({{Rat(0), Rat(2)}}, {{Rat(1), Rat(3)}});
    REQUIRE(i.size() == 1);
    CHECK(i[0] == Interval{Rat(1), Rat(2)});
    CHECK(intersect_interval_lists({{Rat(0), Rat(1)}}, {{Rat(2), Rat(3)}}).empty());
    CHECK(interval_list_contains({{Rat(0), Rat(1)}, {Rat(2), Rat(3)}}, Rat(5, 2)));
    CHECK_FALSE(interval_list_contains({{Rat(0), Rat(1)}, {Rat(2), Rat(3)}}, Rat(3, 2)));
}

TEST_CASE("canonical form of stored sets") {
    MetricTree t = path3();
    ClosedSet s(t);
    s.add_interval(0, Rat(0), Rat(1, 2));
    CHECK(s.vertex_member(0));  // interval touches the edge start
    CHECK_FALSE(s.vertex_member(1));
    s.add_interval(0, Rat(3, 2), Rat(2));
    CHECK(s.vertex_member(1));
    ClosedSet bit(t);
    bit.add_interval(1, Rat(1), Rat(1));  // end singleton collapses to the bit
    CHECK(bit.vertex_member(2));
    CHECK(bit.intervals_on(1).empty());
    ClosedSet mid(t);
    mid.add_interval(0, Rat(1), Rat(1));  // interior singleton stays an interval
    CHECK(mid.intervals_on(0).size() == 1);
    CHECK_FALSE(mid.vertex_member(0));
    // touching pieces merge into one canonical interval
    ClosedSet m(t);
    m.add_interval(0, Rat(1, 4), Rat(1, 2));
    m.add_interval(0, Rat(1, 2), Rat(1));
    REQUIRE(m.intervals_on(0).size() == 1);
    CHECK(m.intervals_on(0)[0] == Interval{Rat(1, 4), Rat(1)});
    ClosedSet twice = m;
    twice.add_interval(0, Rat(1, 4), Rat(1));
    CHECK(twice == m);
    CHECK_THROWS_AS(m.add_interval(0, Rat(-1), Rat(1)), ValidationError);
    CHECK_THROWS_AS(m.add_interval(0, Rat(1), Rat(3)), ValidationError);
}

TEST_CASE("membership and coverage") {
    MetricTree t = path3();
    ClosedSet s(t);
    s.add_interval(0, Rat(1, 2), Rat(3, 2));
    CHECK(s.contains(t.point_on_edge(0, Rat(1))));
    CHECK(s.contains(t.point_on_edge(0, Rat(1, 2))));
    CHECK_FALSE(s.contains(t.point_on_edge(0, Rat(1, 4))));
    CHECK_FALSE(s.contains(t.vertex_point(0)));
    CHECK(s.covers_interval(0, Rat(1, 2), Rat(1)));
    CHECK_FALSE(s.covers_interval(0, Rat(0), Rat(1)));
    CHECK(s.first_uncovered(0, Rat(1, 2), Rat(1)) == std::nullopt);
    auto gap = s.first_uncovered(0, Rat(0), Rat(2));
    REQUIRE(gap.has_value());
    CHECK_FALSE(s.contains(t.point_on_edge(0, *gap)));
}

TEST_CASE("paths as sets") {
    MetricTree t = path3();
    TreePoint a = t.point_on_edge(0, Rat(1, 2));
    TreePoint b = t.point_on_edge(1, Rat(1, 2));
    ClosedSet p = ClosedSet::path_between(t, a, b);
    CHECK(p.contains(a));
    CHECK(p.contains(b));
    CHECK(p.contains(t.vertex_point(1)));
    CHECK_FALSE(p.contains(t.vertex_point(0)));
    CHECK(p.covers_path(t.path(a, b)));
    CHECK(p.is_connected());
    auto witness = ClosedSet::point(t, a).path_uncovered_witness(t.path(a, b));
    REQUIRE(witness.has_value());
    CHECK_FALSE(ClosedSet::point(t, a).contains(*witness));
    CHECK(ClosedSet::whole(t).covers_path(t.path(t.vertex_point(0), t.vertex_point(2))));
}

TEST_CASE("connectivity detection") {
    MetricTree t = path3();
    CHECK(ClosedSet(t).is_connected());  // empty counts as connected
    CHECK(ClosedSet::whole(t).is_connected());
    ClosedSet two(t);
    two.add_point(t.vertex_point(0));
    two.add_point(t.vertex_point(2));
    CHECK_FALSE(two.is_connected());
    ClosedSet gapped(t);
    gapped.add_interval(0, Rat(0), Rat(1, 2));
    gapped.add_interval(0, Rat(1), Rat(2));
    CHECK_FALSE(gapped.is_connected());
    gapped.add_interval(0, Rat(1, 4), Rat(3, 2));
    CHECK(gapped.is_connected());
}

TEST_CASE("min_point follows the canonical order") {
    MetricTree t = path3();
    CHECK(ClosedSet(t).min_point() == std::nullopt);
    ClosedSet s(t);
    s.add_interval(1, Rat(1, 4), Rat(1, 2));
    REQUIRE(s.min_point().has_value());
    CHECK(*s.min_point() == t.point_on_edge(1, Rat(1, 4)));
    s.add_interval(0, Rat(3, 2), Rat(7, 4));
    CHECK(*s.min_point() == t.point_on_edge(0, Rat(3, 2)));
    s.add_vertex(0);
    CHECK(*s.min_point() == t.vertex_point(0));
}

TEST_CASE("union and intersection agree with membership") {
    Rng rng(20260803);
    for (int round = 0; round < 25; ++round) {
        MetricTree t = testgen::random_tree(rng, testgen::uniform_int(rng, 2, 10));
        ClosedSet a = random_set(rng, t);
        ClosedSet b = random_set(rng, t);
        ClosedSet u = set_union(a, b);
        ClosedSet i = set_intersection(a, b);
        GridSample grid = grid_sample(t, Rat(1, 3));
        for (const TreePoint& p : grid.points) {
            CHECK(u.contains(p) == (a.contains(p) || b.contains(p)));
            CHECK(i.contains(p) == (a.contains(p) && b.contains(p)));
        }
        for (int probe = 0; probe < 20; ++probe) {
            TreePoint p = testgen::random_point(rng, t);
            CHECK(u.contains(p) == (a.contains(p) || b.contains(p)));
            CHECK(i.contains(p) == (a.contains(p) && b.contains(p)));
        }
    }
}

TEST_CASE("distance_to on fixed shapes") {
    MetricTree t = path3();
    ClosedSet s(t);
    CHECK_THROWS_AS(s.distance_to(t.vertex_point(0)), ValidationError);
    s.add_interval(0, Rat(1), Rat(3, 2));
    CHECK(s.distance_to(t.point_on_edge(0, Rat(5, 4))) == 0);
    CHECK(s.distance_to(t.vertex_point(0)) == Rat(1));
    CHECK(s.distance_to(t.vertex_point(2)) == Rat(3, 2));
    CHECK(s.distance_to(t.point_on_edge(0, Rat(7, 4))) == Rat(1, 4));  // same-edge clamp
    s.add_vertex(2);
    CHECK(s.distance_to(t.point_on_edge(1, Rat(3, 4))) == Rat(1, 4));
}

TEST_CASE("distance_to is the exact nearest-member distance") {
    Rng rng(20260804);
    for (int round = 0; round < 20; ++round) {
        MetricTree t = testgen::random_tree(rng, testgen::uniform_int(rng, 2, 8));
        ClosedSet s = random_set(rng, t);
        GridSample grid = grid_sample(t, Rat(1, 4));
        for (int probe = 0; probe < 10; ++probe) {
            TreePoint p = testgen::random_point(rng, t);
            Rat d = s.distance_to(p);
            CHECK((d == 0) == s.contains(p));
            // no sampled member sits closer than the reported distance, and
            // interval ends plus member vertices realize it somewhere
            for (const TreePoint& q : grid.points)
                if (s.contains(q)) CHECK(t.distance(p, q) >= d);
            bool realized = false;
            for (const TreePoint& q : s.interval_boundary_points())
                if (t.distance(p, q) == d) realized = true;
            for (int v = 0; v < t.vertex_count() && !realized; ++v)
                if (s.vertex_member(v) && t.distance(p, t.vertex_point(v)) == d) realized = true;
            if (s.contains(p)) realized = true;
            if (!p.is_vertex())
                for (const Interval& iv : s.intervals_on(p.edge))
                    if (iv.lo <= p.offset && p.offset <= iv.hi) realized = true;
            CHECK(realized);
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <treekkm/fixedpoint.hpp>
#include <treekkm/oracles.hpp>

#include "generators.hpp"

using namespace treekkm;
using testgen::Rng;

namespace {

MetricTree unit_edge() {
    return MetricTree(2, {{0, 1, Rat(1)}});
}

MetricTree star4() {
    return MetricTree(4, {{0, 1, Rat(1)}, {0, 2, Rat(1)}, {0, 3, Rat(1)}});
}

}  // namespace

TEST_CASE("piecewise-linear evaluation on the unit-edge swap") {
    MetricTree t = unit_edge();
    PlMap swap{{t.vertex_point(1), t.vertex_point(0)}};
    CHECK(eval_pl(t, swap, t.vertex_point(0)) == t.vertex_point(1));
    CHECK(eval_pl(t, swap, t.point_on_edge(0, Rat(1, 4))) == t.point_on_edge(0, Rat(3, 4)));
    CHECK(eval_pl(t, swap, t.point_on_edge(0, Rat(1, 2))) == t.point_on_edge(0, Rat(1, 2)));
    CHECK(pl_expansion_bound(t, swap) == 1);
    PlMap incomplete{{t.vertex_point(1)}};
    CHECK_THROWS_AS(eval_pl(t, incomplete, t.vertex_point(0)), ValidationError);
}

TEST_CASE("expansion bound dominates observed stretch") {
    Rng rng(20260808);
    for (int round = 0; round < 30; ++round) {
        MetricTree t = testgen::random_tree(rng, testgen::uniform_int(rng, 2, 10));
        PlMap m = testgen::random_pl_map(rng, t);
        Rat k = pl_expansion_bound(t, m);
        for (int probe = 0; probe < 15; ++probe) {
            TreePoint x = testgen::random_point(rng, t);
            TreePoint y = testgen::random_point(rng, t);
            if (x == y) continue;
            CHECK(t.distance(eval_pl(t, m, x), eval_pl(t, m, y)) <= k * t.distance(x, y));
        }
    }
}

TEST_CASE("move-away sets of the swap meet at the midpoint") {
    MetricTree t = unit_edge();
    PlMap swap{{t.vertex_point(1), t.vertex_point(0)}};
    KkmCover cover = move_away_cover(t, swap, {t.vertex_point(0), t.vertex_point(1)});
    CHECK(validate_kkm_cover(t, cover));
    CHECK(cover.sets[0].covers_interval(0, Rat(0), Rat(1, 2)));
    CHECK_FALSE(cover.sets[0].contains(t.point_on_edge(0, Rat(9, 16))));
    CHECK(cover.sets[1].covers_interval(0, Rat(1, 2), Rat(1)));
    CHECK_FALSE(cover.sets[1].contains(t.point_on_edge(0, Rat(7, 16))));
}

TEST_CASE("move-away membership matches the pointwise inequality") {
    MetricTree s = star4();
    PlMap half{{s.vertex_point(0), s.point_on_edge(0, Rat(1, 2)), s.point_on_edge(1, Rat(1, 2)),
                s.point_on_edge(2, Rat(1, 2))}};
    CHECK(moves_away(s, half, s.vertex_point(0), s.vertex_point(2)));
    CHECK(moves_away(s, half, s.vertex_point(1), s.vertex_point(1)));
    CHECK_FALSE(moves_away(s, half, s.vertex_point(1), s.vertex_point(2)));
    KkmCover c = move_away_cover(s, half, {s.vertex_point(1), s.vertex_point(2), s.vertex_point(0)});
    CHECK(validate_kkm_cover(s, c));
    for (int e = 0; e < 3; ++e)
        for (int i = 0; i <= 16; ++i) {
            TreePoint x = s.point_on_edge(e, Rat(i) / 16);
            for (size_t a = 0; a < c.anchors.size(); ++a)
                CHECK(c.sets[a].contains(x) == moves_away(s, half, x, c.anchors[a]));
        }
    // the audit oracle agrees set by set
    GridSample grid = grid_sample(s, Rat(1, 16));
    for (size_t a = 0; a < c.anchors.size(); ++a) {
        TreePoint anchor = c.anchors[a];
        auto bad = grid_membership_audit(
            c.sets[a], [&](const TreePoint& x) { return moves_away(s, half, x, anchor); }, grid);
        CHECK(bad.empty());
    }
}

TEST_CASE("move-away covers with interior anchors") {
    MetricTree t = unit_edge();
    PlMap swap{{t.vertex_point(1), t.vertex_point(0)}};
    KkmCover c =
        move_away_cover(t, swap, {t.point_on_edge(0, Rat(1, 8)), t.point_on_edge(0, Rat(6, 7))});
    CHECK(validate_kkm_cover(t, c));
    for (int i = 0; i <= 32; ++i) {
        TreePoint x = t.point_on_edge(0, Rat(i) / 32);
        for (size_t a = 0; a < c.anchors.size(); ++a)
            CHECK(c.sets[a].contains(x) == moves_away(t, swap, x, c.anchors[a]));
    }
}

TEST_CASE("exact fixed points") {
    MetricTree t = unit_edge();
    PlMap swap{{t.vertex_point(1), t.vertex_point(0)}};
    CHECK(fixed_point_pl(t, swap) == t.point_on_edge(0, Rat(1, 2)));
    ClosedSet fs = fixed_set_pl(t, swap);
    REQUIRE(fs.intervals_on(0).size() == 1);
    CHECK(fs.intervals_on(0)[0] == Interval{Rat(1, 2), Rat(1, 2)});
    CHECK_FALSE(fs.vertex_member(0));

    PlMap ident{{t.vertex_point(0), t.vertex_point(1)}};
    CHECK(fixed_set_pl(t, ident) == ClosedSet::whole(t));
    CHECK(fixed_point_pl(t, ident) == t.vertex_point(0));

    PlMap cst{{t.point_on_edge(0, Rat(1, 3)), t.point_on_edge(0, Rat(1, 3))}};
    CHECK(pl_expansion_bound(t, cst) == 0);
    CHECK(fixed_point_pl(t, cst) == t.point_on_edge(0, Rat(1, 3)));

    MetricTree s = star4();
    PlMap half{{s.vertex_point(0), s.point_on_edge(0, Rat(1, 2)), s.point_on_edge(1, Rat(1, 2)),
                s.point_on_edge(2, Rat(1, 2))}};
    CHECK(fixed_point_pl(s, half) == s.vertex_point(0));
    ClosedSet hfs = fixed_set_pl(s, half);
    CHECK(hfs.vertex_member(0));
    CHECK_FALSE(hfs.vertex_member(1));
    for (int e = 0; e < 3; ++e) CHECK(hfs.intervals_on(e).empty());
}

TEST_CASE("random maps: fixed point verified and fixed set exact on a grid") {
    Rng rng(20260809);
    for (int round = 0; round < 40; ++round) {
        MetricTree t = testgen::random_tree(rng, testgen::uniform_int(rng, 2, 8));
        PlMap m = testgen::random_pl_map(rng, t);
        std::vector<TreePoint> anchors;
        for (int v = 0; v < t.vertex_count(); ++v) anchors.push_back(t.vertex_point(v));
        KkmCover c = move_away_cover(t, m, anchors);
        CHECK(validate_kkm_cover(t, c));
        TreePoint z = fixed_point_pl(t, m);
        CHECK(eval_pl(t, m, z) == z);
        ClosedSet fs = fixed_set_pl(t, m);
        CHECK(fs.contains(z));
        GridSample grid = grid_sample(t, Rat(1, 8));
        for (const TreePoint& x : grid.points)
            CHECK(fs.contains(x) == (eval_pl(t, m, x) == x));
    }
}

TEST_CASE("epsilon fixed points obey the contract") {
    MetricTree t = unit_edge();
    PlMap swap{{t.vertex_point(1), t.vertex_point(0)}};
    BlackBoxMap bb = black_box_from_pl(t, swap, Rat(1));
    EpsilonFpResult r = epsilon_fixed_point(t, bb, Rat(1, 10));
    CHECK(t.distance(r.point, eval_pl(t, swap, r.point)) < Rat(1, 10));
    CHECK(r.delta == Rat(1, 20));
    CHECK(t.distance(r.point, t.point_on_edge(0, Rat(1, 2))) <= r.delta);

    PlMap ident{{t.vertex_point(0), t.vertex_point(1)}};
    EpsilonFpResult ei = epsilon_fixed_point(t, black_box_from_pl(t, ident), Rat(1, 4));
    CHECK(ei.point == ei.partner);
    CHECK(ei.point == t.vertex_point(0));
    CHECK(ei.steps == 1);

    MetricTree s = star4();
    PlMap half{{s.vertex_point(0), s.point_on_edge(0, Rat(1, 2)), s.point_on_edge(1, Rat(1, 2)),
                s.point_on_edge(2, Rat(1, 2))}};
    BlackBoxMap bs = black_box_from_pl(s, half);
    for (Rat eps : {Rat(1, 4), Rat(1, 16), Rat(1, 64)}) {
        EpsilonFpResult e2 = epsilon_fixed_point(s, bs, eps);
        CHECK(s.distance(e2.point, eval_pl(s, half, e2.point)) < eps);
    }
    CHECK_THROWS_AS(epsilon_fixed_point(t, bb, Rat(0)), ValidationError);
    CHECK_THROWS_AS(black_box_from_pl(t, swap, Rat(-1)), ValidationError);
}

TEST_CASE("a lying modulus is caught, not believed") {
    MetricTree t = unit_edge();
    BlackBoxMap jumpy;
    jumpy.eval = [&t](const TreePoint& x) {
        if (x.is_vertex()) return t.vertex_point(1 - x.vertex);
        return x.offset < Rat(1, 2) ? t.vertex_point(1) : t.vertex_point(0);
    };
    jumpy.modulus = [](const Rat& e) { return e; };
    try {
        epsilon_fixed_point(t, jumpy, Rat(1, 8));
        FAIL("a discontinuous map with a claimed modulus must be rejected");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("modulus") != std::string::npos);
    }
}

TEST_CASE("segment-image disjunction") {
    MetricTree t = unit_edge();
    PlMap swap{{t.vertex_point(1), t.vertex_point(0)}};
    auto lc = lemma_intersect_check(t, swap, t.point_on_edge(0, Rat(7, 16)),
                                    t.point_on_edge(0, Rat(9, 16)));
    CHECK(lc.first_holds);
    CHECK(lc.meet.has_value());
    PlMap ident{{t.vertex_point(0), t.vertex_point(1)}};
    auto li = lemma_intersect_check(t, ident, t.vertex_point(0), t.point_on_edge(0, Rat(1, 8)));
    CHECK(li.first_holds);

    // disjoint image: a segment on one arm of a star whose endpoint images
    // sit on the two other arms; the second disjunct holds with equality
    MetricTree st(13, {{0, 1, Rat(1, 2)},
                       {1, 2, Rat(1, 2)},
                       {2, 3, Rat(1, 2)},
                       {3, 4, Rat(1, 2)},
                       {0, 5, Rat(1, 2)},
                       {5, 6, Rat(1, 2)},
                       {6, 7, Rat(1, 2)},
                       {7, 8, Rat(1, 2)},
                       {0, 9, Rat(1, 2)},
                       {9, 10, Rat(1, 2)},
                       {10, 11, Rat(1, 2)},
                       {11, 12, Rat(1, 2)}});
    PlMap fold;
    fold.images.resize(13);
    fold.images[0] = st.vertex_point(10);
    fold.images[1] = st.vertex_point(10);
    fold.images[2] = st.vertex_point(6);
    fold.images[3] = st.vertex_point(6);
    fold.images[4] = st.vertex_point(6);
    for (int v = 5; v <= 12; ++v) fold.images[v] = st.vertex_point(10);
    auto ld = lemma_intersect_check(st, fold, st.vertex_point(2), st.vertex_point(1));
    CHECK_FALSE(ld.first_holds);
    CHECK(ld.second_holds);
    CHECK(ld.left == ld.right);
}

#include "treekkm/fixedpoint.hpp"

#include <algorithm>

#include "treekkm/errors.hpp"
#include "treekkm/sperner.hpp"

namespace treekkm {

namespace {

void check_total(const MetricTree& t, const PlMap& m) {
    if (static_cast<int>(m.images.size()) != t.vertex_count())
        throw ValidationError("the map must give an image for every vertex");
}

}  // namespace

TreePoint eval_pl(const MetricTree& t, const PlMap& m, const TreePoint& x) {
    check_total(t, m);
    if (x.is_vertex()) return m.images[x.vertex];
    const Edge& ed = t.edge(x.edge);
    TreePath p = t.path(m.images[ed.u], m.images[ed.v]);
    if (sgn(p.length) == 0) return p.waypoints.front();
    return t.path_point_at(p, x.offset / ed.length * p.length);
}

Rat pl_expansion_bound(const MetricTree& t, const PlMap& m) {
    check_total(t, m);
    Rat best = 0;
    for (int e = 0; e < t.edge_count(); ++e) {
        const Edge& ed = t.edge(e);
        Rat ratio = t.distance(m.images[ed.u], m.images[ed.v]) / ed.length;
        if (ratio > best) best = ratio;
    }
    return best;
}

bool moves_away(const MetricTree& t, const PlMap& m, const TreePoint& x, const TreePoint& anchor) {
    return t.distance(x, anchor) <= t.distance(eval_pl(t, m, x), anchor);
}

namespace {

/// Offsets on [0, L] where d(point at offset, a) can change slope: the tent
/// kink between the two exits, or a's own position when it sits on the edge.
void distance_kink_on_edge(const MetricTree& t, int e, const TreePoint& a,
                           std::vector<Rat>& out) {
    const Edge& ed = t.edge(e);
    if (!a.is_vertex() && a.edge == e) {
        out.push_back(a.offset);
        return;
    }
    Rat du = t.distance(t.vertex_point(ed.u), a);
    Rat dv = t.distance(t.vertex_point(ed.v), a);
    Rat kink = (ed.length + dv - du) / 2;
    if (sgn(kink) > 0 && kink < ed.length) out.push_back(kink);
}

/// D_a restricted to edge e: sign pattern of
/// g(o) = d(f(x_o), a) - d(x_o, a) across its linear pieces.
void move_away_on_edge(const MetricTree& t, const PlMap& m, const TreePoint& a, int e,
                       ClosedSet& out) {
    const Edge& ed = t.edge(e);
    const Rat& L = ed.length;
    TreePath p = t.path(m.images[ed.u], m.images[ed.v]);

    std::vector<Rat> cand = {Rat(0), L};
    distance_kink_on_edge(t, e, a, cand);
    if (sgn(p.length) > 0) {
        Rat arc = 0;
        for (const auto& seg : p.segs) {
            Rat slen = abs(seg.to - seg.from);
            cand.push_back(arc * L / p.length);
            std::vector<Rat> kinks;
            distance_kink_on_edge(t, seg.edge, a, kinks);
            for (const Rat& pos : kinks) {
                Rat lo = std::min(seg.from, seg.to), hi = std::max(seg.from, seg.to);
                if (pos > lo && pos < hi) cand.push_back((arc + abs(pos - seg.from)) * L / p.length);
            }
            arc += slen;
        }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    auto g = [&](const Rat& o) -> Rat {
        TreePoint x = t.point_on_edge(e, o);
        TreePoint fx = sgn(p.length) == 0 ? p.waypoints.front()
                                          : t.path_point_at(p, o / L * p.length);
        return t.distance(fx, a) - t.distance(x, a);
    };

    std::vector<Rat> val;
    val.reserve(cand.size());
    for (const Rat& o : cand) val.push_back(g(o));
    for (size_t i = 0; i + 1 < cand.size(); ++i) {
        const Rat &g0 = val[i], &g1 = val[i + 1];
        if (sgn(g0) >= 0 && sgn(g1) >= 0) {
            out.add_interval(e, cand[i], cand[i + 1]);
        } else if (sgn(g0) >= 0 || sgn(g1) >= 0) {
            Rat root = cand[i] + (cand[i + 1] - cand[i]) * g0 / (g0 - g1);
            if (sgn(g0) >= 0)
                out.add_interval(e, cand[i], root);
            else
                out.add_interval(e, root, cand[i + 1]);
        }
    }
}

}  // namespace

KkmCover move_away_cover(const MetricTree& t, const PlMap& m,
                         const std::vector<TreePoint>& anchors) {
    check_total(t, m);
    if (anchors.empty()) throw ValidationError("the anchor set must be nonempty");
    KkmCover c;
    c.anchors = anchors;
    for (const TreePoint& a : anchors) {
        ClosedSet s(t);
        for (int e = 0; e < t.edge_count(); ++e) move_away_on_edge(t, m, a, e, s);
        c.sets.push_back(std::move(s));
    }
    return c;
}

ClosedSet fixed_set_pl(const MetricTree& t, const PlMap& m) {
    std::vector<TreePoint> all;
    for (int v = 0; v < t.vertex_count(); ++v) all.push_back(t.vertex_point(v));
    // anchoring at every vertex cuts away each non-fixed point: continuing
    // the geodesic from x through f(x) onward reaches a vertex x fails to
    // move away from
    return intersect_all(t, move_away_cover(t, m, all), false);
}

TreePoint fixed_point_pl(const MetricTree& t, const PlMap& m) {
    ClosedSet fs = fixed_set_pl(t, m);
    auto z = fs.min_point();
    if (!z) throw ValidationError("empty fixed set: the images do not form a continuous map");
    if (eval_pl(t, m, *z) != *z)
        throw ValidationError("computed fixed set contains a non-fixed point; "
                              "the images do not form a continuous map");
    return *z;
}

BlackBoxMap black_box_from_pl(const MetricTree& t, const PlMap& m) {
    return black_box_from_pl(t, m, pl_expansion_bound(t, m));
}

BlackBoxMap black_box_from_pl(const MetricTree& t, const PlMap& m, const Rat& lipschitz) {
    if (sgn(lipschitz) < 0) throw ValidationError("a Lipschitz constant cannot be negative");
    BlackBoxMap b;
    b.eval = [&t, m](const TreePoint& x) { return eval_pl(t, m, x); };
    Rat k = lipschitz;
    b.modulus = [k](const Rat& eps) { return sgn(k) > 0 ? eps / k : eps; };
    return b;
}

EpsilonFpResult epsilon_fixed_point(const MetricTree& t, const BlackBoxMap& m,
                                    const Rat& epsilon) {
    if (sgn(epsilon) <= 0) throw ValidationError("epsilon must be positive");
    Rat half = epsilon / 2;
    Rat d1 = m.modulus(half);
    if (sgn(d1) <= 0)
        throw ValidationError("the modulus of continuity returned a non-positive size");
    Rat delta = std::min(d1, half);

    Segmentation seg = t.segment(delta, {});
    const MetricTree& rt = seg.refined();

    auto canonical = [&](const TreePoint& p) {
        if (p.is_vertex()) return t.vertex_point(p.vertex);
        return t.point_on_edge(p.edge, p.offset);
    };

    // Walking toward the image settles on an edge whose endpoints both move
    // away from every original vertex; segment size below the modulus makes
    // them ε-fixed.
    WalkOutcome w = successor_walk(rt.vertex_count(), 0, [&](int rv) {
        const TreePoint& y = seg.host_point(rv);
        TreePoint fy = canonical(m.eval(y));
        if (fy == y) return -1;
        return seg.refined_hop_toward_point(rv, fy);
    });

    EpsilonFpResult res;
    res.delta = delta;
    res.steps = static_cast<int>(w.walk.size());
    if (w.stopped_at_vertex) {
        res.point = res.partner = seg.host_point(w.walk.back());
        return res;
    }
    const TreePoint& first = seg.host_point(w.walk[w.walk.size() - 2]);
    const TreePoint& second = seg.host_point(w.walk.back());
    for (const auto& [y, z] : {std::pair{first, second}, std::pair{second, first}}) {
        if (t.distance(y, canonical(m.eval(y))) < epsilon) {
            res.point = y;
            res.partner = z;
            return res;
        }
    }
    throw ValidationError("neither endpoint of the settled edge is an epsilon-fixed point; "
                          "the declared modulus of continuity contradicts the evaluations");
}

LemmaCheckResult lemma_intersect_check(const MetricTree& t, const PlMap& m, const TreePoint& y,
                                       const TreePoint& z) {
    check_total(t, m);
    TreePath yz = t.path(y, z);
    if (yz.segs.size() > 1)
        throw ValidationError("the segment [y, z] must lie inside a single edge");

    TreePoint fy = eval_pl(t, m, y), fz = eval_pl(t, m, z);
    for (int v = 0; v < t.vertex_count(); ++v) {
        TreePoint pv = t.vertex_point(v);
        if (t.distance(y, pv) > t.distance(fy, pv) && t.distance(z, pv) > t.distance(fz, pv))
            throw ValidationError("both endpoints move toward vertex " + std::to_string(v) +
                                  "; the segment is not fully labelled");
    }

    // On one edge the image of [y, z] is exactly the path between the two
    // image points, so the first disjunct is a closed-set intersection.
    ClosedSet seg_set = ClosedSet::path_between(t, y, z);
    ClosedSet img_set = ClosedSet::path_between(t, fy, fz);
    ClosedSet meet = set_intersection(seg_set, img_set);

    LemmaCheckResult r;
    r.first_holds = !meet.empty();
    if (r.first_holds) r.meet = meet.min_point();
    r.left = t.distance(y, fz);
    r.right = t.distance(fy, fz);
    r.second_holds = r.left <= r.right;
    if (!r.first_holds && !r.second_holds)
        throw ValidationError("neither disjunct holds; the joint move-away premise must be broken");
    return r;
}

}  // namespace treekkm

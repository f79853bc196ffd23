#include "treekkm/kkm.hpp"

#include <algorithm>
#include <set>

#include "treekkm/errors.hpp"

namespace treekkm {

std::optional<std::string> cover_violation(const MetricTree& t, const KkmCover& c) {
    if (c.anchors.empty()) return "the cover has no anchors";
    if (c.anchors.size() != c.sets.size()) return "anchors and sets differ in number";
    const int k = static_cast<int>(c.anchors.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (c.anchors[i] == c.anchors[j])
                return "anchors " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
    for (int i = 0; i < k; ++i)
        if (!c.sets[i].contains(c.anchors[i]))
            return "anchor " + std::to_string(i) + " (" + point_text(c.anchors[i]) +
                   ") is outside its own set";
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            ClosedSet u = set_union(c.sets[i], c.sets[j]);
            auto w = u.path_uncovered_witness(t.path(c.anchors[i], c.anchors[j]));
            if (w)
                return "the path between anchors " + std::to_string(i) + " and " +
                       std::to_string(j) + " leaves both sets at " + point_text(*w);
        }
    return std::nullopt;
}

bool validate_kkm_cover(const MetricTree& t, const KkmCover& c) { return !cover_violation(t, c); }

Labelling membership_labelling(const MetricTree& t, const KkmCover& c) {
    const int k = static_cast<int>(c.anchors.size());
    if (k == 0 || c.sets.size() != c.anchors.size())
        throw ValidationError("the cover has no anchors or mismatched sets");
    std::vector<std::pair<int, int>> by_vertex;  // (anchor vertex, set index)
    for (int i = 0; i < k; ++i) {
        if (!c.anchors[i].is_vertex())
            throw ValidationError("anchor " + std::to_string(i) +
                                  " is not a vertex; segment the tree first");
        by_vertex.push_back({c.anchors[i].vertex, i});
    }
    std::sort(by_vertex.begin(), by_vertex.end());
    for (int i = 1; i < k; ++i)
        if (by_vertex[i - 1].first == by_vertex[i].first)
            throw ValidationError("two anchors share vertex " +
                                  std::to_string(by_vertex[i].first));

    Labelling l;
    l.labels.assign(t.vertex_count(), {});
    for (auto [a, i] : by_vertex) {
        l.label_set.push_back(a);
        for (int v = 0; v < t.vertex_count(); ++v)
            if (c.sets[i].vertex_member(v)) l.labels[v].push_back(a);
    }
    return l;
}

ClosedSet intersect_all(const MetricTree& t, const KkmCover& c, bool validate) {
    if (validate) {
        auto why = cover_violation(t, c);
        if (why) throw ValidationError("invalid cover: " + *why);
    } else if (c.sets.empty()) {
        throw ValidationError("the cover has no sets");
    }
    ClosedSet out = c.sets.front();
    for (size_t i = 1; i < c.sets.size(); ++i) out = set_intersection(out, c.sets[i]);
    return out;
}

KkmSpernerResult kkm_point_via_sperner(const MetricTree& t, const KkmCover& c, const Rat& delta0,
                                       int max_refinements, bool validate) {
    if (sgn(delta0) <= 0) throw ValidationError("the initial segmentation size must be positive");
    if (validate) {
        auto why = cover_violation(t, c);
        if (why) throw ValidationError("invalid cover: " + *why);
    }
    const int k = static_cast<int>(c.anchors.size());
    if (k == 0 || c.sets.size() != c.anchors.size())
        throw ValidationError("the cover has no anchors or mismatched sets");

    // Forcing every set's interval endpoints into the refinement puts some
    // point of the (closed, finitely-described) common intersection at a
    // refined vertex, so a valid cover succeeds already at delta0.
    std::vector<TreePoint> must = c.anchors;
    for (const ClosedSet& s : c.sets) {
        auto bps = s.interval_boundary_points();
        must.insert(must.end(), bps.begin(), bps.end());
    }

    KkmSpernerResult res;
    Rat delta = delta0;
    for (int round = 0; round <= max_refinements; ++round) {
        res.deltas.push_back(delta);
        Segmentation seg = t.segment(delta, must);
        const MetricTree& rt = seg.refined();

        Labelling l;
        l.labels.assign(rt.vertex_count(), {});
        std::vector<int> anchor_ids;
        for (const TreePoint& a : c.anchors) {
            auto id = seg.refined_vertex_at(a);
            if (!id) throw ValidationError("anchor missing from the refinement");
            anchor_ids.push_back(*id);
        }
        std::vector<int> order(k);
        for (int i = 0; i < k; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](int i, int j) { return anchor_ids[i] < anchor_ids[j]; });
        for (int i : order) {
            l.label_set.push_back(anchor_ids[i]);
            for (int v = 0; v < rt.vertex_count(); ++v)
                if (c.sets[i].contains(seg.host_point(v))) l.labels[v].push_back(anchor_ids[i]);
        }

        SpernerResult sp;
        try {
            sp = find_fully_labelled_edge(rt, l);
        } catch (const ValidationError& e) {
            throw ValidationError(
                "the cover is not a valid KKM cover: its membership labelling is improper (" +
                std::string(e.what()) + ")");
        }
        res.walk = sp.walk;
        const Edge& ed = rt.edge(sp.edge);
        for (int end : {ed.u, ed.v}) {
            const TreePoint& host = seg.host_point(end);
            bool in_all = true;
            for (const ClosedSet& s : c.sets)
                if (!s.contains(host)) {
                    in_all = false;
                    break;
                }
            if (in_all) {
                res.point = host;
                res.refinements = round;
                return res;
            }
        }
        delta /= 2;
    }
    throw ValidationError("no common point found after " + std::to_string(max_refinements) +
                          " refinements; the cover is not a valid KKM cover");
}

namespace {

/// First anchor candidate of a set not yet taken: the smallest point, then
/// successive binary subdivision points of its first positive-length
/// interval, then every isolated point it has.
TreePoint pick_anchor(const MetricTree& t, const ClosedSet& s,
                      const std::vector<TreePoint>& taken, int set_index) {
    auto used = [&](const TreePoint& p) {
        return std::find(taken.begin(), taken.end(), p) != taken.end();
    };
    auto mp = s.min_point();
    if (!mp) throw ValidationError("set " + std::to_string(set_index) + " is empty");
    if (!used(*mp)) return *mp;
    for (int e = 0; e < t.edge_count(); ++e)
        for (const Interval& iv : s.intervals_on(e))
            if (iv.lo < iv.hi) {
                Rat step = (iv.hi - iv.lo) / 2;
                while (sgn(step) > 0) {
                    TreePoint p = t.point_on_edge(e, iv.lo + step);
                    if (!used(p)) return p;
                    step /= 2;
                }
            }
    for (int v = 0; v < t.vertex_count(); ++v)
        if (s.vertex_member(v) && !used(t.vertex_point(v))) return t.vertex_point(v);
    for (int e = 0; e < t.edge_count(); ++e)
        for (const Interval& iv : s.intervals_on(e)) {
            TreePoint p = t.point_on_edge(e, iv.lo);
            if (!used(p)) return p;
        }
    throw ValidationError("cannot choose distinct anchors: set " + std::to_string(set_index) +
                          " has no point free of earlier anchors");
}

}  // namespace

KkmCover cover_from_connected_sets(const MetricTree& t, const std::vector<ClosedSet>& sets) {
    if (sets.empty()) throw ValidationError("no sets given");
    const int k = static_cast<int>(sets.size());
    for (int i = 0; i < k; ++i) {
        if (sets[i].empty()) throw ValidationError("set " + std::to_string(i) + " is empty");
        if (!sets[i].is_connected())
            throw ValidationError("set " + std::to_string(i) + " is disconnected");
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (set_intersection(sets[i], sets[j]).empty())
                throw ValidationError("sets " + std::to_string(i) + " and " + std::to_string(j) +
                                      " are disjoint");
    KkmCover c;
    c.sets = sets;
    for (int i = 0; i < k; ++i) c.anchors.push_back(pick_anchor(t, sets[i], c.anchors, i));
    return c;
}

}  // namespace treekkm

#include "treekkm/closed_set.hpp"

#include <algorithm>
#include <numeric>

#include "treekkm/errors.hpp"

namespace treekkm {

std::vector<Interval> merge_intervals(std::vector<Interval> xs) {
    std::sort(xs.begin(), xs.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
    std::vector<Interval> out;
    for (const Interval& x : xs) {
        if (!out.empty() && x.lo <= out.back().hi) {
            if (x.hi > out.back().hi) out.back().hi = x.hi;
        } else {
            out.push_back(x);
        }
    }
    return out;
}

std::vector<Interval> union_interval_lists(const std::vector<Interval>& a,
                                           const std::vector<Interval>& b) {
    std::vector<Interval> all = a;
    all.insert(all.end(), b.begin(), b.end());
    return merge_intervals(std::move(all));
}

std::vector<Interval> intersect_interval_lists(const std::vector<Interval>& a,
                                               const std::vector<Interval>& b) {
    std::vector<Interval> out;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Rat lo = std::max(a[i].lo, b[j].lo);
        Rat hi = std::min(a[i].hi, b[j].hi);
        if (lo <= hi) out.push_back({lo, hi});
        if (a[i].hi < b[j].hi)
            ++i;
        else
            ++j;
    }
    return out;
}

bool interval_list_contains(const std::vector<Interval>& xs, const Rat& x) {
    for (const Interval& iv : xs) {
        if (x < iv.lo) return false;
        if (x <= iv.hi) return true;
    }
    return false;
}

ClosedSet::ClosedSet(const MetricTree& t)
    : tree_(&t), vmember_(t.vertex_count(), 0), ivals_(t.edge_count()) {}

ClosedSet ClosedSet::whole(const MetricTree& t) {
    ClosedSet s(t);
    std::fill(s.vmember_.begin(), s.vmember_.end(), 1);
    for (int e = 0; e < t.edge_count(); ++e) s.ivals_[e].push_back({Rat(0), t.edge(e).length});
    return s;
}

ClosedSet ClosedSet::point(const MetricTree& t, const TreePoint& p) {
    ClosedSet s(t);
    s.add_point(p);
    return s;
}

ClosedSet ClosedSet::path_between(const MetricTree& t, const TreePoint& x, const TreePoint& y) {
    ClosedSet s(t);
    TreePath p = t.path(x, y);
    for (const TreePoint& w : p.waypoints) s.add_point(w);
    for (const auto& seg : p.segs)
        s.add_interval(seg.edge, std::min(seg.from, seg.to), std::max(seg.from, seg.to));
    return s;
}

void ClosedSet::add_vertex(int v) {
    if (v < 0 || v >= tree_->vertex_count()) throw ValidationError("vertex id out of range");
    vmember_[v] = 1;
}

void ClosedSet::add_point(const TreePoint& p) {
    if (p.is_vertex())
        add_vertex(p.vertex);
    else
        add_interval(p.edge, p.offset, p.offset);
}

void ClosedSet::add_interval(int e, const Rat& lo, const Rat& hi) {
    if (e < 0 || e >= tree_->edge_count()) throw ValidationError("edge id out of range");
    const Edge& ed = tree_->edge(e);
    if (sgn(lo) < 0 || hi > ed.length || lo > hi)
        throw ValidationError("interval outside [0, length] on edge " + std::to_string(e));
    if (sgn(lo) == 0) vmember_[ed.u] = 1;
    if (hi == ed.length) vmember_[ed.v] = 1;
    if (lo == hi && (sgn(lo) == 0 || hi == ed.length)) return;  // end singleton lives in the bit

    auto& xs = ivals_[e];
    // replace the run of intervals overlapping or touching [lo, hi] by the hull
    size_t first = 0;
    while (first < xs.size() && xs[first].hi < lo) ++first;
    size_t last = first;
    Rat nlo = lo, nhi = hi;
    while (last < xs.size() && xs[last].lo <= hi) {
        nlo = std::min(nlo, xs[last].lo);
        nhi = std::max(nhi, xs[last].hi);
        ++last;
    }
    xs.erase(xs.begin() + first, xs.begin() + last);
    xs.insert(xs.begin() + first, {nlo, nhi});
}

bool ClosedSet::empty() const {
    for (char b : vmember_)
        if (b) return false;
    for (const auto& xs : ivals_)
        if (!xs.empty()) return false;
    return true;
}

bool ClosedSet::contains(const TreePoint& p) const {
    if (p.is_vertex()) return vmember_[p.vertex] != 0;
    return interval_list_contains(ivals_[p.edge], p.offset);
}

bool ClosedSet::covers_interval(int e, const Rat& lo, const Rat& hi) const {
    if (lo == hi) return contains(tree_->point_on_edge(e, lo));
    // non-touching closed intervals: a connected query fits in one or none
    for (const Interval& iv : ivals_[e]) {
        if (iv.lo > lo) return false;
        if (hi <= iv.hi) return true;
    }
    return false;
}

std::optional<Rat> ClosedSet::first_uncovered(int e, const Rat& lo, const Rat& hi) const {
    if (lo == hi) {
        if (contains(tree_->point_on_edge(e, lo))) return std::nullopt;
        return lo;
    }
    const Edge& ed = tree_->edge(e);
    std::vector<Interval> pieces;
    if (vmember_[ed.u] && sgn(lo) == 0) pieces.push_back({Rat(0), Rat(0)});
    for (const Interval& iv : ivals_[e]) {
        Rat clo = std::max(iv.lo, lo), chi = std::min(iv.hi, hi);
        if (clo <= chi) pieces.push_back({clo, chi});
    }
    if (vmember_[ed.v] && hi == ed.length) pieces.push_back({ed.length, ed.length});

    Rat cur = lo;
    for (const Interval& c : pieces) {
        if (c.lo > cur) return (cur + c.lo) / 2;
        cur = std::max(cur, c.hi);
    }
    if (cur < hi) return (cur + hi) / 2;
    return std::nullopt;
}

bool ClosedSet::covers_path(const TreePath& p) const {
    if (p.segs.empty()) return contains(p.waypoints.front());
    for (const auto& seg : p.segs)
        if (!covers_interval(seg.edge, std::min(seg.from, seg.to), std::max(seg.from, seg.to)))
            return false;
    return true;
}

std::optional<TreePoint> ClosedSet::path_uncovered_witness(const TreePath& p) const {
    if (p.segs.empty()) {
        if (contains(p.waypoints.front())) return std::nullopt;
        return p.waypoints.front();
    }
    for (const auto& seg : p.segs) {
        auto w = first_uncovered(seg.edge, std::min(seg.from, seg.to), std::max(seg.from, seg.to));
        if (w) return tree_->point_on_edge(seg.edge, *w);
    }
    return std::nullopt;
}

namespace {
int find_root(std::vector<int>& up, int x) {
    while (up[x] != x) {
        up[x] = up[up[x]];
        x = up[x];
    }
    return x;
}
}  // namespace

bool ClosedSet::is_connected() const {
    const int n = tree_->vertex_count();
    int pieces = n;
    for (const auto& xs : ivals_) pieces += static_cast<int>(xs.size());
    std::vector<int> up(pieces);
    std::iota(up.begin(), up.end(), 0);
    auto unite = [&](int a, int b) { up[find_root(up, a)] = find_root(up, b); };

    int next = n;
    for (int e = 0; e < tree_->edge_count(); ++e) {
        const Edge& ed = tree_->edge(e);
        for (const Interval& iv : ivals_[e]) {
            if (sgn(iv.lo) == 0) unite(next, ed.u);
            if (iv.hi == ed.length) unite(next, ed.v);
            ++next;
        }
    }

    int root = -1;
    for (int v = 0; v < n; ++v)
        if (vmember_[v]) {
            int r = find_root(up, v);
            if (root < 0) root = r;
            if (r != root) return false;
        }
    next = n;
    for (const auto& xs : ivals_)
        for (size_t i = 0; i < xs.size(); ++i) {
            int r = find_root(up, next++);
            if (root < 0) root = r;
            if (r != root) return false;
        }
    return true;
}

std::optional<TreePoint> ClosedSet::min_point() const {
    // Scan edges ascending; the first edge owning a point of the set yields
    // the global minimum of the canonical (smallest incident edge, offset)
    // order. An interval reaching offset 0 forces the u bit, and if u's
    // smallest incident edge were earlier, that edge already produced a
    // candidate, so within the first productive edge candidates are complete.
    for (int e = 0; e < tree_->edge_count(); ++e) {
        const Edge& ed = tree_->edge(e);
        std::optional<std::pair<Rat, TreePoint>> best;
        auto consider = [&](const Rat& off, const TreePoint& p) {
            if (!best || off < best->first) best = {{off, p}};
        };
        if (vmember_[ed.u] && tree_->order_key(tree_->vertex_point(ed.u)).first == e)
            consider(Rat(0), tree_->vertex_point(ed.u));
        if (!ivals_[e].empty() && sgn(ivals_[e].front().lo) > 0)
            consider(ivals_[e].front().lo, tree_->point_on_edge(e, ivals_[e].front().lo));
        if (vmember_[ed.v] && tree_->order_key(tree_->vertex_point(ed.v)).first == e)
            consider(ed.length, tree_->vertex_point(ed.v));
        if (best) return best->second;
    }
    return std::nullopt;
}

std::vector<TreePoint> ClosedSet::interval_boundary_points() const {
    std::vector<TreePoint> out;
    for (int e = 0; e < tree_->edge_count(); ++e)
        for (const Interval& iv : ivals_[e]) {
            out.push_back(tree_->point_on_edge(e, iv.lo));
            out.push_back(tree_->point_on_edge(e, iv.hi));
        }
    return out;
}

Rat ClosedSet::distance_to(const TreePoint& p) const {
    if (empty()) throw ValidationError("distance to an empty set");
    if (contains(p)) return Rat(0);
    std::optional<Rat> best;
    auto consider = [&](const TreePoint& q) {
        Rat d = tree_->distance(p, q);
        if (!best || d < *best) best = d;
    };
    for (int v = 0; v < tree_->vertex_count(); ++v)
        if (vmember_[v]) consider(tree_->vertex_point(v));
    for (int e = 0; e < tree_->edge_count(); ++e)
        for (const Interval& iv : ivals_[e]) {
            // the nearest point of a closed edge interval is an interval end,
            // except when p sits on the same edge, where it is p clamped
            consider(tree_->point_on_edge(e, iv.lo));
            consider(tree_->point_on_edge(e, iv.hi));
            if (!p.is_vertex() && p.edge == e && iv.lo < p.offset && p.offset < iv.hi)
                consider(tree_->point_on_edge(e, p.offset));
        }
    return *best;
}

ClosedSet set_union(const ClosedSet& a, const ClosedSet& b) {
    if (a.tree_ != b.tree_) throw ValidationError("set operation across different trees");
    ClosedSet out = a;
    for (int v = 0; v < out.tree_->vertex_count(); ++v)
        if (b.vmember_[v]) out.vmember_[v] = 1;
    for (int e = 0; e < out.tree_->edge_count(); ++e)
        out.ivals_[e] = union_interval_lists(out.ivals_[e], b.ivals_[e]);
    return out;
}

ClosedSet set_intersection(const ClosedSet& a, const ClosedSet& b) {
    if (a.tree_ != b.tree_) throw ValidationError("set operation across different trees");
    ClosedSet out(*a.tree_);
    for (int v = 0; v < out.tree_->vertex_count(); ++v)
        out.vmember_[v] = a.vmember_[v] && b.vmember_[v];
    for (int e = 0; e < out.tree_->edge_count(); ++e) {
        const Edge& ed = out.tree_->edge(e);
        auto xs = intersect_interval_lists(a.ivals_[e], b.ivals_[e]);
        // end singletons collapse into the bits, which the bit-AND already set
        std::erase_if(xs, [&](const Interval& iv) {
            return iv.lo == iv.hi && (sgn(iv.lo) == 0 || iv.hi == ed.length);
        });
        out.ivals_[e] = std::move(xs);
    }
    return out;
}

}  // namespace treekkm

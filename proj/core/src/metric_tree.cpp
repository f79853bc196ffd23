#include "treekkm/metric_tree.hpp"

#include <algorithm>
#include <set>

#include "treekkm/errors.hpp"

namespace treekkm {

MetricTree::MetricTree(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 2) throw ValidationError("a metric tree needs at least two vertices");
    if (static_cast<int>(edges_.size()) != n_ - 1)
        throw ValidationError("a tree on " + std::to_string(n_) + " vertices needs exactly " +
                              std::to_string(n_ - 1) + " edges");
    adj_.assign(n_, {});
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_)
            throw ValidationError("edge " + std::to_string(e) + " references a missing vertex");
        if (ed.u == ed.v) throw ValidationError("edge " + std::to_string(e) + " is a self-loop");
        if (sgn(ed.length) <= 0)
            throw ValidationError("edge " + std::to_string(e) + " has non-positive length");
        adj_[ed.u].push_back({e, ed.v});
        adj_[ed.v].push_back({e, ed.u});
    }
    build_root_structures();
}

void MetricTree::build_root_structures() {
    parent_.assign(n_, -1);
    parent_edge_.assign(n_, -1);
    depth_.assign(n_, 0);
    tin_.assign(n_, -1);
    tout_.assign(n_, -1);
    root_dist_.assign(n_, Rat(0));

    int timer = 0;
    std::vector<std::pair<int, int>> stack;  // (vertex, next adjacency index)
    stack.push_back({0, 0});
    tin_[0] = timer++;
    parent_[0] = 0;
    int visited = 1;
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx < static_cast<int>(adj_[v].size())) {
            auto [e, w] = adj_[v][idx++];
            if (tin_[w] >= 0) {
                if (w == parent_[v] && e == parent_edge_[v]) continue;
                throw ValidationError("the edge set contains a cycle");
            }
            parent_[w] = v;
            parent_edge_[w] = e;
            depth_[w] = depth_[v] + 1;
            root_dist_[w] = root_dist_[v] + edges_[e].length;
            tin_[w] = timer++;
            ++visited;
            stack.push_back({w, 0});
        } else {
            tout_[v] = timer++;
            stack.pop_back();
        }
    }
    if (visited != n_) throw ValidationError("the edge set is not connected");

    log_ = 1;
    while ((1 << log_) < n_) ++log_;
    up_.assign(log_ + 1, std::vector<int>(n_));
    for (int v = 0; v < n_; ++v) up_[0][v] = parent_[v];
    for (int k = 1; k <= log_; ++k)
        for (int v = 0; v < n_; ++v) up_[k][v] = up_[k - 1][up_[k - 1][v]];
}

bool MetricTree::is_ancestor(int a, int v) const {
    return tin_[a] <= tin_[v] && tout_[v] <= tout_[a];
}

int MetricTree::kth_ancestor(int v, int k) const {
    for (int b = 0; k > 0; ++b, k >>= 1)
        if (k & 1) v = up_[b][v];
    return v;
}

int MetricTree::lca(int u, int v) const {
    if (is_ancestor(u, v)) return u;
    if (is_ancestor(v, u)) return v;
    for (int k = log_; k >= 0; --k)
        if (!is_ancestor(up_[k][u], v)) u = up_[k][u];
    return parent_[u];
}

Rat MetricTree::total_length() const {
    Rat s = 0;
    for (const Edge& e : edges_) s += e.length;
    return s;
}

TreePoint MetricTree::vertex_point(int v) const {
    if (v < 0 || v >= n_) throw ValidationError("vertex id out of range");
    TreePoint p;
    p.vertex = v;
    return p;
}

TreePoint MetricTree::point_on_edge(int e, const Rat& offset) const {
    if (e < 0 || e >= edge_count()) throw ValidationError("edge id out of range");
    const Edge& ed = edges_[e];
    if (sgn(offset) < 0 || offset > ed.length)
        throw ValidationError("offset outside [0, length] on edge " + std::to_string(e));
    if (sgn(offset) == 0) return vertex_point(ed.u);
    if (offset == ed.length) return vertex_point(ed.v);
    TreePoint p;
    p.edge = e;
    p.offset = offset;
    return p;
}

int MetricTree::find_edge(int u, int v) const {
    for (auto [e, w] : adj_[u])
        if (w == v) return e;
    return -1;
}

Rat MetricTree::vertex_distance(int u, int v) const {
    int a = lca(u, v);
    return root_dist_[u] + root_dist_[v] - 2 * root_dist_[a];
}

int MetricTree::next_hop(int from, int to) const { return next_hop_with_edge(from, to).first; }

std::pair<int, int> MetricTree::next_hop_with_edge(int from, int to) const {
    if (from == to) throw ValidationError("next_hop requires distinct vertices");
    if (!is_ancestor(from, to)) return {parent_[from], parent_edge_[from]};
    int child = kth_ancestor(to, depth_[to] - depth_[from] - 1);
    return {child, parent_edge_[child]};
}

int MetricTree::side_of_edge(int e, int w) const {
    const Edge& ed = edges_[e];
    if (w == ed.u) return 0;
    if (w == ed.v) return 1;
    return next_hop(ed.u, w) == ed.v ? 1 : 0;
}

Rat MetricTree::distance(const TreePoint& x, const TreePoint& y) const {
    if (x == y) return Rat(0);
    if (x.is_vertex() && y.is_vertex()) return vertex_distance(x.vertex, y.vertex);
    if (!x.is_vertex() && !y.is_vertex() && x.edge == y.edge) return abs(x.offset - y.offset);

    // Attachment costs to the endpoint vertices; the correct exit/entry pair
    // realizes the minimum, wrong pairs re-cross an edge and come out longer.
    auto ends = [&](const TreePoint& p) {
        std::vector<std::pair<int, Rat>> r;
        if (p.is_vertex()) {
            r.push_back({p.vertex, Rat(0)});
        } else {
            const Edge& ed = edges_[p.edge];
            r.push_back({ed.u, p.offset});
            r.push_back({ed.v, ed.length - p.offset});
        }
        return r;
    };
    std::optional<Rat> best;
    for (const auto& [a, ca] : ends(x))
        for (const auto& [b, cb] : ends(y)) {
            Rat d = ca + cb + (a == b ? Rat(0) : vertex_distance(a, b));
            if (!best || d < *best) best = d;
        }
    return *best;
}

TreePath MetricTree::path(const TreePoint& x, const TreePoint& y) const {
    TreePath out;
    out.length = 0;
    if (x == y) {
        out.waypoints = {x};
        return out;
    }
    if (!x.is_vertex() && !y.is_vertex() && x.edge == y.edge) {
        out.segs.push_back({x.edge, x.offset, y.offset});
        out.waypoints = {x, y};
        out.length = abs(x.offset - y.offset);
        return out;
    }

    // Side of x's edge (resp. y's edge) the other endpoint lies on; any vertex
    // of the other point's edge works as a probe because distinct edges lie
    // entirely on one side.
    auto probe_vertex = [&](const TreePoint& p) {
        return p.is_vertex() ? p.vertex : edges_[p.edge].u;
    };
    int ax, ay;
    std::optional<TreePath::Seg> pre, post;
    if (x.is_vertex()) {
        ax = x.vertex;
    } else {
        const Edge& ed = edges_[x.edge];
        int side = side_of_edge(x.edge, probe_vertex(y));
        ax = side == 0 ? ed.u : ed.v;
        pre = TreePath::Seg{x.edge, x.offset, side == 0 ? Rat(0) : ed.length};
    }
    if (y.is_vertex()) {
        ay = y.vertex;
    } else {
        const Edge& ed = edges_[y.edge];
        int side = side_of_edge(y.edge, probe_vertex(x));
        ay = side == 0 ? ed.u : ed.v;
        post = TreePath::Seg{y.edge, side == 0 ? Rat(0) : ed.length, y.offset};
    }

    if (!x.is_vertex()) out.waypoints.push_back(x);
    if (pre) out.segs.push_back(*pre);
    int cur = ax;
    out.waypoints.push_back(vertex_point(cur));
    while (cur != ay) {
        auto [nxt, e] = next_hop_with_edge(cur, ay);
        const Edge& ed = edges_[e];
        if (cur == ed.u)
            out.segs.push_back({e, Rat(0), ed.length});
        else
            out.segs.push_back({e, ed.length, Rat(0)});
        cur = nxt;
        out.waypoints.push_back(vertex_point(cur));
    }
    if (post) out.segs.push_back(*post);
    if (!y.is_vertex()) out.waypoints.push_back(y);

    for (const auto& s : out.segs) out.length += abs(s.to - s.from);
    return out;
}

TreePoint MetricTree::path_point_at(const TreePath& p, const Rat& s) const {
    if (sgn(s) < 0 || s > p.length) throw ValidationError("arc length outside the path");
    if (p.segs.empty()) return p.waypoints.front();
    Rat acc = 0;
    for (const auto& seg : p.segs) {
        Rat slen = abs(seg.to - seg.from);
        if (s <= acc + slen) {
            Rat rem = s - acc;
            Rat off = seg.from + (seg.to >= seg.from ? rem : -rem);
            return point_on_edge(seg.edge, off);
        }
        acc += slen;
    }
    // s == length, last segment end (reached only through exact arithmetic drift,
    // which cannot happen; keep a defensive return).
    const auto& seg = p.segs.back();
    return point_on_edge(seg.edge, seg.to);
}

int MetricTree::component_side(const TreePoint& cut, const TreePoint& probe) const {
    if (cut == probe) throw ValidationError("component_side requires probe != cut");
    if (cut.is_vertex()) {
        int c = cut.vertex;
        if (probe.is_vertex()) return next_hop(c, probe.vertex);
        const Edge& ed = edges_[probe.edge];
        if (ed.u == c) return ed.v;
        if (ed.v == c) return ed.u;
        return next_hop(c, ed.u);
    }
    if (!probe.is_vertex() && probe.edge == cut.edge) return probe.offset < cut.offset ? 0 : 1;
    int w = probe.is_vertex() ? probe.vertex : edges_[probe.edge].u;
    return side_of_edge(cut.edge, w);
}

SpannedSubtree MetricTree::subtree_spanned(const std::vector<int>& a) const {
    if (a.empty()) throw ValidationError("subtree_spanned requires a nonempty vertex set");
    std::vector<char> in_a(n_, 0);
    for (int v : a) {
        if (v < 0 || v >= n_) throw ValidationError("subtree_spanned: vertex id out of range");
        in_a[v] = 1;
    }

    // Repeatedly strip leaves outside the target set; what survives is the
    // minimal connected subgraph containing it.
    std::vector<int> deg(n_);
    for (int v = 0; v < n_; ++v) deg[v] = degree(v);
    std::vector<char> removed(n_, 0);
    std::vector<int> queue;
    for (int v = 0; v < n_; ++v)
        if (deg[v] == 1 && !in_a[v]) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        removed[v] = 1;
        for (auto [e, w] : adj_[v]) {
            (void)e;
            if (removed[w]) continue;
            if (--deg[w] == 1 && !in_a[w]) queue.push_back(w);
        }
    }

    SpannedSubtree out;
    std::vector<int> new_id(n_, -1);
    for (int v = 0; v < n_; ++v)
        if (!removed[v]) {
            new_id[v] = static_cast<int>(out.vertices.size());
            out.vertices.push_back(v);
        }
    std::vector<Edge> sub_edges;
    for (int e = 0; e < edge_count(); ++e)
        if (!removed[edges_[e].u] && !removed[edges_[e].v]) {
            out.edges.push_back(e);
            sub_edges.push_back({new_id[edges_[e].u], new_id[edges_[e].v], edges_[e].length});
        }
    if (out.vertices.size() >= 2)
        out.tree.emplace(static_cast<int>(out.vertices.size()), std::move(sub_edges));
    return out;
}

Segmentation MetricTree::segment(const Rat& delta, const std::vector<TreePoint>& must_include) const {
    if (sgn(delta) <= 0) throw ValidationError("segmentation size must be positive");

    std::vector<std::set<Rat>> forced(edge_count());
    for (const TreePoint& p : must_include) {
        if (p.is_vertex()) {
            if (p.vertex >= n_) throw ValidationError("must-include point outside the tree");
            continue;  // already a vertex of any refinement
        }
        if (p.edge < 0 || p.edge >= edge_count() || sgn(p.offset) <= 0 ||
            p.offset >= edges_[p.edge].length)
            throw ValidationError("must-include point is not a canonical tree point");
        forced[p.edge].insert(p.offset);
    }

    // Per edge: forced breakpoints, then each maximal piece split into the
    // smallest power-of-two count of equal parts strictly below delta.
    std::vector<std::vector<Rat>> cuts(edge_count());
    long total_parts = 0;
    for (int e = 0; e < edge_count(); ++e) {
        std::vector<Rat> stops;
        stops.push_back(Rat(0));
        for (const Rat& r : forced[e]) stops.push_back(r);
        stops.push_back(edges_[e].length);
        for (size_t i = 0; i + 1 < stops.size(); ++i) {
            const Rat lo = stops[i], hi = stops[i + 1];
            Rat len = hi - lo;
            long k = 1;
            while (len >= k * delta) {
                if (k > (1L << 40)) throw ValidationError("segmentation size is impractically small");
                k *= 2;
            }
            total_parts += k;
            if (total_parts > 4'000'000)
                throw ValidationError("segmentation would exceed the refinement safety cap");
            for (long j = 1; j < k; ++j) cuts[e].push_back(lo + len * Rat(j) / Rat(k));
            if (i + 1 < stops.size() - 1) cuts[e].push_back(hi);
        }
        std::sort(cuts[e].begin(), cuts[e].end());
    }

    int next_id = n_;
    std::vector<TreePoint> to_host;
    to_host.reserve(n_ + total_parts);
    for (int v = 0; v < n_; ++v) to_host.push_back(vertex_point(v));
    std::vector<std::vector<std::pair<Rat, int>>> breakpoints(edge_count());
    std::vector<Edge> refined_edges;
    refined_edges.reserve(total_parts);
    Rat size = 0;
    for (int e = 0; e < edge_count(); ++e) {
        breakpoints[e].reserve(cuts[e].size());
        for (const Rat& off : cuts[e]) {
            TreePoint p;
            p.edge = e;
            p.offset = off;
            to_host.push_back(p);
            breakpoints[e].push_back({off, next_id++});
        }
        int prev = edges_[e].u;
        Rat prev_off = 0;
        for (const auto& [off, id] : breakpoints[e]) {
            refined_edges.push_back({prev, id, off - prev_off});
            if (off - prev_off > size) size = off - prev_off;
            prev = id;
            prev_off = off;
        }
        refined_edges.push_back({prev, edges_[e].v, edges_[e].length - prev_off});
        if (edges_[e].length - prev_off > size) size = edges_[e].length - prev_off;
    }

    MetricTree refined(next_id, std::move(refined_edges));
    return Segmentation(this, std::move(refined), std::move(to_host), std::move(breakpoints),
                        std::move(size));
}

std::pair<int, Rat> MetricTree::order_key(const TreePoint& p) const {
    if (!p.is_vertex()) return {p.edge, p.offset};
    int best_e = -1;
    Rat best_off;
    for (auto [e, w] : adj_[p.vertex]) {
        (void)w;
        Rat off = edges_[e].u == p.vertex ? Rat(0) : edges_[e].length;
        if (best_e < 0 || e < best_e) {
            best_e = e;
            best_off = off;
        }
    }
    return {best_e, best_off};
}

bool MetricTree::point_less(const TreePoint& a, const TreePoint& b) const {
    auto ka = order_key(a), kb = order_key(b);
    if (ka.first != kb.first) return ka.first < kb.first;
    return ka.second < kb.second;
}

std::optional<int> Segmentation::refined_vertex_at(const TreePoint& host_point) const {
    if (host_point.is_vertex()) return host_point.vertex;
    const auto& bps = breakpoints_[host_point.edge];
    auto it = std::lower_bound(bps.begin(), bps.end(), host_point.offset,
                               [](const std::pair<Rat, int>& a, const Rat& off) { return a.first < off; });
    if (it != bps.end() && it->first == host_point.offset) return it->second;
    return std::nullopt;
}

int Segmentation::refined_hop_toward(int refined_vertex, int host_vertex) const {
    return refined_hop_toward_point(refined_vertex, host_->vertex_point(host_vertex));
}

int Segmentation::refined_hop_toward_point(int refined_vertex, const TreePoint& target) const {
    const MetricTree& h = *host_;
    const TreePoint& p = to_host_[refined_vertex];
    if (p == target) throw ValidationError("refined hop: already at the target point");

    // Step onto the host edge leading toward the target; the adjacent refined
    // vertex on that edge is the nearest breakpoint, or the far host vertex
    // when the edge has none. A target inside the first refined sub-edge
    // still lies in the stepped-into component, so the hop stays correct.
    if (p.is_vertex()) {
        int e;
        if (!target.is_vertex() &&
            (h.edge(target.edge).u == p.vertex || h.edge(target.edge).v == p.vertex)) {
            e = target.edge;
        } else {
            int probe = target.is_vertex() ? target.vertex : h.edge(target.edge).u;
            e = h.next_hop_with_edge(p.vertex, probe).second;
        }
        const auto& bps = breakpoints_[e];
        const Edge& ed = h.edge(e);
        if (ed.u == p.vertex) return bps.empty() ? ed.v : bps.front().second;
        return bps.empty() ? ed.u : bps.back().second;
    }

    const Edge& ed = h.edge(p.edge);
    int side;
    if (!target.is_vertex() && target.edge == p.edge)
        side = target.offset < p.offset ? 0 : 1;
    else
        side = h.side_of_edge(p.edge, target.is_vertex() ? target.vertex : h.edge(target.edge).u);
    const auto& bps = breakpoints_[p.edge];
    auto it = std::lower_bound(bps.begin(), bps.end(), p.offset,
                               [](const std::pair<Rat, int>& a, const Rat& off) { return a.first < off; });
    // `it` points at this breakpoint itself; neighbors sit on either side.
    if (side == 0) return it == bps.begin() ? ed.u : std::prev(it)->second;
    return std::next(it) == bps.end() ? ed.v : std::next(it)->second;
}

}  // namespace treekkm

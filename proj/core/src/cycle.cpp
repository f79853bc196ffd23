#include "treekkm/cycle.hpp"

#include <algorithm>

#include "treekkm/errors.hpp"
#include "treekkm/kkm.hpp"

namespace treekkm {

MetricCycle::MetricCycle(int n, std::vector<Rat> edge_lengths)
    : n_(n), lens_(std::move(edge_lengths)) {
    if (n_ < 3) throw ValidationError("a cycle needs at least 3 vertices");
    if (static_cast<int>(lens_.size()) != n_)
        throw ValidationError("expected one edge length per vertex");
    prefix_.reserve(n_ + 1);
    prefix_.push_back(Rat(0));
    for (int e = 0; e < n_; ++e) {
        if (sgn(lens_[e]) <= 0)
            throw ValidationError("edge " + std::to_string(e) + " has non-positive length");
        prefix_.push_back(prefix_.back() + lens_[e]);
    }
    total_ = prefix_.back();
}

TreePoint MetricCycle::vertex_point(int v) const {
    if (v < 0 || v >= n_) throw ValidationError("vertex id out of range");
    TreePoint p;
    p.vertex = v;
    return p;
}

TreePoint MetricCycle::point_on_edge(int e, const Rat& offset) const {
    if (e < 0 || e >= n_) throw ValidationError("edge id out of range");
    if (sgn(offset) < 0 || offset > lens_[e])
        throw ValidationError("offset outside [0, length] on edge " + std::to_string(e));
    if (sgn(offset) == 0) return vertex_point(e);
    if (offset == lens_[e]) return vertex_point((e + 1) % n_);
    TreePoint p;
    p.edge = e;
    p.offset = offset;
    return p;
}

Rat MetricCycle::position(const TreePoint& p) const {
    if (p.is_vertex()) {
        if (p.vertex < 0 || p.vertex >= n_) throw ValidationError("vertex id out of range");
        return prefix_[p.vertex];
    }
    if (p.edge < 0 || p.edge >= n_) throw ValidationError("edge id out of range");
    if (sgn(p.offset) <= 0 || p.offset >= lens_[p.edge])
        throw ValidationError("point not in canonical form");
    return prefix_[p.edge] + p.offset;
}

TreePoint MetricCycle::point_at_position(Rat s) const {
    Rat q = s / total_;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    s -= Rat(fl) * total_;
    // s in [0, total); prefix_ is strictly increasing
    auto it = std::upper_bound(prefix_.begin(), prefix_.end(), s);
    int e = static_cast<int>(it - prefix_.begin()) - 1;
    return point_on_edge(e, s - prefix_[e]);
}

Rat MetricCycle::distance(const TreePoint& x, const TreePoint& y) const {
    Rat f = forward_arc(x, y);
    return std::min(f, Rat(total_ - f));
}

Rat MetricCycle::forward_arc(const TreePoint& x, const TreePoint& y) const {
    Rat d = position(y) - position(x);
    if (sgn(d) < 0) d += total_;
    return d;
}

CycleSet::CycleSet(const MetricCycle& c)
    : cycle_(&c), vmember_(c.vertex_count(), 0), ivals_(c.edge_count()) {}

CycleSet CycleSet::whole(const MetricCycle& c) {
    CycleSet s(c);
    std::fill(s.vmember_.begin(), s.vmember_.end(), 1);
    for (int e = 0; e < c.edge_count(); ++e) s.ivals_[e].push_back({Rat(0), c.edge_length(e)});
    return s;
}

void CycleSet::add_vertex(int v) {
    if (v < 0 || v >= cycle_->vertex_count()) throw ValidationError("vertex id out of range");
    vmember_[v] = 1;
}

void CycleSet::add_interval(int e, const Rat& lo, const Rat& hi) {
    if (e < 0 || e >= cycle_->edge_count()) throw ValidationError("edge id out of range");
    const Rat& len = cycle_->edge_length(e);
    if (sgn(lo) < 0 || hi > len || lo > hi)
        throw ValidationError("interval outside [0, length] on edge " + std::to_string(e));
    if (sgn(lo) == 0) vmember_[e] = 1;
    if (hi == len) vmember_[(e + 1) % cycle_->vertex_count()] = 1;
    if (lo == hi && (sgn(lo) == 0 || hi == len)) return;  // end singleton lives in the bit

    auto& xs = ivals_[e];
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

void CycleSet::add_arc(const Rat& from, const Rat& to) {
    const Rat& total = cycle_->circumference();
    Rat a = cycle_->position(cycle_->point_at_position(from));
    Rat b = cycle_->position(cycle_->point_at_position(to));
    auto span = [&](const Rat& lo, const Rat& hi) {
        for (int e = 0; e < cycle_->edge_count(); ++e) {
            Rat plo = cycle_->position(cycle_->vertex_point(e));
            Rat phi = plo + cycle_->edge_length(e);
            Rat l = std::max(lo, plo), h = std::min(hi, phi);
            if (l <= h) add_interval(e, Rat(l - plo), Rat(h - plo));
        }
    };
    if (b >= a) {
        span(a, b);
    } else {
        span(a, total);
        span(Rat(0), b);
    }
}

bool CycleSet::empty() const {
    for (char b : vmember_)
        if (b) return false;
    for (const auto& xs : ivals_)
        if (!xs.empty()) return false;
    return true;
}

bool CycleSet::contains(const TreePoint& p) const {
    if (p.is_vertex()) return vmember_[p.vertex] != 0;
    return interval_list_contains(ivals_[p.edge], p.offset);
}

std::vector<Rat> CycleSet::boundary_positions() const {
    std::vector<Rat> out;
    for (int v = 0; v < cycle_->vertex_count(); ++v)
        if (vmember_[v]) out.push_back(cycle_->position(cycle_->vertex_point(v)));
    for (int e = 0; e < cycle_->edge_count(); ++e) {
        Rat base = cycle_->position(cycle_->vertex_point(e));
        for (const Interval& iv : ivals_[e]) {
            out.push_back(base + iv.lo);
            Rat hi = base + iv.hi;
            out.push_back(hi == cycle_->circumference() ? Rat(0) : hi);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

/// Whether the closed arc running forward from vertex a to vertex b lies in
/// the union of the two sets.
bool arc_covered(const MetricCycle& c, int a, int b, const CycleSet& sa, const CycleSet& sb) {
    int n = c.vertex_count();
    for (int v = a;; v = (v + 1) % n) {
        if (!sa.vertex_member(v) && !sb.vertex_member(v)) return false;
        if (v == b) break;
    }
    for (int e = a; e != b; e = (e + 1) % n) {
        auto u = union_interval_lists(sa.intervals_on(e), sb.intervals_on(e));
        if (u.size() != 1 || sgn(u[0].lo) != 0 || u[0].hi != c.edge_length(e)) return false;
    }
    return true;
}

}  // namespace

std::optional<std::string> cycle_cover_violation(const MetricCycle& c, const CycleKkmCover& k) {
    int n = c.vertex_count();
    if (static_cast<int>(k.sets.size()) != n)
        return "expected one set per vertex, got " + std::to_string(k.sets.size());
    for (int v = 0; v < n; ++v) {
        if (!(k.sets[v].cycle() == c))
            return "set " + std::to_string(v) + " is bound to a different cycle";
        if (!k.sets[v].vertex_member(v))
            return "vertex " + std::to_string(v) + " is not in its own set";
    }
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            if (!arc_covered(c, v, w, k.sets[v], k.sets[w]) &&
                !arc_covered(c, w, v, k.sets[w], k.sets[v]))
                return "neither arc between vertex " + std::to_string(v) + " and vertex " +
                       std::to_string(w) + " lies in the union of their sets";
    return std::nullopt;
}

bool validate_cycle_cover(const MetricCycle& c, const CycleKkmCover& k) {
    if (auto why = cycle_cover_violation(c, k)) throw ValidationError(*why);
    return true;
}

namespace {

std::vector<int> members_at(const CycleKkmCover& k, const TreePoint& p) {
    std::vector<int> out;
    for (size_t v = 0; v < k.sets.size(); ++v)
        if (k.sets[v].contains(p)) out.push_back(static_cast<int>(v));
    return out;
}

/// Positions where membership in some set can change, plus all vertices.
/// Sorted, distinct, starting at 0 (vertex 0's position).
std::vector<Rat> sweep_positions(const MetricCycle& c, const CycleKkmCover& k) {
    std::vector<Rat> ps;
    for (int v = 0; v < c.vertex_count(); ++v) ps.push_back(c.position(c.vertex_point(v)));
    for (const CycleSet& s : k.sets) {
        auto bs = s.boundary_positions();
        ps.insert(ps.end(), bs.begin(), bs.end());
    }
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

}  // namespace

MajorityResult majority_point(const MetricCycle& c, const CycleKkmCover& k, bool validate) {
    MajorityResult res;
    if (validate) {
        if (auto why = cycle_cover_violation(c, k)) res.warning = "cover is not valid: " + *why;
    }
    // depth is constant on each open arc between consecutive positions and
    // can only rise at the ends (the sets are closed), so scanning the
    // positions finds the true maximum; the earliest one wins
    bool have = false;
    for (const Rat& p : sweep_positions(c, k)) {
        TreePoint x = c.point_at_position(p);
        auto ms = members_at(k, x);
        if (!have || static_cast<int>(ms.size()) > res.depth) {
            have = true;
            res.point = x;
            res.members = std::move(ms);
            res.depth = static_cast<int>(res.members.size());
        }
    }
    return res;
}

ReductionResult tree_reduction_majority(const MetricCycle& c, const CycleKkmCover& k) {
    validate_cycle_cover(c, k);
    int n = c.vertex_count();
    int low = n / 2 - 1;

    // scan positions and the midpoints of the gaps between them; a point of
    // depth <= floor(n/2)-1 lies in some open gap or at a listed position
    ReductionResult res;
    auto ps = sweep_positions(c, k);
    std::optional<TreePoint> cut;
    for (size_t i = 0; i < ps.size() && !cut; ++i) {
        for (const Rat& cand :
             {ps[i], Rat((ps[i] + (i + 1 < ps.size() ? ps[i + 1] : c.circumference())) / 2)}) {
            TreePoint x = c.point_at_position(cand);
            int d = static_cast<int>(members_at(k, x).size());
            if (d <= low) {
                cut = x;
                res.cut_depth = d;
                break;
            }
        }
    }
    if (!cut) return res;
    res.applicable = true;
    res.cut = *cut;

    // removing the cut point and the interiors of its incident edges leaves
    // a path; its vertices keep their cyclic order starting after the cut
    int first_vertex, tree_vertices;
    if (cut->is_vertex()) {
        first_vertex = (cut->vertex + 1) % n;
        tree_vertices = n - 1;
    } else {
        first_vertex = (cut->edge + 1) % n;
        tree_vertices = n;
    }
    std::vector<int> to_cycle(tree_vertices);
    std::vector<int> to_tree(n, -1);
    for (int j = 0; j < tree_vertices; ++j) {
        to_cycle[j] = (first_vertex + j) % n;
        to_tree[to_cycle[j]] = j;
    }
    std::vector<Edge> edges;
    std::vector<int> edge_of(tree_vertices - 1);
    for (int j = 0; j + 1 < tree_vertices; ++j) {
        edge_of[j] = to_cycle[j];  // cycle edge from to_cycle[j] to to_cycle[j+1]
        edges.push_back({j, j + 1, c.edge_length(edge_of[j])});
    }
    MetricTree path(tree_vertices, edges);

    KkmCover f;
    for (int v = 0; v < n; ++v) {
        if (k.sets[v].contains(*cut)) continue;
        f.anchors.push_back(path.vertex_point(to_tree[v]));
        ClosedSet s(path);
        for (int j = 0; j < tree_vertices; ++j)
            if (k.sets[v].vertex_member(to_cycle[j])) s.add_vertex(j);
        for (int j = 0; j + 1 < tree_vertices; ++j)
            for (const Interval& iv : k.sets[v].intervals_on(edge_of[j]))
                s.add_interval(j, iv.lo, iv.hi);
        f.sets.push_back(std::move(s));
    }

    auto common = intersect_all(path, f, true).min_point();
    if (!common)
        throw ValidationError("reduction reached an empty intersection on the cut tree");
    TreePoint back = common->is_vertex()
                         ? c.vertex_point(to_cycle[common->vertex])
                         : c.point_on_edge(edge_of[common->edge], common->offset);
    res.point = back;
    res.members = members_at(k, back);
    return res;
}

VoteResult super_agreeable_majority(const CircularSociety& s) {
    if (!s.spectrum) throw ValidationError("the society has no spectrum");
    const MetricCycle& c = *s.spectrum;
    if (static_cast<int>(s.approvals.size()) != c.vertex_count())
        throw ValidationError("expected one voter per spectrum vertex");
    CycleKkmCover k{s.approvals};
    if (auto why = cycle_cover_violation(c, k))
        throw ValidationError("society is not super-agreeable: " + *why);
    MajorityResult m = majority_point(c, k, false);
    return {m.point, m.members};
}

}  // namespace treekkm

#include "treekkm/oracles.hpp"

#include <algorithm>

#include "treekkm/errors.hpp"

namespace treekkm {

namespace {

long pieces_for(const Rat& len, const Rat& resolution) {
    if (sgn(resolution) <= 0) throw ValidationError("resolution must be positive");
    Rat q = len / resolution;
    mpz_class k;
    mpz_cdiv_q(k.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!k.fits_slong_p() || k.get_si() > 1'000'000)
        throw ValidationError("grid resolution too fine for this instance");
    return std::max(1L, k.get_si());
}

}  // namespace

GridSample grid_sample(const MetricTree& t, const Rat& resolution) {
    GridSample g;
    g.resolution = resolution;
    for (int v = 0; v < t.vertex_count(); ++v) g.points.push_back(t.vertex_point(v));
    for (int e = 0; e < t.edge_count(); ++e) {
        const Rat& len = t.edge(e).length;
        long k = pieces_for(len, resolution);
        for (long j = 1; j < k; ++j) g.points.push_back(t.point_on_edge(e, len * j / k));
    }
    return g;
}

GridSample grid_sample(const MetricCycle& c, const Rat& resolution) {
    GridSample g;
    g.resolution = resolution;
    for (int v = 0; v < c.vertex_count(); ++v) g.points.push_back(c.vertex_point(v));
    for (int e = 0; e < c.edge_count(); ++e) {
        const Rat& len = c.edge_length(e);
        long k = pieces_for(len, resolution);
        for (long j = 1; j < k; ++j) g.points.push_back(c.point_on_edge(e, len * j / k));
    }
    return g;
}

std::vector<int> scan_fully_labelled(const MetricTree& t, const Labelling& l) {
    std::vector<int> out;
    for (int e = 0; e < t.edge_count(); ++e)
        if (edge_fully_labelled(t, l, e)) out.push_back(e);
    return out;
}

namespace {

template <class Set>
std::vector<TreePoint> audit(const Set& s, const std::function<bool(const TreePoint&)>& defines,
                             const GridSample& g) {
    std::vector<TreePoint> bad;
    for (const TreePoint& p : g.points)
        if (s.contains(p) != defines(p)) bad.push_back(p);
    return bad;
}

}  // namespace

std::vector<TreePoint> grid_membership_audit(const ClosedSet& s,
                                             const std::function<bool(const TreePoint&)>& defines,
                                             const GridSample& g) {
    return audit(s, defines, g);
}

std::vector<TreePoint> grid_membership_audit(const CycleSet& s,
                                             const std::function<bool(const TreePoint&)>& defines,
                                             const GridSample& g) {
    return audit(s, defines, g);
}

DiscreteFpWitnesses exhaustive_discrete_fp(const MetricTree& t, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != t.vertex_count())
        throw ValidationError("the map must give an image for every vertex");
    DiscreteFpWitnesses w;
    for (int v = 0; v < t.vertex_count(); ++v)
        if (f[v] == v) w.fixed_vertices.push_back(v);
    for (int e = 0; e < t.edge_count(); ++e) {
        int x = t.edge(e).u, y = t.edge(e).v;
        if (f[x] != x && f[y] != y && t.next_hop(x, f[x]) == y && t.next_hop(y, f[y]) == x)
            w.inverted_edges.push_back(e);
    }
    return w;
}

int grid_max_depth(const CycleKkmCover& k, const GridSample& g) {
    int best = 0;
    for (const TreePoint& p : g.points) {
        int d = 0;
        for (const CycleSet& s : k.sets)
            if (s.contains(p)) ++d;
        best = std::max(best, d);
    }
    return best;
}

}  // namespace treekkm

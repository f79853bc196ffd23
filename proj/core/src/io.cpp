#include "treekkm/io.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "treekkm/errors.hpp"

namespace treekkm {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("not valid structured text");
    return j;
}

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field: ") + key);
    return j.at(key);
}

int need_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

Rat need_rat(const json& j, const char* what) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a \"p/q\" string");
    return parse_rational(j.get<std::string>());
}

/// Keys of per-vertex objects are decimal vertex ids; every vertex must
/// appear exactly once.
int vertex_key(const std::string& key, int n) {
    if (key.empty() || key.size() > 9 ||
        key.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad vertex key: \"" + key + "\"");
    int v = std::stoi(key);
    if (v >= n) throw ParseError("vertex key out of range: " + key);
    return v;
}

MetricTree tree_from(const json& j) {
    int n = need_int(need(j, "vertices"), "vertices");
    const json& es = need(j, "edges");
    if (!es.is_array()) throw ParseError("edges must be an array");
    std::vector<Edge> edges;
    for (const json& e : es) {
        if (!e.is_array() || e.size() != 3) throw ParseError("each edge is [u, v, \"p/q\"]");
        edges.push_back({need_int(e[0], "edge endpoint"), need_int(e[1], "edge endpoint"),
                         need_rat(e[2], "edge length")});
    }
    return MetricTree(n, std::move(edges));
}

json tree_to(const MetricTree& t) {
    json es = json::array();
    for (int e = 0; e < t.edge_count(); ++e) {
        const Edge& ed = t.edge(e);
        es.push_back({ed.u, ed.v, rational_str(ed.length)});
    }
    return {{"vertices", t.vertex_count()}, {"edges", es}};
}

/// Shared for trees and cycles: resolve() maps the listed endpoint pair to
/// (edge id, reversed) or returns false.
template <class Resolve>
TreePoint point_from(const json& j, const Resolve& resolve,
                     const std::function<TreePoint(int)>& vertex,
                     const std::function<TreePoint(int, const Rat&)>& on_edge,
                     const std::function<const Rat&(int)>& length) {
    if (!j.is_object()) throw ParseError("a point is an object");
    if (j.contains("vertex")) return vertex(need_int(j.at("vertex"), "vertex"));
    const json& ep = need(j, "edge");
    if (!ep.is_array() || ep.size() != 2) throw ParseError("edge endpoints are [u, v]");
    int u = need_int(ep[0], "edge endpoint"), v = need_int(ep[1], "edge endpoint");
    int e;
    bool reversed;
    if (!resolve(u, v, e, reversed))
        throw ParseError("no edge between " + std::to_string(u) + " and " + std::to_string(v));
    Rat off = need_rat(need(j, "offset"), "offset");
    return on_edge(e, reversed ? Rat(length(e) - off) : off);
}

TreePoint tree_point_from(const json& j, const MetricTree& t) {
    return point_from(
        j,
        [&](int u, int v, int& e, bool& rev) {
            if (u < 0 || v < 0 || u >= t.vertex_count() || v >= t.vertex_count()) return false;
            e = t.find_edge(u, v);
            if (e < 0) return false;
            rev = t.edge(e).u != u;
            return true;
        },
        [&](int v) { return t.vertex_point(v); },
        [&](int e, const Rat& o) { return t.point_on_edge(e, o); },
        [&](int e) -> const Rat& { return t.edge(e).length; });
}

TreePoint cycle_point_from(const json& j, const MetricCycle& c) {
    return point_from(
        j,
        [&](int u, int v, int& e, bool& rev) {
            int n = c.vertex_count();
            if (u < 0 || v < 0 || u >= n || v >= n) return false;
            if ((u + 1) % n == v) {
                e = u;
                rev = false;
            } else if ((v + 1) % n == u) {
                e = v;
                rev = true;
            } else {
                return false;
            }
            return true;
        },
        [&](int v) { return c.vertex_point(v); },
        [&](int e, const Rat& o) { return c.point_on_edge(e, o); },
        [&](int e) -> const Rat& { return c.edge_length(e); });
}

json tree_point_to(const MetricTree& t, const TreePoint& p) {
    if (p.is_vertex()) return {{"vertex", p.vertex}};
    const Edge& ed = t.edge(p.edge);
    return {{"edge", {ed.u, ed.v}}, {"offset", rational_str(p.offset)}};
}

json cycle_point_to(const MetricCycle& c, const TreePoint& p) {
    if (p.is_vertex()) return {{"vertex", p.vertex}};
    return {{"edge", {p.edge, (p.edge + 1) % c.vertex_count()}},
            {"offset", rational_str(p.offset)}};
}

std::vector<int> id_list(const json& j, int n, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const json& x : j) {
        int v = need_int(x, what);
        if (v < 0 || v >= n) throw ParseError(std::string(what) + " out of range");
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Fills one set from {"intervals"/"arcs": [[e, lo, hi]...], "vertices": [ids]}.
template <class Set>
void fill_set(Set& s, const json& j, const char* ival_key, int edges, int vertices) {
    if (j.contains(ival_key)) {
        const json& is = j.at(ival_key);
        if (!is.is_array()) throw ParseError(std::string(ival_key) + " must be an array");
        for (const json& iv : is) {
            if (!iv.is_array() || iv.size() != 3)
                throw ParseError(std::string("each of ") + ival_key +
                                 " is [edge, \"p/q\", \"p/q\"]");
            int e = need_int(iv[0], "edge id");
            if (e < 0 || e >= edges) throw ParseError("edge id out of range");
            s.add_interval(e, need_rat(iv[1], "interval end"), need_rat(iv[2], "interval end"));
        }
    }
    if (j.contains("vertices"))
        for (int v : id_list(j.at("vertices"), vertices, "vertex id")) s.add_vertex(v);
}

template <class Set>
json set_to(const Set& s, const char* ival_key, int edges, int vertices) {
    json ivs = json::array();
    for (int e = 0; e < edges; ++e)
        for (const Interval& iv : s.intervals_on(e))
            ivs.push_back({e, rational_str(iv.lo), rational_str(iv.hi)});
    json vs = json::array();
    for (int v = 0; v < vertices; ++v)
        if (s.vertex_member(v)) vs.push_back(v);
    return {{ival_key, ivs}, {"vertices", vs}};
}

json cycle_to(const MetricCycle& c) {
    json lens = json::array();
    for (int e = 0; e < c.edge_count(); ++e) lens.push_back(rational_str(c.edge_length(e)));
    return {{"n", c.vertex_count()}, {"edge_lengths", lens}};
}

MetricCycle cycle_from(const json& j) {
    int n = need_int(need(j, "n"), "n");
    const json& ls = need(j, "edge_lengths");
    if (!ls.is_array()) throw ParseError("edge_lengths must be an array");
    std::vector<Rat> lens;
    for (const json& l : ls) lens.push_back(need_rat(l, "edge length"));
    return MetricCycle(n, std::move(lens));
}

}  // namespace

MetricTree parse_tree(const std::string& text) { return tree_from(parse_or_throw(text)); }

std::string tree_json(const MetricTree& t) { return tree_to(t).dump(2); }

TreePoint parse_point(const std::string& text, const MetricTree& t) {
    return tree_point_from(parse_or_throw(text), t);
}

std::string point_json(const MetricTree& t, const TreePoint& p) {
    return tree_point_to(t, p).dump(2);
}

TreePoint parse_cycle_point(const std::string& text, const MetricCycle& c) {
    return cycle_point_from(parse_or_throw(text), c);
}

std::string cycle_point_json(const MetricCycle& c, const TreePoint& p) {
    return cycle_point_to(c, p).dump(2);
}

Labelling parse_labelling(const std::string& text, const MetricTree& t) {
    json j = parse_or_throw(text);
    Labelling l;
    l.label_set = id_list(need(j, "A"), t.vertex_count(), "label id");
    const json& ls = need(j, "labels");
    if (!ls.is_object()) throw ParseError("labels must map vertex keys to id arrays");
    l.labels.resize(t.vertex_count());
    std::vector<char> seen(t.vertex_count(), 0);
    for (const auto& [key, val] : ls.items()) {
        int v = vertex_key(key, t.vertex_count());
        if (seen[v]) throw ParseError("vertex " + key + " labelled twice");
        seen[v] = 1;
        l.labels[v] = id_list(val, t.vertex_count(), "label id");
    }
    for (int v = 0; v < t.vertex_count(); ++v)
        if (!seen[v]) throw ParseError("vertex " + std::to_string(v) + " has no label entry");
    return l;
}

std::string labelling_json(const MetricTree& t, const Labelling& l) {
    json ls = json::object();
    for (int v = 0; v < t.vertex_count() && v < static_cast<int>(l.labels.size()); ++v)
        ls[std::to_string(v)] = l.labels[v];
    return json{{"A", l.label_set}, {"labels", ls}}.dump(2);
}

std::vector<int> parse_vertex_map(const std::string& text, const MetricTree& t) {
    json j = parse_or_throw(text);
    const json& ms = need(j, "map");
    if (!ms.is_object()) throw ParseError("map must map vertex keys to vertex ids");
    std::vector<int> f(t.vertex_count(), -1);
    for (const auto& [key, val] : ms.items()) {
        int v = vertex_key(key, t.vertex_count());
        if (f[v] >= 0) throw ParseError("vertex " + key + " mapped twice");
        int w = need_int(val, "image vertex");
        if (w < 0 || w >= t.vertex_count()) throw ParseError("image vertex out of range");
        f[v] = w;
    }
    for (int v = 0; v < t.vertex_count(); ++v)
        if (f[v] < 0) throw ParseError("vertex " + std::to_string(v) + " has no image");
    return f;
}

std::string vertex_map_json(const MetricTree& t, const std::vector<int>& f) {
    json ms = json::object();
    for (int v = 0; v < t.vertex_count() && v < static_cast<int>(f.size()); ++v)
        ms[std::to_string(v)] = f[v];
    return json{{"map", ms}}.dump(2);
}

TreeCoverInstance parse_tree_cover(const std::string& text) {
    json j = parse_or_throw(text);
    TreeCoverInstance inst;
    inst.tree = std::make_shared<MetricTree>(tree_from(need(j, "tree")));
    const MetricTree& t = *inst.tree;
    const json& as = need(j, "anchors");
    if (!as.is_array() || as.empty()) throw ParseError("anchors must be a nonempty array");
    for (const json& a : as) inst.cover.anchors.push_back(tree_point_from(a, t));
    const json& ss = need(j, "sets");
    int k = static_cast<int>(inst.cover.anchors.size());
    if (!ss.is_array() || static_cast<int>(ss.size()) != k)
        throw ParseError("expected one set per anchor");
    inst.cover.sets.assign(k, ClosedSet(t));
    std::vector<char> seen(k, 0);
    for (const json& sj : ss) {
        int i = need_int(need(sj, "anchor"), "anchor index");
        if (i < 0 || i >= k) throw ParseError("anchor index out of range");
        if (seen[i]) throw ParseError("anchor " + std::to_string(i) + " has two sets");
        seen[i] = 1;
        fill_set(inst.cover.sets[i], sj, "intervals", t.edge_count(), t.vertex_count());
    }
    return inst;
}

std::string tree_cover_json(const MetricTree& t, const KkmCover& c) {
    json as = json::array();
    for (const TreePoint& a : c.anchors) as.push_back(tree_point_to(t, a));
    json ss = json::array();
    for (size_t i = 0; i < c.sets.size(); ++i) {
        json sj = set_to(c.sets[i], "intervals", t.edge_count(), t.vertex_count());
        sj["anchor"] = static_cast<int>(i);
        ss.push_back(std::move(sj));
    }
    return json{{"tree", tree_to(t)}, {"anchors", as}, {"sets", ss}}.dump(2);
}

PlMapInstance parse_pl_map(const std::string& text) {
    json j = parse_or_throw(text);
    PlMapInstance inst;
    inst.tree = std::make_shared<MetricTree>(tree_from(need(j, "tree")));
    const MetricTree& t = *inst.tree;
    const json& is = need(j, "images");
    if (!is.is_object()) throw ParseError("images must map vertex keys to points");
    inst.map.images.assign(t.vertex_count(), TreePoint{});
    std::vector<char> seen(t.vertex_count(), 0);
    for (const auto& [key, val] : is.items()) {
        int v = vertex_key(key, t.vertex_count());
        if (seen[v]) throw ParseError("vertex " + key + " has two images");
        seen[v] = 1;
        inst.map.images[v] = tree_point_from(val, t);
    }
    for (int v = 0; v < t.vertex_count(); ++v)
        if (!seen[v]) throw ParseError("vertex " + std::to_string(v) + " has no image");
    return inst;
}

std::string pl_map_json(const MetricTree& t, const PlMap& m) {
    json is = json::object();
    for (int v = 0; v < t.vertex_count() && v < static_cast<int>(m.images.size()); ++v)
        is[std::to_string(v)] = tree_point_to(t, m.images[v]);
    return json{{"tree", tree_to(t)}, {"images", is}}.dump(2);
}

MetricCycle parse_cycle(const std::string& text) { return cycle_from(parse_or_throw(text)); }

std::string cycle_json(const MetricCycle& c) { return cycle_to(c).dump(2); }

CycleCoverInstance parse_cycle_cover(const std::string& text) {
    json j = parse_or_throw(text);
    CycleCoverInstance inst;
    inst.cycle = std::make_shared<MetricCycle>(cycle_from(need(j, "cycle")));
    const MetricCycle& c = *inst.cycle;
    const json& ss = need(j, "sets");
    int n = c.vertex_count();
    if (!ss.is_array() || static_cast<int>(ss.size()) != n)
        throw ParseError("expected one set per vertex");
    inst.cover.sets.assign(n, CycleSet(c));
    std::vector<char> seen(n, 0);
    for (const json& sj : ss) {
        int v = need_int(need(sj, "vertex"), "set vertex");
        if (v < 0 || v >= n) throw ParseError("set vertex out of range");
        if (seen[v]) throw ParseError("vertex " + std::to_string(v) + " has two sets");
        seen[v] = 1;
        fill_set(inst.cover.sets[v], sj, "arcs", n, n);
    }
    return inst;
}

std::string cycle_cover_json(const MetricCycle& c, const CycleKkmCover& k) {
    json ss = json::array();
    for (size_t v = 0; v < k.sets.size(); ++v) {
        json sj = set_to(k.sets[v], "arcs", c.edge_count(), c.vertex_count());
        sj["vertex"] = static_cast<int>(v);
        ss.push_back(std::move(sj));
    }
    return json{{"cycle", cycle_to(c)}, {"sets", ss}}.dump(2);
}

CircularSociety parse_society(const std::string& text) {
    json j = parse_or_throw(text);
    CircularSociety s;
    s.spectrum = std::make_shared<MetricCycle>(cycle_from(need(j, "cycle")));
    const json& vs = need(j, "voters");
    if (!vs.is_array()) throw ParseError("voters must be an array");
    for (const json& vj : vs) {
        CycleSet a(*s.spectrum);
        fill_set(a, vj, "arcs", s.spectrum->edge_count(), s.spectrum->vertex_count());
        s.approvals.push_back(std::move(a));
    }
    return s;
}

std::string society_json(const CircularSociety& s) {
    const MetricCycle& c = *s.spectrum;
    json vs = json::array();
    for (const CycleSet& a : s.approvals)
        vs.push_back(set_to(a, "arcs", c.edge_count(), c.vertex_count()));
    return json{{"cycle", cycle_to(c)}, {"voters", vs}}.dump(2);
}

uint64_t fnv1a64(const std::string& text) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char b : text) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_hex(const std::string& text) {
    uint64_t h = fnv1a64(text);
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace treekkm

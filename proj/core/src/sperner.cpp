#include "treekkm/sperner.hpp"

#include <algorithm>

#include "treekkm/errors.hpp"

namespace treekkm {

namespace {

bool sorted_unique(const std::vector<int>& xs) {
    for (size_t i = 1; i < xs.size(); ++i)
        if (xs[i - 1] >= xs[i]) return false;
    return true;
}

bool has(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<int> missing_labels(const Labelling& l, int v) {
    std::vector<int> out;
    std::set_difference(l.label_set.begin(), l.label_set.end(), l.labels[v].begin(),
                        l.labels[v].end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::optional<std::string> labelling_violation(const MetricTree& t, const Labelling& l) {
    if (l.label_set.empty()) return "the label set is empty";
    if (!sorted_unique(l.label_set)) return "the label set is not sorted without duplicates";
    if (l.label_set.front() < 0 || l.label_set.back() >= t.vertex_count())
        return "the label set references a missing vertex";
    if (static_cast<int>(l.labels.size()) != t.vertex_count())
        return "the labelling must assign a (possibly empty) set to every vertex";
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (!sorted_unique(l.labels[v]))
            return "labels of vertex " + std::to_string(v) + " are not sorted without duplicates";
        for (int a : l.labels[v])
            if (!has(l.label_set, a))
                return "vertex " + std::to_string(v) + " carries " + std::to_string(a) +
                       ", which is not in the label set";
    }
    for (int a : l.label_set)
        if (!has(l.labels[a], a))
            return "label vertex " + std::to_string(a) + " does not carry its own label";
    for (int v = 0; v < t.vertex_count(); ++v) {
        std::vector<int> miss = missing_labels(l, v);
        if (miss.empty()) continue;
        if (std::find(miss.begin(), miss.end(), v) != miss.end())
            return "vertex " + std::to_string(v) +
                   " misses its own label, which cannot lie in a component away from it";
        int side = t.next_hop(v, miss.front());
        for (int m : miss)
            if (t.next_hop(v, m) != side)
                return "vertex " + std::to_string(v) + " misses labels " +
                       std::to_string(miss.front()) + " and " + std::to_string(m) +
                       " in different components";
    }
    return std::nullopt;
}

bool is_proper(const MetricTree& t, const Labelling& l) { return !labelling_violation(t, l); }

int successor(const MetricTree& t, const Labelling& l, int v) {
    std::vector<int> miss = missing_labels(l, v);
    if (miss.empty()) return -1;
    if (std::find(miss.begin(), miss.end(), v) != miss.end())
        throw ValidationError("improper labelling: vertex " + std::to_string(v) +
                              " misses its own label");
    int side = t.next_hop(v, miss.front());
    for (int m : miss)
        if (t.next_hop(v, m) != side)
            throw ValidationError("improper labelling: vertex " + std::to_string(v) +
                                  " misses labels " + std::to_string(miss.front()) + " and " +
                                  std::to_string(m) + " in different components");
    return side;
}

bool edge_fully_labelled(const MetricTree& t, const Labelling& l, int e) {
    const Edge& ed = t.edge(e);
    for (int a : l.label_set)
        if (!has(l.labels[ed.u], a) && !has(l.labels[ed.v], a)) return false;
    return true;
}

WalkOutcome successor_walk(int vertex_count, int start, const std::function<int(int)>& succ) {
    WalkOutcome out;
    int cap = 2 * vertex_count + 4;
    int prev = -1, cur = start;
    out.walk.push_back(cur);
    for (int step = 0; step < cap; ++step) {
        int nxt = succ(cur);
        if (nxt < 0) {
            out.stopped_at_vertex = true;
            return out;
        }
        if (nxt == prev) return out;  // the edge walked both ways settles the walk
        out.walk.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    throw ValidationError("successor walk exceeded its step bound; the labelling is not proper");
}

SpernerResult find_fully_labelled_edge(const MetricTree& t, const Labelling& l, int start) {
    if (static_cast<int>(l.labels.size()) != t.vertex_count())
        throw ValidationError("the labelling must assign a set to every vertex");
    for (int v = 0; v < t.vertex_count(); ++v)
        if (l.labels[v].size() == l.label_set.size() && l.labels[v] == l.label_set)
            return {t.incident(v).front().first, {v}};

    if (start < 0) start = 0;
    WalkOutcome w =
        successor_walk(t.vertex_count(), start, [&](int v) { return successor(t, l, v); });
    // no vertex carries every label, so the walk settled on a two-cycle
    int x = w.walk[w.walk.size() - 2], y = w.walk.back();
    SpernerResult r;
    r.edge = t.find_edge(x, y);
    r.walk = std::move(w.walk);
    return r;
}

Labelling labelling_from_vertex_map(const MetricTree& t, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != t.vertex_count())
        throw ValidationError("the map must send every vertex somewhere");
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (f[v] < 0 || f[v] >= t.vertex_count())
            throw ValidationError("the map sends vertex " + std::to_string(v) +
                                  " outside the tree");
        if (f[v] == v)
            throw ValidationError("vertex " + std::to_string(v) +
                                  " is fixed; the induced labelling needs a map with no fixed vertex");
    }
    Labelling l;
    l.label_set.resize(t.vertex_count());
    for (int v = 0; v < t.vertex_count(); ++v) l.label_set[v] = v;
    l.labels.assign(t.vertex_count(), {});
    for (int v = 0; v < t.vertex_count(); ++v) {
        int image_side = t.next_hop(v, f[v]);
        for (int w = 0; w < t.vertex_count(); ++w)
            if (w == v || t.next_hop(v, w) != image_side) l.labels[v].push_back(w);
    }
    return l;
}

std::vector<int> vertex_map_from_labelling(const MetricTree& t, const Labelling& l) {
    if (static_cast<int>(l.label_set.size()) != t.vertex_count())
        throw ValidationError("recovering a map needs the full vertex set as labels");
    std::vector<int> f(t.vertex_count());
    for (int v = 0; v < t.vertex_count(); ++v) {
        std::vector<int> miss = missing_labels(l, v);
        if (miss.empty())
            throw ValidationError("vertex " + std::to_string(v) +
                                  " carries every label; no map step can be recovered");
        f[v] = miss.front();
    }
    return f;
}

InvertedEdgeResult inverted_edge(const MetricTree& t, const std::vector<int>& f, int start) {
    if (static_cast<int>(f.size()) != t.vertex_count())
        throw ValidationError("the map must send every vertex somewhere");
    for (int v = 0; v < t.vertex_count(); ++v)
        if (f[v] == v)
            throw ValidationError("vertex " + std::to_string(v) +
                                  " is fixed; an inverted edge needs a map with no fixed vertex");
    if (start < 0) start = 0;
    // Walking toward the image settles on a two-cycle {x, y} with f(x) past y
    // and f(y) past x, because each step's target lies strictly on the side
    // stepped into.
    WalkOutcome w =
        successor_walk(t.vertex_count(), start, [&](int v) { return t.next_hop(v, f[v]); });
    int x = w.walk[w.walk.size() - 2], y = w.walk.back();
    InvertedEdgeResult r;
    r.edge = t.find_edge(x, y);
    r.walk = std::move(w.walk);
    return r;
}

}  // namespace treekkm

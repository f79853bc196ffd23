#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "treekkm/rational.hpp"

namespace treekkm {

/*
 * A finite metric tree: at least two vertices, positive rational edge lengths,
 * and the path metric on the realized space (every edge realized as a closed
 * interval of its length). Immutable after construction; safe for concurrent
 * read-only use.
 */

/// A point of the realized tree. Exactly one representation holds:
/// either a vertex, or a strictly interior point of an edge at `offset`
/// from the edge's first endpoint. Offsets 0 and length(e) canonicalize
/// to the vertex form, so equality of points is equality of fields.
struct TreePoint {
    int vertex = -1;
    int edge = -1;
    Rat offset;

    bool is_vertex() const { return vertex >= 0; }

    friend bool operator==(const TreePoint& a, const TreePoint& b) {
        return a.vertex == b.vertex && a.edge == b.edge && a.offset == b.offset;
    }
    friend bool operator!=(const TreePoint& a, const TreePoint& b) { return !(a == b); }
};

struct Edge {
    int u = -1;  // designated first endpoint; offsets on the edge are measured from u
    int v = -1;
    Rat length;
};

/// Short human-readable form for diagnostics: "vertex 3" or "edge 1 at 2/5".
inline std::string point_text(const TreePoint& p) {
    if (p.is_vertex()) return "vertex " + std::to_string(p.vertex);
    return "edge " + std::to_string(p.edge) + " at " + rational_str(p.offset);
}

/// A path between two points: the ordered waypoints (the endpoints plus every
/// vertex traversed, in travel order) and the directed per-edge segments.
/// A degenerate path has one waypoint, no segments, and length zero.
struct TreePath {
    struct Seg {
        int edge = -1;
        Rat from;  // travel runs from offset `from` to offset `to` on `edge`
        Rat to;
    };
    std::vector<TreePoint> waypoints;
    std::vector<Seg> segs;
    Rat length;
};

struct SpannedSubtree;
class Segmentation;

class MetricTree {
public:
    /// Validates and builds. Requires n >= 2, every length positive, and the
    /// edge set to form a tree on vertices 0..n-1. Throws ValidationError.
    MetricTree(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Incident (edge id, neighbor) pairs, ascending by edge id.
    const std::vector<std::pair<int, int>>& incident(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool is_leaf(int v) const { return degree(v) == 1; }
    Rat total_length() const;

    TreePoint vertex_point(int v) const;
    /// Canonicalizes: offset 0 yields the first endpoint, offset length(e) the
    /// second. Throws ValidationError for offsets outside [0, length].
    TreePoint point_on_edge(int e, const Rat& offset) const;
    /// Edge between two adjacent vertices, -1 if none.
    int find_edge(int u, int v) const;

    Rat vertex_distance(int u, int v) const;
    Rat distance(const TreePoint& x, const TreePoint& y) const;
    TreePath path(const TreePoint& x, const TreePoint& y) const;
    /// Point at exact arc length s from the start of the path.
    TreePoint path_point_at(const TreePath& p, const Rat& s) const;

    /// Neighbor of `from` on the path toward `to`; requires from != to.
    int next_hop(int from, int to) const;
    std::pair<int, int> next_hop_with_edge(int from, int to) const;  // (neighbor, edge)
    int lca(int u, int v) const;

    /// Which side of edge e vertex w lies on: 0 for the first endpoint's side,
    /// 1 for the second's. Endpoints answer for themselves.
    int side_of_edge(int e, int w) const;

    /// Component id of `probe` in the space minus `cut`. Ids are comparable
    /// only for a fixed cut: equal ids mean the path between the probes avoids
    /// the cut point. Requires probe != cut. For a vertex cut the id is the
    /// neighbor vertex on the probe's side; for an edge-interior cut it is 0/1.
    int component_side(const TreePoint& cut, const TreePoint& probe) const;

    /// Minimal subtree containing every vertex of `a` (nonempty, deduped).
    SpannedSubtree subtree_spanned(const std::vector<int>& a) const;

    /// Subdivision of size strictly below delta containing every must-include
    /// point as a vertex. Each maximal piece between forced breakpoints is cut
    /// into the smallest power-of-two count of equal parts below delta.
    Segmentation segment(const Rat& delta, const std::vector<TreePoint>& must_include) const;

    /// Deterministic total order on canonical points: a point's key is its
    /// smallest incident edge id, then its offset on that edge.
    std::pair<int, Rat> order_key(const TreePoint& p) const;
    bool point_less(const TreePoint& a, const TreePoint& b) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;

    // rooted at vertex 0
    std::vector<int> parent_, parent_edge_, depth_, tin_, tout_;
    std::vector<Rat> root_dist_;
    std::vector<std::vector<int>> up_;  // binary lifting, up_[k][v]
    int log_ = 1;

    void build_root_structures();
    bool is_ancestor(int a, int v) const;
    int kth_ancestor(int v, int k) const;
};

struct SpannedSubtree {
    std::vector<int> vertices;  // host vertex ids, ascending
    std::vector<int> edges;     // host edge ids, ascending
    // Rebuilt tree when the span has at least two vertices; new vertex i is
    // host vertex vertices[i], new edge j is host edge edges[j].
    std::optional<MetricTree> tree;
};

/// Refinement of a host tree produced by MetricTree::segment. Host vertices
/// keep their ids in the refined tree; subdivision points get fresh ids in
/// (host edge, offset) order. Holds a pointer to the host tree, which must
/// outlive the segmentation.
class Segmentation {
public:
    const MetricTree& refined() const { return refined_; }
    const MetricTree& host() const { return *host_; }
    /// Largest sub-edge length; strictly below the requested delta.
    const Rat& size() const { return size_; }

    /// Host point of a refined vertex.
    const TreePoint& host_point(int refined_vertex) const { return to_host_[refined_vertex]; }
    int host_vertex_count() const { return host_vertex_count_; }

    /// Refined vertex sitting at a host point, if the point is a vertex of
    /// the refinement.
    std::optional<int> refined_vertex_at(const TreePoint& host_point) const;

    /// Neighbor of a refined vertex in the direction of a host vertex,
    /// computed in host coordinates. Requires the refined vertex not to sit
    /// at the target host vertex.
    int refined_hop_toward(int refined_vertex, int host_vertex) const;
    /// Same, toward an arbitrary host point distinct from the refined
    /// vertex's own position.
    int refined_hop_toward_point(int refined_vertex, const TreePoint& host_target) const;

private:
    friend class MetricTree;
    Segmentation(const MetricTree* host, MetricTree refined, std::vector<TreePoint> to_host,
                 std::vector<std::vector<std::pair<Rat, int>>> breakpoints, Rat size)
        : host_(host),
          refined_(std::move(refined)),
          to_host_(std::move(to_host)),
          breakpoints_(std::move(breakpoints)),
          host_vertex_count_(host->vertex_count()),
          size_(std::move(size)) {}

    const MetricTree* host_;
    MetricTree refined_;
    std::vector<TreePoint> to_host_;
    // per host edge: interior breakpoints as (offset, refined id), ascending
    std::vector<std::vector<std::pair<Rat, int>>> breakpoints_;
    int host_vertex_count_;
    Rat size_;
};

}  // namespace treekkm

#pragma once

#include <optional>
#include <vector>

#include "treekkm/metric_tree.hpp"

namespace treekkm {

/// Closed interval [lo, hi] of offsets, lo <= hi.
struct Interval {
    Rat lo, hi;

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Canonicalize an arbitrary interval list: sorted, overlapping or touching
/// intervals merged, so the result is pairwise disjoint with positive gaps.
std::vector<Interval> merge_intervals(std::vector<Interval> xs);
std::vector<Interval> union_interval_lists(const std::vector<Interval>& a,
                                           const std::vector<Interval>& b);
/// Both inputs must be canonical; the result is canonical.
std::vector<Interval> intersect_interval_lists(const std::vector<Interval>& a,
                                               const std::vector<Interval>& b);
bool interval_list_contains(const std::vector<Interval>& xs, const Rat& x);

/*
 * A closed subset of the realized tree, kept in canonical form at all times:
 * vertex membership bits plus, per edge, a sorted list of pairwise
 * non-touching closed offset intervals within [0, length]. An interval
 * reaching offset 0 or length implies the corresponding endpoint bit (the
 * boundary point of the edge IS that vertex), and degenerate intervals at
 * the ends are stored as bits alone. Degenerate singletons strictly inside
 * an edge are kept as intervals.
 */
class ClosedSet {
public:
    explicit ClosedSet(const MetricTree& t);

    static ClosedSet whole(const MetricTree& t);
    static ClosedSet point(const MetricTree& t, const TreePoint& p);
    static ClosedSet path_between(const MetricTree& t, const TreePoint& x, const TreePoint& y);

    const MetricTree& tree() const { return *tree_; }
    bool vertex_member(int v) const { return vmember_[v] != 0; }
    const std::vector<Interval>& intervals_on(int e) const { return ivals_[e]; }

    void add_vertex(int v);
    /// Adds the closed interval [lo, hi] on edge e, re-merging locally so the
    /// set stays canonical. Throws ValidationError outside [0, length].
    void add_interval(int e, const Rat& lo, const Rat& hi);
    void add_point(const TreePoint& p);

    bool empty() const;
    bool contains(const TreePoint& p) const;

    /// Whether the closed sub-interval [lo, hi] of edge e lies in the set,
    /// with offsets 0 and length standing for the endpoint vertices.
    bool covers_interval(int e, const Rat& lo, const Rat& hi) const;
    /// An offset in [lo, hi] whose point is outside the set, if any.
    std::optional<Rat> first_uncovered(int e, const Rat& lo, const Rat& hi) const;
    bool covers_path(const TreePath& p) const;
    std::optional<TreePoint> path_uncovered_witness(const TreePath& p) const;

    /// Whether the set is connected in the realized tree. Empty counts as
    /// connected.
    bool is_connected() const;

    /// Smallest point of the set in the tree's canonical point order, if any.
    std::optional<TreePoint> min_point() const;

    /// Exact distance from p to the nearest point of the set. Throws
    /// ValidationError on an empty set.
    Rat distance_to(const TreePoint& p) const;

    /// Canonical points at the ends of every stored interval. Together with
    /// the tree's vertices these bound every flat piece of the set.
    std::vector<TreePoint> interval_boundary_points() const;

    friend ClosedSet set_union(const ClosedSet& a, const ClosedSet& b);
    friend ClosedSet set_intersection(const ClosedSet& a, const ClosedSet& b);

    friend bool operator==(const ClosedSet& a, const ClosedSet& b) {
        return a.vmember_ == b.vmember_ && a.ivals_ == b.ivals_;
    }

private:
    const MetricTree* tree_;
    std::vector<char> vmember_;
    std::vector<std::vector<Interval>> ivals_;
};

}  // namespace treekkm

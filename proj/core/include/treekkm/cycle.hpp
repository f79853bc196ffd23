#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "treekkm/closed_set.hpp"
#include "treekkm/metric_tree.hpp"

namespace treekkm {

/*
 * A circle assembled from n >= 3 segments: edge i joins vertex i to vertex
 * (i+1) mod n and carries a positive rational length. Points reuse TreePoint
 * with the same canonical form (interior offsets only). The metric takes the
 * shorter of the two arcs.
 */
class MetricCycle {
public:
    MetricCycle(int n, std::vector<Rat> edge_lengths);

    int vertex_count() const { return n_; }
    int edge_count() const { return n_; }
    const Rat& edge_length(int e) const { return lens_[e]; }
    const Rat& circumference() const { return total_; }

    TreePoint vertex_point(int v) const;
    /// Canonicalizes offsets 0 and length to the endpoint vertices.
    TreePoint point_on_edge(int e, const Rat& offset) const;

    /// Arc-length coordinate in [0, circumference), measured from vertex 0.
    Rat position(const TreePoint& p) const;
    /// Inverse of position; s is first reduced modulo the circumference.
    TreePoint point_at_position(Rat s) const;

    Rat distance(const TreePoint& x, const TreePoint& y) const;
    /// Length of the arc running from x forward (in edge order) to y.
    Rat forward_arc(const TreePoint& x, const TreePoint& y) const;

    friend bool operator==(const MetricCycle& a, const MetricCycle& b) {
        return a.lens_ == b.lens_;
    }

private:
    int n_;
    std::vector<Rat> lens_;
    std::vector<Rat> prefix_;  // prefix_[i] = position of vertex i, prefix_[n] = total
    Rat total_;
};

/*
 * Closed subset of a cycle in the same canonical form as ClosedSet on trees:
 * vertex bits plus sorted non-touching closed intervals per edge, intervals
 * reaching an edge end implying the endpoint vertex bit, end singletons
 * stored as bits alone.
 */
class CycleSet {
public:
    explicit CycleSet(const MetricCycle& c);

    static CycleSet whole(const MetricCycle& c);

    const MetricCycle& cycle() const { return *cycle_; }
    bool vertex_member(int v) const { return vmember_[v] != 0; }
    const std::vector<Interval>& intervals_on(int e) const { return ivals_[e]; }

    void add_vertex(int v);
    void add_interval(int e, const Rat& lo, const Rat& hi);
    /// Adds the closed arc running forward from one position to another,
    /// wrapping past vertex 0 when to < from; equal endpoints add one point.
    void add_arc(const Rat& from, const Rat& to);

    bool empty() const;
    bool contains(const TreePoint& p) const;

    /// Positions of every stored interval end, plus every member vertex.
    std::vector<Rat> boundary_positions() const;

    friend bool operator==(const CycleSet& a, const CycleSet& b) {
        return a.vmember_ == b.vmember_ && a.ivals_ == b.ivals_;
    }

private:
    const MetricCycle* cycle_;
    std::vector<char> vmember_;
    std::vector<std::vector<Interval>> ivals_;
};

/*
 * One closed set per vertex. Valid when every vertex lies in its own set and
 * for every two vertices at least one of the two arcs between them lies in
 * the union of their sets. Valid covers always have a point in a strict
 * majority of the sets.
 */
struct CycleKkmCover {
    std::vector<CycleSet> sets;  // sets[v] belongs to vertex v
};

/// Reason the cover is not valid, or nullopt: wrong set count, a set bound
/// to a different cycle, a vertex outside its set, or a pair of vertices
/// neither of whose connecting arcs stays inside the two sets.
std::optional<std::string> cycle_cover_violation(const MetricCycle& c, const CycleKkmCover& k);
bool validate_cycle_cover(const MetricCycle& c, const CycleKkmCover& k);

struct MajorityResult {
    TreePoint point;
    std::vector<int> members;  // vertices whose sets contain the point, sorted
    int depth = 0;             // members.size()
    std::string warning;       // set when the cover failed validation
};

/// Point lying in at least floor(n/2)+1 sets, located by sweeping the
/// circle's elementary arcs: membership changes only at interval ends, so
/// scanning vertices and interval ends finds the maximum depth. Among
/// maximum-depth points the earliest position from vertex 0 wins. An invalid
/// cover still yields the best point found, with a warning attached.
MajorityResult majority_point(const MetricCycle& c, const CycleKkmCover& k, bool validate = true);

struct ReductionResult {
    bool applicable = false;
    TreePoint cut;             // low-depth point whose edge neighborhood is removed
    int cut_depth = 0;
    TreePoint point;
    std::vector<int> members;
};

/// Alternative route to a majority point: find a point x lying in at most
/// floor(n/2)-1 sets, remove x together with the interiors of its incident
/// edges (leaving a path), and intersect the sets of the vertices missing x,
/// which form a KKM cover of that path. Not applicable when every point
/// already has depth floor(n/2) or more; then applicable is false and
/// majority_point alone certifies the bound. Throws on an invalid cover.
ReductionResult tree_reduction_majority(const MetricCycle& c, const CycleKkmCover& k);

/*
 * Approval voting over a circular spectrum: voter i sits at vertex i and
 * approves a closed set of options. The spectrum is held by shared pointer
 * so the approval sets' binding survives moves of the society value.
 */
struct CircularSociety {
    std::shared_ptr<const MetricCycle> spectrum;
    std::vector<CycleSet> approvals;  // approvals[i] is voter i's, one per vertex
};

struct VoteResult {
    TreePoint option;
    std::vector<int> approvers;  // voters approving the option, sorted
};

/// For a super-agreeable society (each pair of voters has one of its two
/// connecting arcs covered by their approval sets, everyone approving their
/// own position) returns an option approved by a strict majority of the
/// voters. Throws ValidationError naming an offending pair otherwise.
VoteResult super_agreeable_majority(const CircularSociety& s);

}  // namespace treekkm

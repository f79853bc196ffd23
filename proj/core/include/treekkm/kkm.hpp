#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treekkm/closed_set.hpp"
#include "treekkm/metric_tree.hpp"
#include "treekkm/sperner.hpp"

namespace treekkm {

/*
 * A cover relative to finitely many anchor points: one closed set per
 * anchor, each set containing its anchor, and for every two anchors the
 * path between them contained in the union of their two sets. Such covers
 * always have a common point, and the constructive route below finds one.
 */
struct KkmCover {
    std::vector<TreePoint> anchors;
    std::vector<ClosedSet> sets;  // sets[i] belongs to anchors[i]
};

/// Reason the cover is not valid, or nullopt: size mismatch, coinciding
/// anchors, an anchor outside its set, or an anchor-to-anchor path leaving
/// the two sets (a witness point is named).
std::optional<std::string> cover_violation(const MetricTree& t, const KkmCover& c);
bool validate_kkm_cover(const MetricTree& t, const KkmCover& c);

/// Labels every vertex by the anchors whose sets contain it. Anchors must be
/// distinct vertices; the label set is their sorted ids. Proper whenever the
/// cover is valid.
Labelling membership_labelling(const MetricTree& t, const KkmCover& c);

/// Exact common intersection of all cover sets; nonempty for valid covers.
/// With validate set, an invalid cover throws ValidationError carrying the
/// violation.
ClosedSet intersect_all(const MetricTree& t, const KkmCover& c, bool validate = true);

struct KkmSpernerResult {
    TreePoint point;         // lies in every cover set
    int refinements = 0;     // extra halvings beyond the initial segmentation
    std::vector<Rat> deltas; // requested size per iteration
    std::vector<int> walk;   // successor walk of the final iteration, refined ids
};

/// Constructive intersection point: segment the tree below delta (forcing
/// anchors and all set boundary points to become vertices), label refined
/// vertices by set membership, walk to a fully labelled edge, and return an
/// endpoint lying in every set; otherwise halve delta and repeat. For a
/// valid cover the boundary points force success on the first round; the
/// halving loop and the refinement cap only catch invalid covers, reported
/// as ValidationError.
KkmSpernerResult kkm_point_via_sperner(const MetricTree& t, const KkmCover& c, const Rat& delta0,
                                       int max_refinements = 64, bool validate = true);

/// Builds a cover from closed connected sets with pairwise nonempty
/// intersections: anchors each set at its smallest point (or the next
/// deterministic interior point when sets share their smallest). The result
/// always validates. Throws ValidationError for an empty or disconnected
/// set or a disjoint pair, naming the offender.
KkmCover cover_from_connected_sets(const MetricTree& t, const std::vector<ClosedSet>& sets);

}  // namespace treekkm

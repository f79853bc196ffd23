#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "treekkm/closed_set.hpp"
#include "treekkm/kkm.hpp"
#include "treekkm/metric_tree.hpp"

namespace treekkm {

/*
 * Self-maps of a metric tree. Piecewise-linear maps are given by vertex
 * images and extended edge by edge: the point a fraction r along an edge
 * (u, v) maps to the point a fraction r of the way along the path from the
 * image of u to the image of v. Such maps always have an exact fixed point,
 * computed through the move-away cover. Opaque maps with a declared modulus
 * of continuity get ε-fixed points through segmentation and a directed walk.
 */
struct PlMap {
    std::vector<TreePoint> images;  // one per vertex
};

/// Exact evaluation. Throws ValidationError for a map without an image for
/// every vertex.
TreePoint eval_pl(const MetricTree& t, const PlMap& m, const TreePoint& x);

/// Largest ratio of image-path length to edge length over all edges; an
/// exact Lipschitz bound for the map. Zero for constant maps.
Rat pl_expansion_bound(const MetricTree& t, const PlMap& m);

/// Direct membership test d(x, anchor) <= d(f(x), anchor), the defining
/// inequality of the move-away sets.
bool moves_away(const MetricTree& t, const PlMap& m, const TreePoint& x, const TreePoint& anchor);

/// The cover whose set at anchor a holds the points x with
/// d(x, a) <= d(f(x), a). Computed exactly, edge by edge: the difference of
/// the two distances is piecewise linear in the edge offset, its sign
/// pattern is resolved at explicit breakpoints, and the non-negative region
/// becomes closed intervals. Always a valid cover.
KkmCover move_away_cover(const MetricTree& t, const PlMap& m,
                         const std::vector<TreePoint>& anchors);

/// Exact fixed set {x : f(x) = x}: the intersection of the move-away sets
/// anchored at every vertex. Nonempty for every piecewise-linear map.
ClosedSet fixed_set_pl(const MetricTree& t, const PlMap& m);

/// Smallest point of the fixed set in canonical order, verified by exact
/// re-evaluation.
TreePoint fixed_point_pl(const MetricTree& t, const PlMap& m);

/// An opaque continuous self-map: an evaluator plus a modulus of
/// continuity, modulus(eps) = delta such that d(x, y) < delta forces
/// d(f(x), f(y)) < eps. The modulus must return positive rationals and be
/// monotone in eps.
struct BlackBoxMap {
    std::function<TreePoint(const TreePoint&)> eval;
    std::function<Rat(const Rat&)> modulus;
};

/// Wraps a piecewise-linear map, with the modulus from its expansion bound
/// (or a caller-supplied Lipschitz constant).
BlackBoxMap black_box_from_pl(const MetricTree& t, const PlMap& m);
BlackBoxMap black_box_from_pl(const MetricTree& t, const PlMap& m, const Rat& lipschitz);

struct EpsilonFpResult {
    TreePoint point;    // d(point, f(point)) < epsilon, verified by evaluation
    TreePoint partner;  // other endpoint of the settled edge; equals point
                        // when the walk stopped at an exactly fixed vertex
    Rat delta;          // segmentation size bound used
    int steps = 0;      // vertices visited by the walk
};

/// ε-fixed point of a black-box map: segments the tree below
/// min(modulus(ε/2), ε/2), walks from vertex to vertex toward the image of
/// the current point, and settles on an edge walked in both directions, both
/// of whose endpoints the theory makes ε-fixed. The returned point is
/// re-verified by evaluation; when neither endpoint verifies, the declared
/// modulus contradicts the observed evaluations and a ValidationError says
/// so.
EpsilonFpResult epsilon_fixed_point(const MetricTree& t, const BlackBoxMap& m, const Rat& epsilon);

struct LemmaCheckResult {
    bool first_holds = false;             // [y,z] meets its own image
    std::optional<TreePoint> meet;        // a common point, when it does
    bool second_holds = false;            // d(y, f(z)) <= d(f(y), f(z))
    Rat left, right;                      // the two sides of that inequality
};

/// Audit of the disjunction behind the ε-fixed-point argument, for a
/// segment [y, z] inside a single edge whose endpoints jointly move away
/// from every vertex: either the segment meets its image, or
/// d(y, f(z)) <= d(f(y), f(z)). Throws ValidationError when [y, z] spans
/// several edges or the joint move-away condition fails.
LemmaCheckResult lemma_intersect_check(const MetricTree& t, const PlMap& m, const TreePoint& y,
                                       const TreePoint& z);

}  // namespace treekkm

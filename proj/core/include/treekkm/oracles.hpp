#pragma once

#include <functional>
#include <vector>

#include "treekkm/closed_set.hpp"
#include "treekkm/cycle.hpp"
#include "treekkm/metric_tree.hpp"
#include "treekkm/sperner.hpp"

namespace treekkm {

/*
 * Brute-force cross-checks for the walk- and sweep-based algorithms. These
 * work from the definitions alone, by exhaustive scan over edges or over a
 * finite grid of sample points, so agreement with the main routines is
 * independent evidence rather than a tautology. Deliberately simple; none of
 * this is on any fast path.
 */

struct GridSample {
    Rat resolution;
    std::vector<TreePoint> points;  // canonical; all vertices, then edge interiors
};

/// Every vertex plus equally spaced interior points on each edge, spaced at
/// most `resolution` apart.
GridSample grid_sample(const MetricTree& t, const Rat& resolution);
GridSample grid_sample(const MetricCycle& c, const Rat& resolution);

/// Ids of every edge whose endpoint labels union to the whole label set.
std::vector<int> scan_fully_labelled(const MetricTree& t, const Labelling& l);

/// Sample points where stored membership disagrees with the defining
/// predicate. Empty means the set is faithful at grid resolution.
std::vector<TreePoint> grid_membership_audit(const ClosedSet& s,
                                             const std::function<bool(const TreePoint&)>& defines,
                                             const GridSample& g);
std::vector<TreePoint> grid_membership_audit(const CycleSet& s,
                                             const std::function<bool(const TreePoint&)>& defines,
                                             const GridSample& g);

struct DiscreteFpWitnesses {
    std::vector<int> fixed_vertices;
    std::vector<int> inverted_edges;  // f moves each endpoint strictly past the other
};

/// Scans every vertex for fixedness and every edge for inversion under f.
DiscreteFpWitnesses exhaustive_discrete_fp(const MetricTree& t, const std::vector<int>& f);

/// Largest number of cover sets containing any single grid point.
int grid_max_depth(const CycleKkmCover& k, const GridSample& g);

}  // namespace treekkm

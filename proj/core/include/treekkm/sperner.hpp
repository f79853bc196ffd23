#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "treekkm/metric_tree.hpp"

namespace treekkm {

/*
 * Labellings assign each vertex a subset of a label set A, itself a set of
 * vertices. A labelling is proper when every label vertex carries its own
 * label and, at every vertex, the labels it misses all lie in a single
 * component of the tree minus that vertex. A proper labelling guarantees an
 * edge whose endpoint labels union to all of A, found by a successor walk.
 */
struct Labelling {
    std::vector<int> label_set;            // sorted ascending, no duplicates
    std::vector<std::vector<int>> labels;  // per vertex, sorted subsets of label_set
};

/// Reason the labelling is not proper, or nullopt. Checks structure first
/// (sizes, sortedness, range), then the two properness conditions.
std::optional<std::string> labelling_violation(const MetricTree& t, const Labelling& l);
bool is_proper(const MetricTree& t, const Labelling& l);

/// Neighbor of v on the side holding every label v misses; -1 when v misses
/// nothing. Throws ValidationError when the missing labels straddle
/// components, naming a witness pair.
int successor(const MetricTree& t, const Labelling& l, int v);

bool edge_fully_labelled(const MetricTree& t, const Labelling& l, int e);

struct SpernerResult {
    int edge = -1;          // endpoint labels union to the whole label set
    std::vector<int> walk;  // vertices visited by the successor walk, in order
};

/// Finds a fully labelled edge of a properly labelled tree. A vertex already
/// carrying every label short-circuits: the smallest such vertex id wins and
/// its smallest incident edge is returned. Otherwise the successor walk runs
/// from `start` (default: vertex 0) and settles on a two-cycle whose edge is
/// fully labelled. Improper labellings either throw a ValidationError with a
/// witness or still produce a correct edge.
SpernerResult find_fully_labelled_edge(const MetricTree& t, const Labelling& l, int start = -1);

/// Deterministic adjacent-step walks: succ(v) returns a neighbor of v, or -1
/// to stop at v. Walks settle either at a stop vertex or on the first edge
/// walked in both directions; the visited vertices are returned in order.
/// Steps are capped at 2n + 4, which no adjacent-step iteration can exceed
/// before repeating a directed edge; hitting the cap throws.
struct WalkOutcome {
    std::vector<int> walk;
    bool stopped_at_vertex = false;  // succ returned -1 at walk.back()
};
WalkOutcome successor_walk(int vertex_count, int start, const std::function<int(int)>& succ);

/// Labelling induced by a vertex self-map with no fixed vertex: v labels
/// itself plus every vertex separated from f(v) by v. Always proper; the
/// labels a vertex misses are exactly the vertices on its image's side.
Labelling labelling_from_vertex_map(const MetricTree& t, const std::vector<int>& f);

/// Map recovered from a labelling in which every vertex misses at least one
/// label over the full vertex label set: each vertex goes to its smallest
/// missing label. Throws ValidationError when some vertex misses nothing.
std::vector<int> vertex_map_from_labelling(const MetricTree& t, const Labelling& l);

struct InvertedEdgeResult {
    int edge = -1;  // f carries each endpoint strictly past the other
    std::vector<int> walk;
};

/// For a vertex self-map with no fixed vertex, finds an edge {x, y} with
/// f(x) on y's side and f(y) on x's side, the discrete form of a fixed
/// point. Walks toward the image from `start` (default: vertex 0).
InvertedEdgeResult inverted_edge(const MetricTree& t, const std::vector<int>& f, int start = -1);

}  // namespace treekkm

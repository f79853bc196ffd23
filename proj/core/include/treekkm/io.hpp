#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "treekkm/cycle.hpp"
#include "treekkm/fixedpoint.hpp"
#include "treekkm/kkm.hpp"
#include "treekkm/metric_tree.hpp"
#include "treekkm/sperner.hpp"

namespace treekkm {

/*
 * Structured-text instance files. All numbers that can be non-integer are
 * rationals serialized as "p/q" strings; nothing here ever touches floating
 * point. Parsers throw ParseError for malformed or dangling references and
 * let ValidationError from the domain constructors pass through. Cover, map,
 * and society files embed their underlying tree or cycle so one file names a
 * whole instance.
 */

/// {"vertices": n, "edges": [[u, v, "p/q"], ...]}
MetricTree parse_tree(const std::string& text);
std::string tree_json(const MetricTree& t);

/// {"vertex": id} or {"edge": [u, v], "offset": "p/q"}, the offset measured
/// from the first listed endpoint whichever way the edge is stored.
TreePoint parse_point(const std::string& text, const MetricTree& t);
std::string point_json(const MetricTree& t, const TreePoint& p);
TreePoint parse_cycle_point(const std::string& text, const MetricCycle& c);
std::string cycle_point_json(const MetricCycle& c, const TreePoint& p);

/// {"A": [ids], "labels": {"v": [ids], ...}}
Labelling parse_labelling(const std::string& text, const MetricTree& t);
std::string labelling_json(const MetricTree& t, const Labelling& l);

/// {"map": {"v": w, ...}}, total on the tree's vertices
std::vector<int> parse_vertex_map(const std::string& text, const MetricTree& t);
std::string vertex_map_json(const MetricTree& t, const std::vector<int>& f);

struct TreeCoverInstance {
    std::shared_ptr<const MetricTree> tree;
    KkmCover cover;
};

/// {"tree": {...}, "anchors": [point, ...], "sets": [{"anchor": i,
///  "intervals": [[edge, "p/q", "p/q"], ...], "vertices": [ids]}, ...]}
TreeCoverInstance parse_tree_cover(const std::string& text);
std::string tree_cover_json(const MetricTree& t, const KkmCover& c);

struct PlMapInstance {
    std::shared_ptr<const MetricTree> tree;
    PlMap map;
};

/// {"tree": {...}, "images": {"v": point, ...}}
PlMapInstance parse_pl_map(const std::string& text);
std::string pl_map_json(const MetricTree& t, const PlMap& m);

/// {"n": k, "edge_lengths": ["p/q", ...]} in cyclic order
MetricCycle parse_cycle(const std::string& text);
std::string cycle_json(const MetricCycle& c);

struct CycleCoverInstance {
    std::shared_ptr<const MetricCycle> cycle;
    CycleKkmCover cover;
};

/// {"cycle": {...}, "sets": [{"vertex": v, "arcs": [[edge, "p/q", "p/q"],
///  ...], "vertices": [ids]}, ...]}, one set per vertex in any order
CycleCoverInstance parse_cycle_cover(const std::string& text);
std::string cycle_cover_json(const MetricCycle& c, const CycleKkmCover& k);

/// {"cycle": {...}, "voters": [{"arcs": [...], "vertices": [ids]}, ...]},
/// voter i sitting at vertex i
CircularSociety parse_society(const std::string& text);
std::string society_json(const CircularSociety& s);

/// FNV-1a over the raw bytes; hex form used as the instance digest in
/// witness reports.
uint64_t fnv1a64(const std::string& text);
std::string digest_hex(const std::string& text);

}  // namespace treekkm

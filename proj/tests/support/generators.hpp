#pragma once

#include <memory>
#include <random>
#include <vector>

#include <treekkm/cycle.hpp>
#include <treekkm/fixedpoint.hpp>
#include <treekkm/kkm.hpp>
#include <treekkm/metric_tree.hpp>
#include <treekkm/sperner.hpp>

/*
 * Random instances for the property suites. Everything is driven by an
 * explicit engine so failures reproduce from the seed printed by the test.
 * The cover generators are valid by construction (see the comments on each),
 * not by rejection sampling, so they cannot silently bias toward easy cases.
 */
namespace treekkm::testgen {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);  // inclusive bounds
bool coin(Rng& rng, double p = 0.5);

/// Positive rational with small numerator and denominator.
Rat small_rational(Rng& rng);
/// lo + (hi - lo) * k/d for random k in [0, d]; endpoints included.
Rat uniform_rational(Rng& rng, const Rat& lo, const Rat& hi, int max_den = 16);

MetricTree random_tree(Rng& rng, int n);
TreePoint random_point(Rng& rng, const MetricTree& t);

Labelling random_proper_labelling(Rng& rng, const MetricTree& t);
std::vector<int> random_fixed_point_free_map(Rng& rng, const MetricTree& t);

KkmCover random_valid_cover(Rng& rng, const MetricTree& t, int max_anchors);
PlMap random_pl_map(Rng& rng, const MetricTree& t);

MetricCycle random_cycle(Rng& rng, int n);
CycleKkmCover random_valid_cycle_cover(Rng& rng, const MetricCycle& c);
CircularSociety random_super_agreeable_society(Rng& rng,
                                               std::shared_ptr<const MetricCycle> spectrum);

}  // namespace treekkm::testgen

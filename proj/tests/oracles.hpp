// Test-only brute-force oracles. Each one recomputes a quantity along a route
// independent of the implementation it checks: persistence by recomputing
// connected components from scratch at every threshold, backbone distances by
// exhaustive alignment enumeration, intersection thresholds by a dense
// epsilon scan.
#pragma once

#include <optional>
#include <vector>

#include "eedag/alignment.hpp"
#include "eedag/dataset.hpp"
#include "eedag/persistence.hpp"
#include "eedag/rng.hpp"

namespace eedag::test {

/// Threshold-sweep persistence: node lives for every extremum of a
/// plateau-free series, tracking contiguous index runs level by level.
NodeLifeTable oracle_node_lives(const TimeSeries& ts);

struct OracleAlignments {
  std::vector<Alignment> all;
  double min_cost;
  double min_max_cost;  // minimum over alignments of the max aligned difference
  std::vector<Alignment> optimal;
};

/// Every valid alignment of the two backbones. Sizes are capped at a combined
/// length of 12.
OracleAlignments oracle_enumerate_alignments(const Backbone& x, const Backbone& y);

double oracle_backbone_distance(const Backbone& x, const Backbone& y);
double oracle_backbone_infinity(const Backbone& x, const Backbone& y);

/// First multiple of `resolution` at which the two discrete intervals
/// (constructed directly) intersect; 0 if the limit intervals already do.
std::optional<double> oracle_eps_star(const TimeSeries& a, std::size_t extremum_a,
                                      const TimeSeries& b, std::size_t extremum_b,
                                      double resolution);

// Seeded generators shared by property tests.
TimeSeries random_series(SplitMix64& rng, std::size_t length, const std::string& name);
Backbone random_backbone(SplitMix64& rng, std::size_t length, bool grid_weights);
Dataset random_dataset(SplitMix64& rng, std::size_t n_series, std::size_t n_points);

/// Perturbation budget delta_f / 2 under which the local stability estimates
/// apply: delta_f is half the smallest L-infinity gap among diagram points
/// (including each point's distance to the diagonal) over the sublevel and
/// superlevel diagrams.
double stability_budget(const TimeSeries& ts);

/// True when the positions attaining the global maximum and global minimum
/// agree between the two series. A perturbation that relocates a global
/// extremum relocates the essential diagram point, and the stability
/// estimates do not cover that swap.
bool global_extrema_sites_match(const TimeSeries& a, const TimeSeries& b);

}  // namespace eedag::test

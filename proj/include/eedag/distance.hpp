#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eedag/alignment.hpp"
#include "eedag/dataset.hpp"
#include "eedag/event_dag.hpp"

namespace eedag {

struct SupergraphVertex {
  std::size_t pair_index;  // which backbone pair
  std::size_t position;    // position within that pair's alignment
  std::optional<std::size_t> x_node;  // backbone position on the first DAG's side
  std::optional<std::size_t> y_node;  // backbone position on the second DAG's side
  double weight_a;                    // node life, 0 on the insertion side
  double weight_b;
};

struct SupergraphEdge {
  std::size_t src;
  std::size_t dst;
  double weight_a;  // edge weight in the first DAG, 0 when the projection is no edge there
  double weight_b;
};

/// Doubly weighted union graph over aligned backbone positions of two DAGs.
struct Supergraph {
  std::vector<std::string> pair_names;
  std::vector<SupergraphVertex> vertices;
  std::vector<SupergraphEdge> edges;
};

/// `alignments[i]` aligns the backbone of a.series_names[i] with the
/// same-named series of `b`. Throws on series-name mismatch or an invalid
/// alignment.
Supergraph build_supergraph(const ExtremalEventDAG& a, const ExtremalEventDAG& b,
                            const std::vector<Alignment>& alignments);

struct PairReport {
  std::string name;
  double backbone_dist = 0.0;
  Alignment alignment;  // the alignment realizing the reported edge term
  std::size_t optimal_count = 0;
  bool tied = false;
  bool truncated = false;
};

struct DistanceReport {
  double total = 0.0;
  double node_term = 0.0;
  double edge_term = 0.0;
  std::vector<PairReport> pairs;
  bool tie_flag = false;
  bool truncated = false;
  std::optional<double> stability_bound;
};

/// Extremal event DAG distance: the sum of backbone distances plus the edge
/// term minimized over the Cartesian product of per-pair optimal-alignment
/// sets. Each set is truncated at `cap`; when the product would exceed
/// min(cap^2, 1024) combinations the canonical backtracking alignment is used
/// per pair and the report is flagged truncated. The stability bound is
/// attached when the datasets share a grid and the closeness hypothesis holds.
DistanceReport dag_distance(const Dataset& a, const Dataset& b, std::size_t cap = 64);

/// Right-hand side of the local stability estimate; absent when the datasets
/// are not close enough for it to apply. Throws InputError when the grids
/// differ.
std::optional<double> stability_bound(const Dataset& a, const Dataset& b);

std::string to_json(const DistanceReport& report);

}  // namespace eedag

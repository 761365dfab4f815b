#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eedag/dataset.hpp"
#include "eedag/persistence.hpp"

namespace eedag {

struct DagVertex {
  std::size_t series;   // index into series_names
  std::size_t ordinal;  // 1-based position within the series, in time order
  ExtremumLabel label;
  double time;
  double weight;  // node life

  friend bool operator==(const DagVertex&, const DagVertex&) = default;
};

struct DagEdge {
  std::size_t src;  // indices into vertices
  std::size_t dst;
  double weight;

  friend bool operator==(const DagEdge&, const DagEdge&) = default;
};

/// Complete time-order digraph on all extrema of a dataset. Vertices are
/// sorted by (series, ordinal); edges are exactly the pairs with strictly
/// smaller source time, sorted by (src, dst).
struct ExtremalEventDAG {
  std::vector<std::string> series_names;
  std::vector<DagVertex> vertices;
  std::vector<DagEdge> edges;

  friend bool operator==(const ExtremalEventDAG&, const ExtremalEventDAG&) = default;
};

struct BuildOptions {
  bool parallel = true;
};

/// Node weights are node lives; same-series edge weight is the smaller node
/// life; cross-series edges additionally cap at the interval-intersection
/// threshold. Jump lists are memoized per extremum and the edge loop runs in
/// parallel when enabled; the result is identical either way.
ExtremalEventDAG build_dag(const Dataset& ds, const BuildOptions& options = {});

/// Straightforward single-threaded construction without memoization, kept as
/// the reference the parallel kernel is tested and benchmarked against.
ExtremalEventDAG reference_build_dag(const Dataset& ds);

enum class SliceMode { comparable, verbatim };

/// comparable keeps weights strictly above eps (the order of those events is
/// still guaranteed at eps); verbatim keeps weights <= eps. Either way edges
/// whose endpoints are dropped are removed.
ExtremalEventDAG epsilon_slice(const ExtremalEventDAG& dag, double eps,
                               SliceMode mode = SliceMode::comparable);

/// Lossless JSON export; dag_from_json(to_json(d)) == d.
std::string to_json(const ExtremalEventDAG& dag);
ExtremalEventDAG dag_from_json(std::string_view text);

/// Graphviz text format with `name:label@ordinal (w=...)` vertex labels.
std::string to_dot(const ExtremalEventDAG& dag);

}  // namespace eedag

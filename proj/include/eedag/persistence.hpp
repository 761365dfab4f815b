#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eedag/dataset.hpp"

namespace eedag {

enum class ExtremumLabel { min, max };

inline const char* label_name(ExtremumLabel l) { return l == ExtremumLabel::min ? "min" : "max"; }

struct Extremum {
  std::size_t index;  // position on the series' own time axis
  double time;
  double height;
  ExtremumLabel label;
};

/// Local extrema of a plateau-free series in time order. Labels strictly
/// alternate and both endpoints are included: a boundary sample is a min if it
/// lies below its single neighbor, else a max.
std::vector<Extremum> find_extrema(const TimeSeries& ts);

/// Merge triplet (u, s, v): the component born at the minimum with index `u`
/// dies at the saddle with index `s`, merging into the component represented
/// by the minimum with index `v`. The essential component is stored as
/// u == s == v.
struct MergeTriplet {
  std::size_t u;
  std::size_t s;
  std::size_t v;

  bool essential() const { return u == s && s == v; }
  friend bool operator==(const MergeTriplet&, const MergeTriplet&) = default;
};

/// Union-find sweep over heights ascending. Ties between equal-height points
/// are processed in domain order; on a merge the component whose minimum is
/// older survives (equal births: smaller domain coordinate survives).
std::vector<MergeTriplet> merge_tree(const TimeSeries& ts);

/// Node lives keyed by extremum index; every entry is strictly positive.
using NodeLifeTable = std::map<std::size_t, double>;

/// Lives of the local minima read off the merge triplets: |h_s - h_u| / 2 for
/// ordinary triplets, (max - min) / 2 for the essential one.
NodeLifeTable min_lives(const TimeSeries& ts, const std::vector<MergeTriplet>& tree);

/// Lives for all extrema: min_lives of the series united with min_lives of the
/// negated series mapped back to the maxima.
NodeLifeTable node_lives(const TimeSeries& ts);

struct PersistencePoint {
  double birth;
  std::optional<double> death;  // nullopt marks the essential point
  std::size_t minimum_index;
};

enum class FiltrationSide { sublevel, superlevel };

/// Zero-dimensional diagram. The superlevel variant is the sublevel diagram of
/// the negated series (its coordinates are negated heights).
std::vector<PersistencePoint> persistence_diagram(const TimeSeries& ts, FiltrationSide side);

/// CSV export, one `birth,death,index` row per point; death prints as `inf`
/// for the essential point.
std::string diagram_to_csv(const std::vector<PersistencePoint>& diagram);

}  // namespace eedag

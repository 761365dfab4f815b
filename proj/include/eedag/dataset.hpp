#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eedag {

/// Raised for malformed user input (bad CSV, degenerate series, bad arguments).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant is violated; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// One sampled curve. `times` is strictly increasing and the same length as
/// `heights`. After plateau collapse a series may view only a subset of its
/// dataset's grid, so each series carries its own time coordinates.
struct TimeSeries {
  std::string name;
  std::vector<double> times;
  std::vector<double> heights;

  std::size_t size() const { return times.size(); }
  double domain_left() const { return times.front(); }
  double domain_right() const { return times.back(); }
};

/// A named collection of series over a shared, strictly increasing time grid.
/// At parse time every series samples the full grid; plateau collapse may
/// later restrict individual series to grid subsets.
struct Dataset {
  std::vector<double> grid;
  std::vector<TimeSeries> series;

  const TimeSeries* find(std::string_view name) const;
  std::vector<std::string> names() const;
};

/// Throws InputError unless times are strictly increasing, lengths match and
/// there are at least 2 samples.
void validate_series(const TimeSeries& ts);

/// Validates the grid, every series, and name uniqueness.
void validate_dataset(const Dataset& ds);

struct CollapseResult {
  TimeSeries series;
  std::vector<std::string> warnings;
};

/// Replaces every maximal run of equal consecutive heights by its first
/// sample. Throws InputError if the series collapses to a single point
/// (constant series).
CollapseResult collapse_plateaus(const TimeSeries& ts);

/// collapse_plateaus applied to every series; warnings appended if requested.
Dataset collapse_dataset(const Dataset& ds, std::vector<std::string>* warnings = nullptr);

/// Affinely rescales each series so its minimum maps to `lo` and its maximum
/// to `hi`. Throws InputError on constant series or lo >= hi.
Dataset normalize_amplitude(const Dataset& ds, double lo, double hi);

/// Merges datasets that share an identical grid into one. Names must stay unique.
Dataset combine(const std::vector<Dataset>& parts);

/// True when no two consecutive heights are equal.
bool plateau_free(const TimeSeries& ts);

}  // namespace eedag

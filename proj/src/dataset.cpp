#include "eedag/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace eedag {

const TimeSeries* Dataset::find(std::string_view name) const {
  for (const auto& ts : series) {
    if (ts.name == name) return &ts;
  }
  return nullptr;
}

std::vector<std::string> Dataset::names() const {
  std::vector<std::string> out;
  out.reserve(series.size());
  for (const auto& ts : series) out.push_back(ts.name);
  return out;
}

void validate_series(const TimeSeries& ts) {
  if (ts.times.size() != ts.heights.size()) {
    throw InputError("series '" + ts.name + "': times and heights differ in length");
  }
  if (ts.times.size() < 2) {
    throw InputError("series '" + ts.name + "': fewer than 2 samples");
  }
  for (std::size_t i = 0; i + 1 < ts.times.size(); ++i) {
    if (!(ts.times[i] < ts.times[i + 1])) {
      throw InputError("series '" + ts.name + "': time coordinates not strictly increasing");
    }
  }
  for (double h : ts.heights) {
    if (!std::isfinite(h)) {
      throw InputError("series '" + ts.name + "': non-finite height");
    }
  }
}

void validate_dataset(const Dataset& ds) {
  if (ds.grid.size() < 2) throw InputError("grid has fewer than 2 points");
  for (std::size_t i = 0; i + 1 < ds.grid.size(); ++i) {
    if (!(ds.grid[i] < ds.grid[i + 1])) throw InputError("grid not strictly increasing");
  }
  std::set<std::string> seen;
  for (const auto& ts : ds.series) {
    validate_series(ts);
    if (!seen.insert(ts.name).second) {
      throw InputError("duplicate series name '" + ts.name + "'");
    }
  }
}

bool plateau_free(const TimeSeries& ts) {
  for (std::size_t i = 0; i + 1 < ts.heights.size(); ++i) {
    if (ts.heights[i] == ts.heights[i + 1]) return false;
  }
  return true;
}

CollapseResult collapse_plateaus(const TimeSeries& ts) {
  validate_series(ts);
  CollapseResult out;
  out.series.name = ts.name;
  std::size_t i = 0;
  while (i < ts.size()) {
    std::size_t j = i;
    while (j + 1 < ts.size() && ts.heights[j + 1] == ts.heights[i]) ++j;
    out.series.times.push_back(ts.times[i]);
    out.series.heights.push_back(ts.heights[i]);
    if (j > i) {
      std::ostringstream msg;
      msg << "series '" << ts.name << "': collapsed plateau of " << (j - i + 1)
          << " samples at t=" << ts.times[i] << " (height " << ts.heights[i] << ")";
      out.warnings.push_back(msg.str());
    }
    i = j + 1;
  }
  if (out.series.size() < 2) {
    throw InputError("series '" + ts.name + "' is constant");
  }
  return out;
}

Dataset collapse_dataset(const Dataset& ds, std::vector<std::string>* warnings) {
  validate_dataset(ds);
  Dataset out;
  out.grid = ds.grid;
  out.series.reserve(ds.series.size());
  for (const auto& ts : ds.series) {
    auto res = collapse_plateaus(ts);
    out.series.push_back(std::move(res.series));
    if (warnings) {
      warnings->insert(warnings->end(), res.warnings.begin(), res.warnings.end());
    }
  }
  return out;
}

Dataset normalize_amplitude(const Dataset& ds, double lo, double hi) {
  if (!(lo < hi)) throw InputError("normalize: lo must be < hi");
  validate_dataset(ds);
  Dataset out;
  out.grid = ds.grid;
  out.series.reserve(ds.series.size());
  for (const auto& ts : ds.series) {
    auto [mn, mx] = std::minmax_element(ts.heights.begin(), ts.heights.end());
    if (*mn == *mx) throw InputError("series '" + ts.name + "' is constant");
    const double scale = (hi - lo) / (*mx - *mn);
    TimeSeries t;
    t.name = ts.name;
    t.times = ts.times;
    t.heights.reserve(ts.size());
    for (double h : ts.heights) t.heights.push_back(lo + (h - *mn) * scale);
    out.series.push_back(std::move(t));
  }
  return out;
}

Dataset combine(const std::vector<Dataset>& parts) {
  if (parts.empty()) throw InputError("combine: no datasets given");
  Dataset out;
  out.grid = parts.front().grid;
  for (const auto& p : parts) {
    if (p.grid != out.grid) throw InputError("combine: grids differ");
    for (const auto& ts : p.series) out.series.push_back(ts);
  }
  validate_dataset(out);
  return out;
}

}  // namespace eedag

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eedag/dataset.hpp"

namespace eedag {

/// Uniform random permutation of the series names over unchanged height data.
/// Requires at least 2 series.
Dataset permute_names(const Dataset& ds, std::uint64_t seed);

/// Heights rotated to start at 1-based position m; the grid is unchanged.
TimeSeries cyclic_shift(const TimeSeries& ts, std::size_t m);

struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::size_t alignment_cap = 64;
  bool permute = true;
  bool shift = true;
};

struct BaselineResult {
  std::vector<double> samples;  // sorted ascending
  double mean = 0.0;
  double median = 0.0;
  double stddev = 0.0;  // population standard deviation
  double reference_distance = 0.0;
  double z_score = 0.0;  // (mean - reference) / stddev; positive when the
                         // reference sits below the null mean
};

/// Null-distribution experiment: per sample, scramble the names of `other`
/// and/or cyclically shift each of its series by an independent uniform
/// amount, then measure the DAG distance to the unmodified `ref`. Each sample
/// draws from its own seed-derived stream, so results are bit-identical for a
/// fixed config regardless of scheduling.
BaselineResult baseline(const Dataset& ref, const Dataset& other, const RunConfig& config);

std::string to_json(const BaselineResult& result, const RunConfig& config);

}  // namespace eedag

#include "eedag/harness.hpp"

#include <algorithm>
#include <cmath>

#include "eedag/distance.hpp"
#include "eedag/rng.hpp"
#include "json.hpp"

namespace eedag {

namespace {

void permute_names_with(Dataset& ds, SplitMix64& rng) {
  std::vector<std::string> names = ds.names();
  for (std::size_t i = names.size(); i-- > 1;) {
    std::swap(names[i], names[rng.next_below(i + 1)]);
  }
  for (std::size_t i = 0; i < names.size(); ++i) ds.series[i].name = std::move(names[i]);
}

}  // namespace

Dataset permute_names(const Dataset& ds, std::uint64_t seed) {
  validate_dataset(ds);
  if (ds.series.size() < 2) throw InputError("permute_names requires at least 2 series");
  Dataset out = ds;
  SplitMix64 rng(seed);
  permute_names_with(out, rng);
  return out;
}

TimeSeries cyclic_shift(const TimeSeries& ts, std::size_t m) {
  validate_series(ts);
  const std::size_t n = ts.size();
  if (m < 1 || m > n) throw InputError("shift position out of range");
  TimeSeries out;
  out.name = ts.name;
  out.times = ts.times;
  out.heights.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.heights.push_back(ts.heights[(m - 1 + i) % n]);
  return out;
}

BaselineResult baseline(const Dataset& ref, const Dataset& other, const RunConfig& config) {
  validate_dataset(ref);
  validate_dataset(other);

  BaselineResult result;
  result.reference_distance = dag_distance(ref, other, config.alignment_cap).total;
  result.samples.resize(config.samples);

  const std::ptrdiff_t n_samples = static_cast<std::ptrdiff_t>(config.samples);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t s = 0; s < n_samples; ++s) {
    SplitMix64 rng = SplitMix64::stream(config.seed, static_cast<std::uint64_t>(s));
    Dataset modified = other;
    if (config.permute && modified.series.size() >= 2) {
      permute_names_with(modified, rng);
    }
    if (config.shift) {
      for (auto& ts : modified.series) {
        ts = cyclic_shift(ts, 1 + rng.next_below(ts.size()));
      }
    }
    result.samples[static_cast<std::size_t>(s)] =
        dag_distance(ref, modified, config.alignment_cap).total;
  }

  std::sort(result.samples.begin(), result.samples.end());
  const std::size_t n = result.samples.size();
  if (n > 0) {
    double sum = 0.0;
    for (double v : result.samples) sum += v;
    result.mean = sum / static_cast<double>(n);
    result.median = n % 2 == 1 ? result.samples[n / 2]
                               : (result.samples[n / 2 - 1] + result.samples[n / 2]) / 2.0;
    double sq = 0.0;
    for (double v : result.samples) sq += (v - result.mean) * (v - result.mean);
    result.stddev = std::sqrt(sq / static_cast<double>(n));
    result.z_score =
        result.stddev > 0.0 ? (result.mean - result.reference_distance) / result.stddev : 0.0;
  }
  return result;
}

std::string to_json(const BaselineResult& result, const RunConfig& config) {
  nlohmann::ordered_json doc;
  doc["config"] = {{"seed", config.seed},
                   {"samples", config.samples},
                   {"alignment_cap", config.alignment_cap},
                   {"permute", config.permute},
                   {"shift", config.shift}};
  doc["reference_distance"] = result.reference_distance;
  doc["mean"] = result.mean;
  doc["median"] = result.median;
  doc["std"] = result.stddev;
  doc["z_score"] = result.z_score;
  doc["samples"] = result.samples;
  return doc.dump(2) + "\n";
}

}  // namespace eedag

#include "eedag/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eedag/rng.hpp"

namespace eedag {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double base_value(const SynthSpec& spec, double x) {
  const double arg = x + spec.phase;
  return spec.amplitude * (spec.kind == WaveKind::sine ? std::sin(arg) : std::cos(arg));
}

double base_slope(const SynthSpec& spec, double x) {
  const double arg = x + spec.phase;
  return spec.amplitude * (spec.kind == WaveKind::sine ? std::cos(arg) : -std::sin(arg));
}

/// Domain coordinates of the base sinusoid's interior extrema plus both
/// boundaries, used to keep noise bumps on monotone stretches.
std::vector<double> base_extrema(const SynthSpec& spec) {
  std::vector<double> xs = {0.0, kTwoPi};
  const double offset = spec.kind == WaveKind::sine ? std::numbers::pi / 2.0 : 0.0;
  for (int k = -3; k <= 3; ++k) {
    const double x = offset - spec.phase + k * std::numbers::pi;
    if (x > 0.0 && x < kTwoPi) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace

Dataset generate_synthetic(const SynthSpec& spec, std::uint64_t seed) {
  if (spec.n_points < 8) throw InputError("generate_synthetic: n_points must be >= 8");
  const std::size_t n = spec.n_points;
  const double step = kTwoPi / static_cast<double>(n - 1);

  TimeSeries ts;
  ts.name = spec.name.empty() ? (spec.kind == WaveKind::sine ? "sine" : "cosine") : spec.name;
  ts.times.resize(n);
  ts.heights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    ts.times[i] = static_cast<double>(i) * step;
    ts.heights[i] = base_value(spec, ts.times[i]);
  }

  if (spec.noise_amplitude > 0.0 && spec.n_noise_bumps > 0) {
    SplitMix64 rng(seed);
    const double w = 2.5 * step;               // bump half-width
    const double bump_slope = spec.noise_amplitude * std::numbers::pi / (2.0 * w);
    const auto extrema = base_extrema(spec);
    std::vector<double> centers;

    for (std::size_t b = 0; b < spec.n_noise_bumps; ++b) {
      double center = 0.0;
      bool placed = false;
      // Progressively relax the monotone-stretch requirement if the domain is
      // too crowded; bump separation and boundary margins are always kept.
      for (int attempt = 0; attempt < 400 && !placed; ++attempt) {
        const bool strict = attempt < 200;
        center = rng.next_double(w + 2.0 * step, kTwoPi - w - 2.0 * step);
        bool ok = true;
        for (double c : centers) {
          if (std::abs(center - c) < 2.0 * w + 3.0 * step) ok = false;
        }
        if (strict) {
          for (double e : extrema) {
            if (std::abs(center - e) < w + 2.0 * step) ok = false;
          }
          const double local = std::max(std::abs(base_slope(spec, center - w)),
                                        std::max(std::abs(base_slope(spec, center)),
                                                 std::abs(base_slope(spec, center + w))));
          if (bump_slope <= 1.15 * local) ok = false;
        }
        placed = ok;
      }
      if (!placed) continue;  // domain saturated; skip this bump
      centers.push_back(center);

      const double sign = rng.next_double() < 0.5 ? -1.0 : 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double u = ts.times[i] - center;
        if (std::abs(u) < w) {
          ts.heights[i] +=
              sign * spec.noise_amplitude * 0.5 * (1.0 + std::cos(std::numbers::pi * u / w));
        }
      }
    }
  }

  Dataset ds;
  ds.grid = ts.times;
  ds.series.push_back(std::move(ts));
  return ds;
}

}  // namespace eedag

#pragma once

#include <cstdint>
#include <string>

#include "eedag/dataset.hpp"

namespace eedag {

enum class WaveKind { sine, cosine };

/// Specification of one synthetic sinusoid on [0, 2*pi]. Noise is injected as
/// `n_noise_bumps` localized smooth bumps of amplitude `noise_amplitude`, each
/// placed on a monotone stretch so it contributes exactly one extra
/// minimum/maximum pair. With noise_amplitude == 0 or n_noise_bumps == 0 the
/// pure sinusoid is sampled.
struct SynthSpec {
  WaveKind kind = WaveKind::sine;
  double amplitude = 1.0;
  double phase = 0.0;
  double noise_amplitude = 0.0;
  std::size_t n_points = 0;
  std::size_t n_noise_bumps = 0;
  std::string name;  // defaults to "sine" / "cosine"
};

/// Deterministic for a fixed (spec, seed). Requires n_points >= 8.
Dataset generate_synthetic(const SynthSpec& spec, std::uint64_t seed);

}  // namespace eedag

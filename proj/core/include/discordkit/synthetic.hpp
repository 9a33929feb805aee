#pragma once

#include "discordkit/series.hpp"

#include <cstddef>
#include <cstdint>

namespace discordkit {

/// Noisy sine: p_i = (sin(0.1 i) + noise * eps_i + 1) / 2.5, eps_i ~ U(0, 1).
struct SyntheticSpec {
  std::size_t length = 0;
  double noise = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Deterministic per spec: the same spec always yields the same series.
[[nodiscard]] TimeSeries gen_sine_noise(const SyntheticSpec& spec);

/// Gaussian random walk starting at 0 with unit steps.
[[nodiscard]] TimeSeries gen_random_walk(std::size_t length, std::uint64_t seed);

}  // namespace discordkit

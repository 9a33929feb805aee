#pragma once

#include "discordkit/exact.hpp"
#include "discordkit/series.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace discordkit {

enum class Algorithm { kBrute, kHotSax, kHst };

[[nodiscard]] std::string_view to_string(Algorithm algorithm) noexcept;

/// Accepts "brute", "hotsax" and "hst". Throws ParameterError otherwise.
[[nodiscard]] Algorithm parse_algorithm(std::string_view name);

/// Outcome of one search run.
///
/// cps == distance_calls / (sequences * max(1, discords.size())) and the
/// per-discord calls add up to distance_calls.
struct SearchReport {
  std::string algorithm;
  std::string dataset;
  SearchParams params;
  std::size_t sequences = 0;
  std::vector<Discord> discords;
  std::uint64_t distance_calls = 0;
  std::vector<std::uint64_t> calls_per_discord;
  std::uint64_t setup_calls = 0;
  double wall_time = 0.0;  // seconds
  double cps = 0.0;
  bool truncated = false;
};

}  // namespace discordkit

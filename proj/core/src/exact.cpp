#include "discordkit/exact.hpp"

#include "discordkit/errors.hpp"

#include <algorithm>

namespace discordkit {

bool overlaps_any(std::size_t i, const std::vector<Discord>& found, std::size_t window) noexcept {
  return std::any_of(found.begin(), found.end(),
                     [&](const Discord& d) { return is_self_match(i, d.position, window); });
}

std::uint64_t valid_pair_count(std::size_t n, std::size_t window) noexcept {
  if (n <= window) return 0;
  const std::uint64_t gap = n - window;
  return gap * (gap + 1);
}

DiscordResult brute_force_discords(const TimeSeries& ts, const SequenceStats& stats,
                                   const SearchParams& params, DistanceCounter& counter) {
  params.validate(ts.size());
  const std::size_t n = num_sequences(ts, params.window);
  const ZNormDistance distance(ts, stats, params.window);
  const std::uint64_t calls_before = counter.calls();

  std::vector<double> nnd(n, kInfinity);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (is_self_match(i, j, params.window)) continue;
      nnd[i] = std::min(nnd[i], distance(i, j, counter));
    }
  }

  DiscordResult result;
  for (std::size_t m = 0; m < params.discords; ++m) {
    std::size_t best = kNoNeighbor;
    for (std::size_t i = 0; i < n; ++i) {
      if (overlaps_any(i, result.discords, params.window)) continue;
      if (best == kNoNeighbor || nnd[i] > nnd[best]) best = i;
    }
    result.calls_per_discord.push_back(m == 0 ? counter.calls() - calls_before : 0);
    if (best == kNoNeighbor) {
      result.truncated = true;
      break;
    }
    result.discords.push_back({best, nnd[best]});
  }
  return result;
}

NndProfile exact_nnd_profile(const TimeSeries& ts, const SequenceStats& stats, std::size_t window) {
  const std::size_t n = num_sequences(ts, window);
  const ZNormDistance distance(ts, stats, window);
  DistanceCounter counter;

  NndProfile profile{std::vector<double>(n, kInfinity), std::vector<std::size_t>(n, kNoNeighbor)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + window; j < n; ++j) {
      const double d = distance(i, j, counter);
      if (d < profile.nnd[i]) {
        profile.nnd[i] = d;
        profile.ngh[i] = j;
      }
      if (d < profile.nnd[j]) {
        profile.nnd[j] = d;
        profile.ngh[j] = i;
      }
    }
  }
  return profile;
}

}  // namespace discordkit

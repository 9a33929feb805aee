#pragma once

#include "discordkit/series.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace discordkit {

struct Discord {
  std::size_t position = 0;
  double nnd = 0.0;

  friend bool operator==(const Discord&, const Discord&) = default;
};

/// Top-k discords of a search, best first.
///
/// Positions are pairwise non-overlapping and nnds are non-increasing. When
/// the non-overlap constraint leaves no candidate before k discords have been
/// found, `truncated` is set and fewer entries are reported.
struct DiscordResult {
  std::vector<Discord> discords;
  /// Distance calls charged to each reported (or attempted) discord.
  std::vector<std::uint64_t> calls_per_discord;
  /// Calls spent before the first outer loop (HST warm-up and short-range
  /// topology); already included in calls_per_discord[0].
  std::uint64_t setup_calls = 0;
  bool truncated = false;
};

/// Exact nearest-neighbour distance of every window (self-similarity join).
/// Windows without any non-overlapping partner keep nnd = +inf and
/// ngh = kNoNeighbor.
struct NndProfile {
  std::vector<double> nnd;
  std::vector<std::size_t> ngh;
};

/// True if window i overlaps one of the already reported discords.
[[nodiscard]] bool overlaps_any(std::size_t i, const std::vector<Discord>& found,
                                std::size_t window) noexcept;

/// Plain double-loop discord search. Every candidate's nnd is computed once
/// over all valid partners (no pruning or early abandoning); discords are
/// then picked greedily from the highest nnd, skipping candidates that
/// overlap earlier picks. Equal nnds resolve to the lowest position. All
/// calls are charged to the first discord.
[[nodiscard]] DiscordResult brute_force_discords(const TimeSeries& ts, const SequenceStats& stats,
                                                 const SearchParams& params,
                                                 DistanceCounter& counter);

/// Exact profile by the double loop over unordered valid pairs (each pair
/// evaluated once and used for both windows). Ties keep the lowest neighbour
/// index.
[[nodiscard]] NndProfile exact_nnd_profile(const TimeSeries& ts, const SequenceStats& stats,
                                           std::size_t window);

/// Number of ordered (i, j) pairs with |i - j| >= window among n windows.
[[nodiscard]] std::uint64_t valid_pair_count(std::size_t n, std::size_t window) noexcept;

}  // namespace discordkit

#include "discordkit/hotsax.hpp"

#include "discordkit/errors.hpp"

#include <numeric>

namespace discordkit {

namespace {

// Running-minimum update for one inner-loop step. Returns false once the
// candidate is known not to be a discord.
bool inner_step(const ZNormDistance& distance, std::size_t candidate, std::size_t other,
                double best_dist, double& running_min, DistanceCounter& counter) {
  if (const auto d = distance.bounded(candidate, other, running_min, counter);
      d && *d < running_min) {
    running_min = *d;
  }
  return !(running_min < best_dist);
}

}  // namespace

DiscordResult hotsax_discords(const TimeSeries& ts, const SequenceStats& stats,
                              const SaxIndex& index, const SearchParams& params,
                              DistanceCounter& counter, Rng& rng,
                              const HotSaxAbandonHook& on_abandon) {
  params.validate(ts.size());
  const std::size_t n = num_sequences(ts, params.window);
  if (index.sequences() != n) {
    throw ParameterError("SAX index was built for a different series or window");
  }
  const std::size_t window = params.window;
  const ZNormDistance distance(ts, stats, window);

  std::vector<std::size_t> permutation(n);
  std::iota(permutation.begin(), permutation.end(), std::size_t{0});
  rng.shuffle(std::span(permutation));

  DiscordResult result;
  std::vector<std::size_t> outer;
  outer.reserve(n);
  for (std::size_t m = 0; m < params.discords; ++m) {
    const std::uint64_t calls_before = counter.calls();

    outer.clear();
    for (const auto& members : index.members) {
      const auto first = outer.size();
      outer.insert(outer.end(), members.begin(), members.end());
      rng.shuffle(std::span(outer).subspan(first));
    }

    double best_dist = 0.0;
    std::size_t best_pos = kNoNeighbor;
    for (const std::size_t i : outer) {
      if (overlaps_any(i, result.discords, window)) continue;

      double running_min = kInfinity;
      bool can_be_discord = true;
      const std::size_t own = index.cluster_of[i];
      for (const std::size_t j : index.members[own]) {
        if (is_self_match(i, j, window)) continue;
        if (!inner_step(distance, i, j, best_dist, running_min, counter)) {
          can_be_discord = false;
          break;
        }
      }
      if (can_be_discord) {
        const std::size_t start = rng.below(n);
        for (std::size_t t = 0; t < n; ++t) {
          const std::size_t j = permutation[(start + t) % n];
          if (index.cluster_of[j] == own || is_self_match(i, j, window)) continue;
          if (!inner_step(distance, i, j, best_dist, running_min, counter)) {
            can_be_discord = false;
            break;
          }
        }
      }
      if (!can_be_discord) {
        if (on_abandon) on_abandon(i, running_min, best_dist);
        continue;
      }

      if (best_pos == kNoNeighbor || running_min > best_dist ||
          (running_min == best_dist && i < best_pos)) {
        best_dist = running_min;
        best_pos = i;
      }
    }

    result.calls_per_discord.push_back(counter.calls() - calls_before);
    if (best_pos == kNoNeighbor) {
      result.truncated = true;
      break;
    }
    result.discords.push_back({best_pos, best_dist});
  }
  return result;
}

}  // namespace discordkit

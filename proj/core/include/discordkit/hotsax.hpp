#pragma once

#include "discordkit/exact.hpp"
#include "discordkit/random.hpp"
#include "discordkit/sax.hpp"
#include "discordkit/series.hpp"

#include <functional>

namespace discordkit {

/// Called when a candidate's inner loop stops early: its running minimum
/// fell below best_dist.
using HotSaxAbandonHook =
    std::function<void(std::size_t candidate, double running_min, double best_dist)>;

/// HOT SAX baseline.
///
/// The outer loop visits SAX clusters from the smallest to the largest, in a
/// seeded random order inside each cluster. For each candidate the inner
/// loop first scans its own cluster and then every other window, following
/// one seeded global permutation entered at a random offset per candidate.
/// The inner loop stops as soon as the candidate's running minimum drops
/// below the best exact nnd found so far. Discords after the first rerun the
/// whole search with overlapping candidates excluded; nothing is carried over
/// between discords.
[[nodiscard]] DiscordResult hotsax_discords(const TimeSeries& ts, const SequenceStats& stats,
                                            const SaxIndex& index, const SearchParams& params,
                                            DistanceCounter& counter, Rng& rng,
                                            const HotSaxAbandonHook& on_abandon = {});

}  // namespace discordkit

#pragma once

#include "discordkit/exact.hpp"
#include "discordkit/random.hpp"
#include "discordkit/sax.hpp"
#include "discordkit/series.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace discordkit {

/// Optional hooks into an HST run, used by instrumented tests.
struct HstObserver {
  /// nnd[i] was lowered to `nnd` (its neighbour is state.ngh[i]).
  std::function<void(std::size_t i, double nnd)> on_update;
  /// Candidate i was dropped before its inner loop because nnd < best_dist.
  std::function<void(std::size_t i, double nnd, double best_dist)> on_skip;
  /// Candidate i survived a full inner-loop scan; `nnd` is its exact value.
  std::function<void(std::size_t i, double nnd)> on_survivor;
};

/// Approximate nearest-neighbour state carried through an HST run.
///
/// nnd[i] is always an upper bound of the exact nnd of window i and never
/// increases; when ngh[i] is set, nnd[i] == d(i, ngh[i]). best_dist is the
/// highest exact nnd found for the discord currently being searched.
struct NndState {
  NndState(std::size_t sequences, std::size_t window);

  std::vector<double> nnd;
  std::vector<std::size_t> ngh;
  double best_dist = 0.0;
  std::vector<std::size_t> order;
  std::size_t window;
  HstObserver observer;

  [[nodiscard]] std::size_t size() const noexcept { return nnd.size(); }

  /// Feeds d = d(i, j) to both endpoints. Returns true if nnd[i] improved.
  bool relax(std::size_t i, std::size_t j, double d);
};

/// What the long-range topology does when it meets a time neighbour whose
/// nnd is already below best_dist.
enum class LowNeighborRule {
  kContinue,  // move on to the next time neighbour
  kStop,      // end the sweep in that direction
};

struct HstOptions {
  LowNeighborRule low_neighbor = LowNeighborRule::kContinue;
  /// Run the long-range topology only after candidates that survived the
  /// full inner loop instead of after every visited candidate.
  bool gate_long_range = false;
};

/// Shuffles each SAX cluster, chains the clusters from the smallest to the
/// largest and computes the distance between every pair of consecutive
/// windows in the chain that do not overlap. Returns the chain, which also
/// fixes the inner-loop order used later. At most N - 1 calls.
std::vector<std::size_t> warm_up(const SaxIndex& index, NndState& state,
                                 const ZNormDistance& distance, DistanceCounter& counter, Rng& rng);

/// The distance pass of warm_up over an explicit chain: one call per pair of
/// consecutive, non-overlapping windows.
void warm_up_chain(std::span<const std::size_t> chain, NndState& state,
                   const ZNormDistance& distance, DistanceCounter& counter);

/// For every window i with a neighbour, tries d(i + 1, ngh[i] + 1) and
/// d(i - 1, ngh[i] - 1) unless that pair is already recorded. At most 2N
/// calls.
void short_range_topology(NndState& state, const ZNormDistance& distance, DistanceCounter& counter);

/// The two short-range attempts for a single window i (at most 2 calls).
void short_range_topology_at(std::size_t i, NndState& state, const ZNormDistance& distance,
                             DistanceCounter& counter);

/// Centred moving average of nnd over window + 1 entries. Infinite entries
/// are left out of the average, a window whose own nnd is infinite stays
/// infinite, and near the borders the raw nnd is used.
[[nodiscard]] std::vector<double> smooth_nnd(const NndState& state, std::size_t window);

/// Indices of `key` by descending value, ties by ascending index.
[[nodiscard]] std::vector<std::size_t> sort_external(std::span<const double> key);

/// Propagates the neighbour of window i forward in time:
/// d(i + j, ngh[i] + j) for j = 1..window, stopping at the series end, at a
/// pair that is already recorded, or at the first step that does not improve.
void long_range_topology_forw(std::size_t i, NndState& state, const ZNormDistance& distance,
                              DistanceCounter& counter, const HstOptions& options = {});

/// Mirror image of long_range_topology_forw going back in time.
void long_range_topology_back(std::size_t i, NndState& state, const ZNormDistance& distance,
                              DistanceCounter& counter, const HstOptions& options = {});

/// HOT SAX Time: exact top-k discords.
///
/// Warm-up, short-range topology and a smoothed initial ordering give every
/// window an approximate nnd before the outer loop starts. Candidates whose
/// approximate nnd is already below best_dist are skipped without an inner
/// loop; all other distance calls refresh both endpoints. After each
/// candidate the long-range topology levels the nnd peak around it, and each
/// new best candidate re-sorts the rest of the outer loop. The nnd state is
/// kept across discords.
[[nodiscard]] DiscordResult hst_discords(const TimeSeries& ts, const SequenceStats& stats,
                                         const SaxIndex& index, const SearchParams& params,
                                         DistanceCounter& counter, Rng& rng,
                                         const HstOptions& options = {},
                                         const HstObserver& observer = {});

}  // namespace discordkit

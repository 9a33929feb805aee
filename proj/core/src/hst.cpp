#include "discordkit/hst.hpp"

#include "discordkit/errors.hpp"

#include <algorithm>
#include <numeric>

namespace discordkit {

NndState::NndState(std::size_t sequences, std::size_t window_length)
    : nnd(sequences, kInfinity), ngh(sequences, kNoNeighbor), window(window_length) {}

bool NndState::relax(std::size_t i, std::size_t j, double d) {
  bool improved = false;
  if (d < nnd[i]) {
    nnd[i] = d;
    ngh[i] = j;
    improved = true;
    if (observer.on_update) observer.on_update(i, d);
  }
  if (d < nnd[j]) {
    nnd[j] = d;
    ngh[j] = i;
    if (observer.on_update) observer.on_update(j, d);
  }
  return improved;
}

std::vector<std::size_t> warm_up(const SaxIndex& index, NndState& state,
                                 const ZNormDistance& distance, DistanceCounter& counter,
                                 Rng& rng) {
  std::vector<std::size_t> chain;
  chain.reserve(index.sequences());
  for (const auto& members : index.members) {
    const auto first = chain.size();
    chain.insert(chain.end(), members.begin(), members.end());
    rng.shuffle(std::span(chain).subspan(first));
  }
  warm_up_chain(chain, state, distance, counter);
  return chain;
}

void warm_up_chain(std::span<const std::size_t> chain, NndState& state,
                   const ZNormDistance& distance, DistanceCounter& counter) {
  for (std::size_t t = 1; t < chain.size(); ++t) {
    const std::size_t a = chain[t - 1];
    const std::size_t b = chain[t];
    if (is_self_match(a, b, state.window)) continue;
    state.relax(a, b, distance(a, b, counter));
  }
}

namespace {

bool already_paired(const NndState& state, std::size_t a, std::size_t b) {
  return state.ngh[a] == b || state.ngh[b] == a;
}

}  // namespace

void short_range_topology_at(std::size_t i, NndState& state, const ZNormDistance& distance,
                             DistanceCounter& counter) {
  const std::size_t n = state.size();
  const std::size_t g = state.ngh[i];
  if (g == kNoNeighbor) return;
  if (i + 1 < n && g + 1 < n && !already_paired(state, i + 1, g + 1)) {
    state.relax(i + 1, g + 1, distance(i + 1, g + 1, counter));
  }
  if (i >= 1 && g >= 1 && !already_paired(state, i - 1, g - 1)) {
    state.relax(i - 1, g - 1, distance(i - 1, g - 1, counter));
  }
}

void short_range_topology(NndState& state, const ZNormDistance& distance,
                          DistanceCounter& counter) {
  for (std::size_t i = 0; i < state.size(); ++i) {
    short_range_topology_at(i, state, distance, counter);
  }
}

std::vector<double> smooth_nnd(const NndState& state, std::size_t window) {
  const std::size_t n = state.size();
  const std::size_t before = window / 2;
  const std::size_t after = window - before;

  std::vector<long double> finite_sum(n + 1, 0.0L);
  std::vector<std::size_t> finite_count(n + 1, 0);
  for (std::size_t t = 0; t < n; ++t) {
    const bool finite = state.nnd[t] != kInfinity;
    finite_sum[t + 1] = finite_sum[t] + (finite ? state.nnd[t] : 0.0L);
    finite_count[t + 1] = finite_count[t] + (finite ? 1 : 0);
  }

  std::vector<double> smoothed(state.nnd);
  for (std::size_t i = before; i + after < n; ++i) {
    if (state.nnd[i] == kInfinity) continue;
    const std::size_t lo = i - before;
    const std::size_t hi = i + after + 1;
    const auto count = finite_count[hi] - finite_count[lo];
    smoothed[i] = static_cast<double>((finite_sum[hi] - finite_sum[lo]) /
                                      static_cast<long double>(count));
  }
  return smoothed;
}

std::vector<std::size_t> sort_external(std::span<const double> key) {
  std::vector<std::size_t> order(key.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return key[a] > key[b] || (key[a] == key[b] && a < b);
  });
  return order;
}

namespace {

// One step of the long-range sweep. Returns false when the sweep must end.
bool propagate(std::size_t a, std::size_t b, NndState& state, const ZNormDistance& distance,
               DistanceCounter& counter, const HstOptions& options) {
  if (state.nnd[a] < state.best_dist) {
    return options.low_neighbor == LowNeighborRule::kContinue;
  }
  if (already_paired(state, a, b)) return false;
  return state.relax(a, b, distance(a, b, counter));
}

}  // namespace

void long_range_topology_forw(std::size_t i, NndState& state, const ZNormDistance& distance,
                              DistanceCounter& counter, const HstOptions& options) {
  const std::size_t base = state.ngh[i];
  if (base == kNoNeighbor) return;
  const std::size_t n = state.size();
  for (std::size_t j = 1; j <= state.window; ++j) {
    if (i + j >= n || base + j >= n) return;
    if (!propagate(i + j, base + j, state, distance, counter, options)) return;
  }
}

void long_range_topology_back(std::size_t i, NndState& state, const ZNormDistance& distance,
                              DistanceCounter& counter, const HstOptions& options) {
  const std::size_t base = state.ngh[i];
  if (base == kNoNeighbor) return;
  for (std::size_t j = 1; j <= state.window; ++j) {
    if (j > i || j > base) return;
    if (!propagate(i - j, base - j, state, distance, counter, options)) return;
  }
}

namespace {

class HstSearch {
 public:
  HstSearch(const SaxIndex& index, NndState& state, const ZNormDistance& distance,
            DistanceCounter& counter, std::vector<std::size_t> chain)
      : index_(index), state_(state), distance_(distance), counter_(counter),
        chain_(std::move(chain)), offsets_(index.clusters() + 1, 0) {
    for (std::size_t r = 0; r < index.clusters(); ++r) {
      offsets_[r + 1] = offsets_[r] + index.members[r].size();
    }
  }

  // Minimisation of candidate i over its own cluster and then over all the
  // other clusters. Returns true if i went through the whole scan, which
  // makes nnd[i] exact.
  bool minimize(std::size_t i) {
    const std::size_t own = index_.cluster_of[i];
    if (!scan_cluster(i, own)) return false;
    for (std::size_t r = 0; r < index_.clusters(); ++r) {
      if (r != own && !scan_cluster(i, r)) return false;
    }
    return true;
  }

 private:
  bool scan_cluster(std::size_t i, std::size_t rank) {
    for (std::size_t t = offsets_[rank]; t < offsets_[rank + 1]; ++t) {
      const std::size_t j = chain_[t];
      if (is_self_match(i, j, state_.window)) continue;
      state_.relax(i, j, distance_(i, j, counter_));
      if (state_.nnd[i] < state_.best_dist) return false;
    }
    return true;
  }

  const SaxIndex& index_;
  NndState& state_;
  const ZNormDistance& distance_;
  DistanceCounter& counter_;
  std::vector<std::size_t> chain_;
  std::vector<std::size_t> offsets_;
};

}  // namespace

DiscordResult hst_discords(const TimeSeries& ts, const SequenceStats& stats,
                           const SaxIndex& index, const SearchParams& params,
                           DistanceCounter& counter, Rng& rng, const HstOptions& options,
                           const HstObserver& observer) {
  params.validate(ts.size());
  const std::size_t n = num_sequences(ts, params.window);
  if (index.sequences() != n) {
    throw ParameterError("SAX index was built for a different series or window");
  }
  const std::size_t window = params.window;
  const ZNormDistance distance(ts, stats, window);

  NndState state(n, window);
  state.observer = observer;

  const std::uint64_t calls_start = counter.calls();
  auto chain = warm_up(index, state, distance, counter, rng);
  short_range_topology(state, distance, counter);

  DiscordResult result;
  result.setup_calls = counter.calls() - calls_start;
  state.order = sort_external(smooth_nnd(state, window));
  HstSearch search(index, state, distance, counter, std::move(chain));
  std::vector<bool> exact(n, false);

  for (std::size_t m = 0; m < params.discords; ++m) {
    const std::uint64_t calls_before = m == 0 ? calls_start : counter.calls();
    if (m > 0) {
      std::vector<std::size_t> remaining;
      for (std::size_t i = 0; i < n; ++i) {
        if (!overlaps_any(i, result.discords, window)) remaining.push_back(i);
      }
      std::sort(remaining.begin(), remaining.end(), [&](std::size_t a, std::size_t b) {
        return state.nnd[a] > state.nnd[b] || (state.nnd[a] == state.nnd[b] && a < b);
      });
      // The highest nnd already known to be exact goes first.
      const auto known = std::find_if(remaining.begin(), remaining.end(),
                                      [&](std::size_t i) { return exact[i]; });
      if (known != remaining.end()) std::rotate(remaining.begin(), known, known + 1);
      state.order = std::move(remaining);
    }

    state.best_dist = 0.0;
    std::size_t best_pos = kNoNeighbor;
    auto& order = state.order;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      const std::size_t i = order[pos];
      if (overlaps_any(i, result.discords, window)) continue;

      bool can_be_discord = true;
      if (state.nnd[i] < state.best_dist) {
        can_be_discord = false;
        if (observer.on_skip) observer.on_skip(i, state.nnd[i], state.best_dist);
      }
      if (can_be_discord && !exact[i]) can_be_discord = search.minimize(i);
      if (can_be_discord) exact[i] = true;

      if (!options.gate_long_range || can_be_discord) {
        long_range_topology_forw(i, state, distance, counter, options);
        long_range_topology_back(i, state, distance, counter, options);
      }

      if (!can_be_discord) continue;
      if (observer.on_survivor) observer.on_survivor(i, state.nnd[i]);
      if (best_pos == kNoNeighbor || state.nnd[i] > state.best_dist ||
          (state.nnd[i] == state.best_dist && i < best_pos)) {
        state.best_dist = state.nnd[i];
        best_pos = i;
        std::sort(order.begin() + static_cast<std::ptrdiff_t>(pos) + 1, order.end(),
                  [&](std::size_t a, std::size_t b) {
                    return state.nnd[a] > state.nnd[b] ||
                           (state.nnd[a] == state.nnd[b] && a < b);
                  });
      }
    }

    result.calls_per_discord.push_back(counter.calls() - calls_before);
    if (best_pos == kNoNeighbor) {
      result.truncated = true;
      break;
    }
    result.discords.push_back({best_pos, state.best_dist});
  }
  return result;
}

}  // namespace discordkit

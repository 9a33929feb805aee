#pragma once

#include "discordkit/series.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace discordkit {

using SaxWord = std::string;

/// Gaussian breakpoints for an alphabet of `alphabet` symbols: the a-1
/// standard normal quantiles at 1/a, 2/a, ..., (a-1)/a.
[[nodiscard]] std::vector<double> breakpoints(std::size_t alphabet);

/// Piecewise aggregate approximation of the z-normalised window `i`: the
/// means of `segments` equal blocks. Flat windows give all zeros.
[[nodiscard]] std::vector<double> paa(const TimeSeries& ts, const SequenceStats& stats,
                                      std::size_t i, std::size_t window, std::size_t segments);

/// Maps each PAA value to the first cell m with value < brk[m] (or the last
/// cell). A value equal to a breakpoint goes to the upper cell. Symbols are
/// rendered 'a', 'b', 'c', ...
[[nodiscard]] SaxWord sax_word(std::span<const double> paa_values, std::span<const double> brk);

/// SAX clustering of every window of a series.
struct SaxIndex {
  /// SAX word of each window, indexed by start position.
  std::vector<SaxWord> word_of;
  /// Non-empty cluster words by ascending size, ties by word.
  std::vector<SaxWord> cluster_order;
  /// members[r] lists the windows of cluster_order[r] by ascending position.
  std::vector<std::vector<std::size_t>> members;
  /// Rank (position in cluster_order) of each window's cluster.
  std::vector<std::size_t> cluster_of;
  /// Word -> rank in cluster_order.
  std::map<SaxWord, std::size_t> rank_of;

  [[nodiscard]] std::size_t sequences() const noexcept { return word_of.size(); }
  [[nodiscard]] std::size_t clusters() const noexcept { return cluster_order.size(); }
  [[nodiscard]] const std::vector<std::size_t>& cluster(const SaxWord& word) const {
    return members.at(rank_of.at(word));
  }
};

[[nodiscard]] SaxIndex build_index(const TimeSeries& ts, const SequenceStats& stats,
                                   const SearchParams& params);

}  // namespace discordkit

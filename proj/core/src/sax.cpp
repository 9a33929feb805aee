#include "discordkit/sax.hpp"

#include "discordkit/errors.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <numeric>

namespace discordkit {

std::vector<double> breakpoints(std::size_t alphabet) {
  if (alphabet < 2 || alphabet > 20) {
    throw ParameterError("alphabet size must be in [2, 20], got " + std::to_string(alphabet));
  }
  const boost::math::normal_distribution<double> standard;
  std::vector<double> brk(alphabet - 1);
  for (std::size_t m = 1; m < alphabet; ++m) {
    if (2 * m == alphabet) {
      brk[m - 1] = 0.0;  // exact median
    } else {
      brk[m - 1] = boost::math::quantile(standard, static_cast<double>(m) /
                                                       static_cast<double>(alphabet));
    }
  }
  return brk;
}

std::vector<double> paa(const TimeSeries& ts, const SequenceStats& stats, std::size_t i,
                        std::size_t window, std::size_t segments) {
  if (segments == 0 || window % segments != 0) {
    throw ParameterError("PAA segment count " + std::to_string(segments) +
                         " must divide the sequence length " + std::to_string(window));
  }
  if (i >= stats.size() || i + window > ts.size()) {
    throw ParameterError("window " + std::to_string(i) + " is out of range");
  }
  std::vector<double> out(segments, 0.0);
  const double sigma = stats.sigma[i];
  if (sigma < kFlatSigma) return out;

  const std::size_t block = window / segments;
  const auto points = ts.points().subspan(i, window);
  for (std::size_t b = 0; b < segments; ++b) {
    double sum = 0.0;
    for (std::size_t t = b * block; t < (b + 1) * block; ++t) sum += points[t];
    out[b] = (sum / static_cast<double>(block) - stats.mu[i]) / sigma;
  }
  return out;
}

SaxWord sax_word(std::span<const double> paa_values, std::span<const double> brk) {
  SaxWord word;
  word.reserve(paa_values.size());
  for (double v : paa_values) {
    const auto cell = std::upper_bound(brk.begin(), brk.end(), v) - brk.begin();
    word.push_back(static_cast<char>('a' + cell));
  }
  return word;
}

SaxIndex build_index(const TimeSeries& ts, const SequenceStats& stats, const SearchParams& params) {
  params.validate(ts.size());
  const std::size_t n = num_sequences(ts, params.window);
  if (stats.size() != n) {
    throw ParameterError("sequence statistics do not match the series and window");
  }
  const auto brk = breakpoints(params.alphabet);

  SaxIndex index;
  index.word_of.reserve(n);
  std::map<SaxWord, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    const auto values = paa(ts, stats, i, params.window, params.segments);
    auto word = sax_word(values, brk);
    groups[word].push_back(i);
    index.word_of.push_back(std::move(word));
  }

  // std::map iterates words lexicographically, so a stable sort by size
  // leaves equal-sized clusters in word order.
  std::vector<std::pair<SaxWord, std::vector<std::size_t>>> sorted(
      std::make_move_iterator(groups.begin()), std::make_move_iterator(groups.end()));
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& lhs, const auto& rhs) {
    return lhs.second.size() < rhs.second.size();
  });

  index.cluster_of.assign(n, 0);
  for (std::size_t rank = 0; rank < sorted.size(); ++rank) {
    auto& [word, members] = sorted[rank];
    for (std::size_t i : members) index.cluster_of[i] = rank;
    index.rank_of.emplace(word, rank);
    index.cluster_order.push_back(word);
    index.members.push_back(std::move(members));
  }
  return index;
}

}  // namespace discordkit

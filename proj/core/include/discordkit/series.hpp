#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace discordkit {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Marker for "no neighbour known yet" in ngh arrays.
inline constexpr std::size_t kNoNeighbor = std::numeric_limits<std::size_t>::max();

/// Windows whose standard deviation falls below this are treated as flat:
/// their z-normalised form is the all-zeros vector.
inline constexpr double kFlatSigma = 1e-12;

/// Raw samples of a time series. Immutable once built; every point is finite
/// and there are at least two of them.
class TimeSeries {
 public:
  explicit TimeSeries(std::vector<double> points);

  [[nodiscard]] std::span<const double> points() const noexcept { return points_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return points_[i]; }

 private:
  std::vector<double> points_;
};

/// Parameters shared by every discord search.
struct SearchParams {
  std::size_t window = 0;    // sequence length s
  std::size_t segments = 0;  // PAA segments, must divide window
  std::size_t alphabet = 0;  // SAX alphabet size, 2..20
  std::size_t discords = 1;  // k
  std::uint64_t seed = 0;

  /// Throws ParameterError unless the parameters are usable on a series of
  /// `series_length` points.
  void validate(std::size_t series_length) const;
};

/// Number of length-`window` sequences in the series: N_tot - s + 1.
[[nodiscard]] std::size_t num_sequences(const TimeSeries& ts, std::size_t window);

/// True iff windows starting at i and j overlap (|i - j| < window).
[[nodiscard]] constexpr bool is_self_match(std::size_t i, std::size_t j, std::size_t window) noexcept {
  return (i > j ? i - j : j - i) < window;
}

/// Per-window population mean and standard deviation.
struct SequenceStats {
  std::vector<double> mu;
  std::vector<double> sigma;

  [[nodiscard]] std::size_t size() const noexcept { return mu.size(); }
};

/// O(N_tot) sliding statistics. Constant windows get sigma = 0.
[[nodiscard]] SequenceStats compute_stats(const TimeSeries& ts, std::size_t window);

/// Counts calls to the distance function. One per search run, never shared.
class DistanceCounter {
 public:
  void add(std::uint64_t n = 1) noexcept { calls_ += n; }
  [[nodiscard]] std::uint64_t calls() const noexcept { return calls_; }
  void reset() noexcept { calls_ = 0; }

 private:
  std::uint64_t calls_ = 0;
};

/// Z-normalised Euclidean distance between two windows of one series.
///
/// The value is computed from the scalar product of the two windows together
/// with their precomputed means and standard deviations:
///
///   d(a, b) = sqrt(2s (1 - (a.b - s mu_a mu_b) / (s sigma_a sigma_b)))
///
/// The series is shifted by its global mean first to limit cancellation in
/// a.b - s mu_a mu_b. The radicand is clamped to [0, 4s]. Flat windows
/// (sigma < kFlatSigma) z-normalise to zeros, so two flat windows are at
/// distance 0 and a flat and a non-flat window are at distance sqrt(s).
///
/// d(i, j) and d(j, i) are bit-identical. Every call increments the counter
/// by exactly one, including calls that end up over the abandon threshold.
class ZNormDistance {
 public:
  ZNormDistance(const TimeSeries& ts, const SequenceStats& stats, std::size_t window);

  [[nodiscard]] std::size_t window() const noexcept { return window_; }
  [[nodiscard]] std::size_t sequences() const noexcept { return sigma_.size(); }

  /// Throws ContractViolation on a self-match pair or out-of-range index.
  double operator()(std::size_t i, std::size_t j, DistanceCounter& counter) const;

  /// Same as operator() but returns nullopt when the distance exceeds
  /// `abandon_at`. Callers that only keep values below a running minimum
  /// pass that minimum here.
  std::optional<double> bounded(std::size_t i, std::size_t j, double abandon_at,
                                DistanceCounter& counter) const;

 private:
  [[nodiscard]] double evaluate(std::size_t i, std::size_t j) const;
  void check_pair(std::size_t i, std::size_t j) const;

  std::size_t window_;
  std::vector<double> centered_;
  std::vector<double> centered_mu_;
  std::vector<double> sigma_;
};

}  // namespace discordkit

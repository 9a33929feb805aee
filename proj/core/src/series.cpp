#include "discordkit/series.hpp"

#include "discordkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace discordkit {

TimeSeries::TimeSeries(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw ParameterError("a time series needs at least 2 points, got " +
                         std::to_string(points_.size()));
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i])) {
      throw ParameterError("time series point " + std::to_string(i) + " is not finite");
    }
  }
}

void SearchParams::validate(std::size_t series_length) const {
  if (window < 4) {
    throw ParameterError("sequence length must be at least 4, got " + std::to_string(window));
  }
  if (window > series_length) {
    throw ParameterError("sequence length " + std::to_string(window) +
                         " exceeds series length " + std::to_string(series_length));
  }
  if (segments == 0 || window % segments != 0) {
    throw ParameterError("PAA segment count " + std::to_string(segments) +
                         " must divide the sequence length " + std::to_string(window));
  }
  if (alphabet < 2 || alphabet > 20) {
    throw ParameterError("alphabet size must be in [2, 20], got " + std::to_string(alphabet));
  }
  const std::size_t n = series_length - window + 1;
  const std::size_t max_discords = n / window + 1;
  if (discords < 1 || discords > max_discords) {
    throw ParameterError("discord count must be in [1, " + std::to_string(max_discords) +
                         "], got " + std::to_string(discords));
  }
}

std::size_t num_sequences(const TimeSeries& ts, std::size_t window) {
  if (window == 0 || window > ts.size()) {
    throw ParameterError("sequence length " + std::to_string(window) +
                         " is not in [1, " + std::to_string(ts.size()) + "]");
  }
  return ts.size() - window + 1;
}

namespace {

double global_mean(std::span<const double> points) {
  long double sum = 0.0L;
  for (double p : points) sum += p;
  return static_cast<double>(sum / static_cast<long double>(points.size()));
}

// Two-pass moments of one window, used when the prefix sums lose too many digits.
void direct_moments(const double* x, std::size_t window, long double& m, long double& var) {
  const auto s = static_cast<long double>(window);
  long double sum = 0.0L;
  for (std::size_t t = 0; t < window; ++t) sum += x[t];
  m = sum / s;
  long double sq = 0.0L;
  for (std::size_t t = 0; t < window; ++t) {
    const long double c = x[t] - m;
    sq += c * c;
  }
  var = sq / s;
}

// Window means and population deviations of `points` via prefix sums in
// extended precision. `points` should already be roughly centred. Windows whose
// variance is small next to the rounding error of the prefix sums are redone
// directly.
void sliding_moments(std::span<const double> points, std::size_t window,
                     std::vector<double>& mu, std::vector<double>& sigma) {
  constexpr long double kEps = std::numeric_limits<long double>::epsilon();
  constexpr long double kMaxRelError = 1e-13L;
  const std::size_t n = points.size() - window + 1;
  std::vector<long double> sum(points.size() + 1, 0.0L);
  std::vector<long double> abs_sum(points.size() + 1, 0.0L);
  std::vector<long double> sum_sq(points.size() + 1, 0.0L);
  for (std::size_t t = 0; t < points.size(); ++t) {
    const long double p = points[t];
    sum[t + 1] = sum[t] + p;
    abs_sum[t + 1] = abs_sum[t] + std::abs(p);
    sum_sq[t + 1] = sum_sq[t] + p * p;
  }
  mu.resize(n);
  sigma.resize(n);
  const auto s = static_cast<long double>(window);
  for (std::size_t i = 0; i < n; ++i) {
    long double m = (sum[i + window] - sum[i]) / s;
    long double var = (sum_sq[i + window] - sum_sq[i]) / s - m * m;
    const long double var_error = kEps * (sum_sq[i + window] + sum_sq[i]) / s;
    const long double mean_error = kEps * (abs_sum[i + window] + abs_sum[i]) / s;
    if (var_error > kMaxRelError * var || mean_error * mean_error > kMaxRelError * var) {
      direct_moments(points.data() + i, window, m, var);
    }
    mu[i] = static_cast<double>(m);
    sigma[i] = var > 0.0L ? static_cast<double>(std::sqrt(var)) : 0.0;
  }
}

}  // namespace

SequenceStats compute_stats(const TimeSeries& ts, std::size_t window) {
  const std::size_t n = num_sequences(ts, window);
  const double shift = global_mean(ts.points());
  std::vector<double> centered(ts.size());
  std::transform(ts.points().begin(), ts.points().end(), centered.begin(),
                 [shift](double p) { return p - shift; });

  SequenceStats stats;
  sliding_moments(centered, window, stats.mu, stats.sigma);
  for (std::size_t i = 0; i < n; ++i) stats.mu[i] += shift;
  return stats;
}

ZNormDistance::ZNormDistance(const TimeSeries& ts, const SequenceStats& stats, std::size_t window)
    : window_(window), sigma_(stats.sigma) {
  if (stats.size() != num_sequences(ts, window)) {
    throw ParameterError("sequence statistics do not match the series and window");
  }
  const double shift = global_mean(ts.points());
  centered_.resize(ts.size());
  std::transform(ts.points().begin(), ts.points().end(), centered_.begin(),
                 [shift](double p) { return p - shift; });
  centered_mu_.resize(stats.size());
  std::transform(stats.mu.begin(), stats.mu.end(), centered_mu_.begin(),
                 [shift](double m) { return m - shift; });
}

void ZNormDistance::check_pair(std::size_t i, std::size_t j) const {
  if (i >= sigma_.size() || j >= sigma_.size()) {
    throw ContractViolation("distance requested for out-of-range window " +
                            std::to_string(std::max(i, j)));
  }
  if (is_self_match(i, j, window_)) {
    throw ContractViolation("distance requested for self-match pair (" + std::to_string(i) +
                            ", " + std::to_string(j) + ")");
  }
}

double ZNormDistance::evaluate(std::size_t i, std::size_t j) const {
  // Canonical argument order keeps d(i, j) and d(j, i) bit-identical.
  const std::size_t a = std::min(i, j);
  const std::size_t b = std::max(i, j);
  const bool flat_a = sigma_[a] < kFlatSigma;
  const bool flat_b = sigma_[b] < kFlatSigma;
  const auto s = static_cast<double>(window_);
  if (flat_a || flat_b) {
    return flat_a && flat_b ? 0.0 : std::sqrt(s);
  }

  const double* x = centered_.data() + a;
  const double* y = centered_.data() + b;
  const double mx = centered_mu_[a];
  const double my = centered_mu_[b];
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  std::size_t t = 0;
  for (; t + 4 <= window_; t += 4) {
    acc0 += (x[t] - mx) * (y[t] - my);
    acc1 += (x[t + 1] - mx) * (y[t + 1] - my);
    acc2 += (x[t + 2] - mx) * (y[t + 2] - my);
    acc3 += (x[t + 3] - mx) * (y[t + 3] - my);
  }
  for (; t < window_; ++t) acc0 += (x[t] - mx) * (y[t] - my);
  const double cov = (acc0 + acc1) + (acc2 + acc3);

  const double corr = cov / (s * sigma_[a] * sigma_[b]);
  const double radicand = std::clamp(2.0 * s * (1.0 - corr), 0.0, 4.0 * s);
  return std::sqrt(radicand);
}

double ZNormDistance::operator()(std::size_t i, std::size_t j, DistanceCounter& counter) const {
  check_pair(i, j);
  counter.add();
  return evaluate(i, j);
}

std::optional<double> ZNormDistance::bounded(std::size_t i, std::size_t j, double abandon_at,
                                             DistanceCounter& counter) const {
  check_pair(i, j);
  counter.add();
  const double d = evaluate(i, j);
  if (d > abandon_at) return std::nullopt;
  return d;
}

}  // namespace discordkit

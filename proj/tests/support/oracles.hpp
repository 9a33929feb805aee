#pragma once

// Independent reference implementations used only by the tests. Nothing here
// shares code with the library beyond the TimeSeries container.

#include "discordkit/series.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

struct Stats {
  double mu;
  double sigma;
};

// Per-window mean and population sigma, recomputed from scratch (two pass).
inline Stats window_stats(const discordkit::TimeSeries& ts, std::size_t i, std::size_t s) {
  double sum = 0.0;
  for (std::size_t t = 0; t < s; ++t) sum += ts[i + t];
  const double mu = sum / static_cast<double>(s);
  double ss = 0.0;
  for (std::size_t t = 0; t < s; ++t) ss += (ts[i + t] - mu) * (ts[i + t] - mu);
  return {mu, std::sqrt(ss / static_cast<double>(s))};
}

inline std::vector<double> znorm(const discordkit::TimeSeries& ts, std::size_t i, std::size_t s) {
  const Stats st = window_stats(ts, i, s);
  std::vector<double> z(s, 0.0);
  if (st.sigma < discordkit::kFlatSigma) return z;
  for (std::size_t t = 0; t < s; ++t) z[t] = (ts[i + t] - st.mu) / st.sigma;
  return z;
}

// Direct Euclidean distance between the two z-normalised windows.
inline double distance(const discordkit::TimeSeries& ts, std::size_t i, std::size_t j,
                       std::size_t s) {
  const auto a = znorm(ts, i, s);
  const auto b = znorm(ts, j, s);
  double sum = 0.0;
  for (std::size_t t = 0; t < s; ++t) sum += (a[t] - b[t]) * (a[t] - b[t]);
  return std::sqrt(sum);
}

// Exact nnd of every window with the direct distance; +inf when no partner.
inline std::vector<double> nnd_profile(const discordkit::TimeSeries& ts, std::size_t s) {
  const std::size_t n = ts.size() - s + 1;
  std::vector<double> nnd(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + s; j < n; ++j) {
      const double d = distance(ts, i, j, s);
      nnd[i] = std::min(nnd[i], d);
      nnd[j] = std::min(nnd[j], d);
    }
  }
  return nnd;
}

// Ordered pairs (i, j) with |i - j| >= s, by enumeration.
inline std::uint64_t count_valid_pairs(std::size_t n, std::size_t s) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((i > j ? i - j : j - i) >= s) ++count;
    }
  }
  return count;
}

// Random walk from the standard library engine, for tests that need data
// not produced by the library's own generators.
inline discordkit::TimeSeries random_walk(std::size_t length, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> step(0.0, 1.0);
  std::vector<double> p(length);
  double x = 0.0;
  for (auto& v : p) {
    x += step(gen);
    v = x;
  }
  return discordkit::TimeSeries(std::move(p));
}

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace oracle

#pragma once

#include <cstddef>
#include <cstdint>

namespace discordkit {

/// Cost per sequence: distance calls / (N * k).
[[nodiscard]] double cps(double calls, std::size_t sequences, std::size_t discords);

/// Ratio of distance calls, baseline over subject (> 1 means the subject is
/// cheaper).
[[nodiscard]] double d_speedup(double baseline_calls, double subject_calls);

/// Ratio of wall times, baseline over subject.
[[nodiscard]] double t_speedup(double baseline_seconds, double subject_seconds);

/// Below this wall time (seconds) for the faster run a T-speedup is dominated
/// by work outside the distance function and is reported as low confidence.
inline constexpr double kTimingConfidenceSeconds = 1.0;

[[nodiscard]] bool t_speedup_low_confidence(double baseline_seconds, double subject_seconds);

}  // namespace discordkit

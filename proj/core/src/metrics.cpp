#include "discordkit/metrics.hpp"

#include "discordkit/errors.hpp"

#include <algorithm>

namespace discordkit {

double cps(double calls, std::size_t sequences, std::size_t discords) {
  if (sequences == 0 || discords == 0) {
    throw ParameterError("cost per sequence needs N >= 1 and k >= 1");
  }
  return calls / (static_cast<double>(sequences) * static_cast<double>(discords));
}

double d_speedup(double baseline_calls, double subject_calls) {
  if (!(subject_calls > 0.0)) throw ParameterError("D-speedup denominator must be positive");
  return baseline_calls / subject_calls;
}

double t_speedup(double baseline_seconds, double subject_seconds) {
  if (!(subject_seconds > 0.0)) throw ParameterError("T-speedup denominator must be positive");
  return baseline_seconds / subject_seconds;
}

bool t_speedup_low_confidence(double baseline_seconds, double subject_seconds) {
  return std::min(baseline_seconds, subject_seconds) < kTimingConfidenceSeconds;
}

}  // namespace discordkit

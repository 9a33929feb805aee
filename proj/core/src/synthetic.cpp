#include "discordkit/synthetic.hpp"

#include "discordkit/errors.hpp"
#include "discordkit/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace discordkit {

void SyntheticSpec::validate() const {
  if (length < 2) throw ParameterError("synthetic series needs at least 2 points");
  if (!(noise >= 0.0) || !std::isfinite(noise)) {
    throw ParameterError("noise amplitude must be a finite value >= 0");
  }
}

TimeSeries gen_sine_noise(const SyntheticSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::vector<double> points(spec.length);
  for (std::size_t i = 0; i < spec.length; ++i) {
    const double eps = rng.uniform01();
    points[i] = (std::sin(0.1 * static_cast<double>(i)) + spec.noise * eps + 1.0) / 2.5;
  }
  return TimeSeries(std::move(points));
}

TimeSeries gen_random_walk(std::size_t length, std::uint64_t seed) {
  if (length < 2) throw ParameterError("random walk needs at least 2 points");
  Rng rng(seed);
  std::vector<double> points(length);
  double level = 0.0;
  for (std::size_t i = 0; i < length; ++i) {
    points[i] = level;
    // Box-Muller; 1 - u keeps the logarithm finite.
    const double u = 1.0 - rng.uniform01();
    const double v = rng.uniform01();
    level += std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
  }
  return TimeSeries(std::move(points));
}

}  // namespace discordkit

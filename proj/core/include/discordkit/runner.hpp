#pragma once

#include "discordkit/hst.hpp"
#include "discordkit/io.hpp"
#include "discordkit/report.hpp"
#include "discordkit/synthetic.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace discordkit {

/// Runs one search and times it. Statistics, SAX index and search are all
/// inside the timed region; loading the series is not.
[[nodiscard]] SearchReport run_search(Algorithm algorithm, const TimeSeries& ts,
                                      const SearchParams& params, std::string dataset = {},
                                      const HstOptions& options = {});

struct RandomWalkSpec {
  std::size_t length = 0;
  std::uint64_t seed = 0;
};

/// Where a benchmark series comes from.
struct DatasetSpec {
  std::string id;
  std::variant<std::filesystem::path, SyntheticSpec, RandomWalkSpec> source;

  [[nodiscard]] TimeSeries load() const;
};

struct BenchmarkConfig {
  std::vector<DatasetSpec> datasets;
  std::vector<Algorithm> algorithms;
  SearchParams params;  // params.seed is the base seed
  std::size_t runs = 1;
  std::optional<std::filesystem::path> output;
  ReportFormat format = ReportFormat::kJson;
  /// Run cells one after another so that wall times are comparable.
  bool serial_timing = false;

  void validate() const;
};

/// Parses the flat key = value config format (see docs/bench-config.md).
/// Relative dataset paths are resolved against `base_dir`.
[[nodiscard]] BenchmarkConfig parse_config(std::string_view text,
                                           const std::filesystem::path& base_dir = {});
[[nodiscard]] BenchmarkConfig load_config(const std::filesystem::path& path);

/// All runs of one (dataset, algorithm) pair.
struct CellSummary {
  std::string dataset;
  std::string algorithm;
  std::size_t sequences = 0;
  std::size_t discords_found = 0;
  std::vector<SearchReport> runs;
  double mean_calls = 0.0;
  std::uint64_t min_calls = 0;
  std::uint64_t max_calls = 0;
  double mean_wall_time = 0.0;
  double cps = 0.0;  // from mean_calls
};

/// Runs every cell `runs` times with seeds base, base + 1, ... and summarises
/// them. Throws CorrectnessError if two runs of a cell, or two algorithms on
/// the same dataset, disagree on the discords.
[[nodiscard]] std::vector<CellSummary> run_benchmark(const BenchmarkConfig& config);

/// D-speedup / T-speedup of `subject` over `baseline` for each dataset where
/// both were run.
struct SpeedupRow {
  std::string dataset;
  double d_speedup = 0.0;
  double t_speedup = 0.0;
  bool t_low_confidence = false;
};
[[nodiscard]] std::vector<SpeedupRow> speedups(const std::vector<CellSummary>& cells,
                                               std::string_view baseline,
                                               std::string_view subject);

void write_summary(const std::vector<CellSummary>& cells, ReportFormat format, std::ostream& out);

/// Positions equal and nnds within `tolerance` (infinities must match).
[[nodiscard]] bool same_discords(const std::vector<Discord>& a, const std::vector<Discord>& b,
                                 double tolerance = 1e-9);

}  // namespace discordkit

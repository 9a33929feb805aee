#include "discordkit/runner.hpp"

#include "discordkit/errors.hpp"
#include "discordkit/exact.hpp"
#include "discordkit/hotsax.hpp"
#include "discordkit/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

namespace discordkit {

std::string_view to_string(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::kBrute: return "brute";
    case Algorithm::kHotSax: return "hotsax";
    case Algorithm::kHst: return "hst";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "brute") return Algorithm::kBrute;
  if (name == "hotsax") return Algorithm::kHotSax;
  if (name == "hst") return Algorithm::kHst;
  throw ParameterError("unknown algorithm '" + std::string(name) +
                       "' (expected brute, hotsax or hst)");
}

SearchReport run_search(Algorithm algorithm, const TimeSeries& ts, const SearchParams& params,
                        std::string dataset, const HstOptions& options) {
  params.validate(ts.size());
  DistanceCounter counter;
  Rng rng(params.seed);

  const auto start = std::chrono::steady_clock::now();
  const SequenceStats stats = compute_stats(ts, params.window);
  DiscordResult result;
  switch (algorithm) {
    case Algorithm::kBrute:
      result = brute_force_discords(ts, stats, params, counter);
      break;
    case Algorithm::kHotSax:
      result = hotsax_discords(ts, stats, build_index(ts, stats, params), params, counter, rng);
      break;
    case Algorithm::kHst:
      result = hst_discords(ts, stats, build_index(ts, stats, params), params, counter, rng,
                            options);
      break;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  SearchReport report;
  report.algorithm = std::string(to_string(algorithm));
  report.dataset = std::move(dataset);
  report.params = params;
  report.sequences = stats.size();
  report.discords = std::move(result.discords);
  report.distance_calls = counter.calls();
  report.calls_per_discord = std::move(result.calls_per_discord);
  report.setup_calls = result.setup_calls;
  report.wall_time = elapsed.count();
  report.truncated = result.truncated;
  report.cps = cps(static_cast<double>(report.distance_calls), report.sequences,
                   std::max<std::size_t>(1, report.discords.size()));
  return report;
}

TimeSeries DatasetSpec::load() const {
  return std::visit(
      [](const auto& src) -> TimeSeries {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, std::filesystem::path>) {
          return load_series(src);
        } else if constexpr (std::is_same_v<T, SyntheticSpec>) {
          return gen_sine_noise(src);
        } else {
          return gen_random_walk(src.length, src.seed);
        }
      },
      source);
}

void BenchmarkConfig::validate() const {
  if (datasets.empty()) throw ParameterError("benchmark config lists no dataset");
  if (algorithms.empty()) throw ParameterError("benchmark config lists no algorithm");
  if (runs < 1) throw ParameterError("runs per cell must be at least 1");
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, std::string_view delims) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto next = s.find_first_of(delims, pos);
    auto piece = trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (!piece.empty()) out.push_back(std::move(piece));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

template <typename T>
T parse_number(const std::string& text, const std::string& where) {
  try {
    std::size_t used = 0;
    T value{};
    if constexpr (std::is_floating_point_v<T>) {
      value = static_cast<T>(std::stod(text, &used));
    } else {
      if (!text.empty() && text.front() == '-') throw std::invalid_argument("negative");
      value = static_cast<T>(std::stoull(text, &used));
    }
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw IoError(where + ": invalid number '" + text + "'");
  }
}

DatasetSpec parse_dataset(const std::string& value, const std::filesystem::path& base_dir,
                          const std::string& where) {
  const auto words = split(value, " \t");
  if (words.empty()) throw IoError(where + ": empty dataset entry");
  const std::string& kind = words[0];

  std::map<std::string, std::string> options;
  std::vector<std::string> positional;
  for (std::size_t w = 1; w < words.size(); ++w) {
    const auto eq = words[w].find('=');
    if (eq == std::string::npos) {
      positional.push_back(words[w]);
    } else {
      options[words[w].substr(0, eq)] = words[w].substr(eq + 1);
    }
  }
  auto take = [&](const std::string& key) -> std::optional<std::string> {
    auto it = options.find(key);
    if (it == options.end()) return std::nullopt;
    auto v = it->second;
    options.erase(it);
    return v;
  };
  auto required = [&](const std::string& key) {
    auto v = take(key);
    if (!v) throw IoError(where + ": dataset '" + kind + "' needs " + key + "=...");
    return *v;
  };

  DatasetSpec spec;
  auto id = take("id");
  if (kind == "file") {
    if (positional.size() != 1) throw IoError(where + ": 'file' expects exactly one path");
    std::filesystem::path path = positional[0];
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    spec.id = id ? *id : std::filesystem::path(positional[0]).stem().string();
    spec.source = path;
  } else if (kind == "sine") {
    SyntheticSpec s;
    s.length = parse_number<std::size_t>(required("length"), where);
    s.noise = parse_number<double>(required("noise"), where);
    s.seed = parse_number<std::uint64_t>(take("seed").value_or("0"), where);
    s.validate();
    if (!id) {
      std::ostringstream name;
      name << "sine(n=" << s.length << ",E=" << s.noise << ",seed=" << s.seed << ")";
      spec.id = name.str();
    } else {
      spec.id = *id;
    }
    spec.source = s;
  } else if (kind == "walk") {
    RandomWalkSpec s;
    s.length = parse_number<std::size_t>(required("length"), where);
    s.seed = parse_number<std::uint64_t>(take("seed").value_or("0"), where);
    if (!id) {
      std::ostringstream name;
      name << "walk(n=" << s.length << ",seed=" << s.seed << ")";
      spec.id = name.str();
    } else {
      spec.id = *id;
    }
    spec.source = s;
  } else {
    throw IoError(where + ": unknown dataset kind '" + kind + "' (expected file, sine or walk)");
  }
  if (!options.empty()) {
    throw IoError(where + ": unknown dataset option '" + options.begin()->first + "'");
  }
  if (kind != "file" && !positional.empty()) {
    throw IoError(where + ": unexpected token '" + positional[0] + "'");
  }
  return spec;
}

bool parse_bool(const std::string& text, const std::string& where) {
  if (text == "true" || text == "yes" || text == "1" || text == "on") return true;
  if (text == "false" || text == "no" || text == "0" || text == "off") return false;
  throw IoError(where + ": expected a boolean, got '" + text + "'");
}

}  // namespace

BenchmarkConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  BenchmarkConfig config;
  config.params.discords = 1;
  std::size_t line_no = 0;
  std::istringstream lines{std::string(text)};
  std::string raw;
  while (std::getline(lines, raw)) {
    ++line_no;
    const std::string where = "config line " + std::to_string(line_no);
    const auto hash = raw.find('#');
    const std::string line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw IoError(where + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));

    if (key == "dataset") {
      config.datasets.push_back(parse_dataset(value, base_dir, where));
    } else if (key == "algorithms") {
      for (const auto& name : split(value, ", \t")) config.algorithms.push_back(parse_algorithm(name));
    } else if (key == "window") {
      config.params.window = parse_number<std::size_t>(value, where);
    } else if (key == "segments") {
      config.params.segments = parse_number<std::size_t>(value, where);
    } else if (key == "alphabet") {
      config.params.alphabet = parse_number<std::size_t>(value, where);
    } else if (key == "discords") {
      config.params.discords = parse_number<std::size_t>(value, where);
    } else if (key == "seed") {
      config.params.seed = parse_number<std::uint64_t>(value, where);
    } else if (key == "runs") {
      config.runs = parse_number<std::size_t>(value, where);
    } else if (key == "output") {
      std::filesystem::path out = value;
      if (out.is_relative() && !base_dir.empty()) out = base_dir / out;
      config.output = out;
    } else if (key == "format") {
      config.format = parse_format(value);
    } else if (key == "serial_timing") {
      config.serial_timing = parse_bool(value, where);
    } else {
      throw IoError(where + ": unknown key '" + key + "'");
    }
  }
  config.validate();
  return config;
}

BenchmarkConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.parent_path());
}

bool same_discords(const std::vector<Discord>& a, const std::vector<Discord>& b, double tolerance) {
  if (a.size() != b.size()) return false;
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (a[m].position != b[m].position) return false;
    if (std::isinf(a[m].nnd) || std::isinf(b[m].nnd)) {
      if (a[m].nnd != b[m].nnd) return false;
    } else if (std::abs(a[m].nnd - b[m].nnd) > tolerance) {
      return false;
    }
  }
  return true;
}

namespace {

CellSummary run_cell(const DatasetSpec& dataset, const TimeSeries& ts, Algorithm algorithm,
                     const BenchmarkConfig& config) {
  CellSummary cell;
  cell.dataset = dataset.id;
  cell.algorithm = std::string(to_string(algorithm));
  for (std::size_t r = 0; r < config.runs; ++r) {
    SearchParams params = config.params;
    params.seed = config.params.seed + r;
    cell.runs.push_back(run_search(algorithm, ts, params, dataset.id));
  }

  const auto& first = cell.runs.front();
  for (const auto& run : cell.runs) {
    if (!same_discords(first.discords, run.discords)) {
      throw CorrectnessError("runs of " + cell.algorithm + " on " + cell.dataset +
                             " with seeds " + std::to_string(first.params.seed) + " and " +
                             std::to_string(run.params.seed) + " report different discords");
    }
  }

  cell.sequences = first.sequences;
  cell.discords_found = first.discords.size();
  double calls = 0.0;
  double wall = 0.0;
  cell.min_calls = first.distance_calls;
  cell.max_calls = first.distance_calls;
  for (const auto& run : cell.runs) {
    calls += static_cast<double>(run.distance_calls);
    wall += run.wall_time;
    cell.min_calls = std::min(cell.min_calls, run.distance_calls);
    cell.max_calls = std::max(cell.max_calls, run.distance_calls);
  }
  cell.mean_calls = calls / static_cast<double>(cell.runs.size());
  cell.mean_wall_time = wall / static_cast<double>(cell.runs.size());
  cell.cps = cps(cell.mean_calls, cell.sequences, std::max<std::size_t>(1, cell.discords_found));
  return cell;
}

}  // namespace

std::vector<CellSummary> run_benchmark(const BenchmarkConfig& config) {
  config.validate();
  std::vector<CellSummary> cells;
  for (const auto& dataset : config.datasets) {
    const TimeSeries ts = dataset.load();
    config.params.validate(ts.size());

    std::vector<CellSummary> row;
    if (config.serial_timing) {
      for (const auto algorithm : config.algorithms) {
        row.push_back(run_cell(dataset, ts, algorithm, config));
      }
    } else {
      std::vector<std::future<CellSummary>> pending;
      for (const auto algorithm : config.algorithms) {
        pending.push_back(std::async(std::launch::async, run_cell, std::cref(dataset),
                                     std::cref(ts), algorithm, std::cref(config)));
      }
      for (auto& f : pending) row.push_back(f.get());
    }

    for (const auto& cell : row) {
      if (!same_discords(row.front().runs.front().discords, cell.runs.front().discords)) {
        throw CorrectnessError(cell.algorithm + " and " + row.front().algorithm +
                               " disagree on the discords of " + dataset.id);
      }
    }
    for (auto& cell : row) cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<SpeedupRow> speedups(const std::vector<CellSummary>& cells, std::string_view baseline,
                                 std::string_view subject) {
  std::vector<SpeedupRow> rows;
  for (const auto& base : cells) {
    if (base.algorithm != baseline) continue;
    for (const auto& sub : cells) {
      if (sub.algorithm != subject || sub.dataset != base.dataset) continue;
      SpeedupRow row;
      row.dataset = base.dataset;
      row.d_speedup = d_speedup(base.mean_calls, sub.mean_calls);
      if (sub.mean_wall_time > 0.0) {
        row.t_speedup = t_speedup(base.mean_wall_time, sub.mean_wall_time);
      }
      row.t_low_confidence = t_speedup_low_confidence(base.mean_wall_time, sub.mean_wall_time);
      rows.push_back(row);
    }
  }
  return rows;
}

void write_summary(const std::vector<CellSummary>& cells, ReportFormat format, std::ostream& out) {
  using nlohmann::json;
  if (format == ReportFormat::kJson) {
    json doc = json::array();
    for (const auto& cell : cells) {
      std::ostringstream runs;
      write_report(cell.runs, ReportFormat::kJson, runs);
      doc.push_back({
          {"dataset", cell.dataset},
          {"algorithm", cell.algorithm},
          {"sequences", cell.sequences},
          {"discords_found", cell.discords_found},
          {"mean_calls", cell.mean_calls},
          {"min_calls", cell.min_calls},
          {"max_calls", cell.max_calls},
          {"mean_wall_time", cell.mean_wall_time},
          {"cps", cell.cps},
          {"runs", json::parse(runs.str())},
      });
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "dataset,algorithm,sequences,discords_found,runs,mean_calls,min_calls,max_calls,"
         "mean_wall_time,cps\n";
  for (const auto& cell : cells) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%.1f,%llu,%llu,%.6g,%.6g", cell.mean_calls,
                  static_cast<unsigned long long>(cell.min_calls),
                  static_cast<unsigned long long>(cell.max_calls), cell.mean_wall_time, cell.cps);
    out << '"' << cell.dataset << "\"," << cell.algorithm << ',' << cell.sequences << ','
        << cell.discords_found << ',' << cell.runs.size() << ',' << buf << '\n';
  }
}

}  // namespace discordkit

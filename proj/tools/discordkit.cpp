// discordkit: exact discord search, synthetic data and benchmark driver.
//
// Exit codes: 0 success, 1 bad parameters, 2 IO/parse failure, 3 internal
// correctness failure.

#include "discordkit/errors.hpp"
#include "discordkit/exact.hpp"
#include "discordkit/io.hpp"
#include "discordkit/metrics.hpp"
#include "discordkit/runner.hpp"
#include "discordkit/synthetic.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace discordkit;

constexpr int kExitParams = 1;
constexpr int kExitIo = 2;
constexpr int kExitCorrectness = 3;

struct SearchArgs {
  std::string input;
  SearchParams params{.window = 0, .segments = 4, .alphabet = 4, .discords = 1, .seed = 0};
  std::string algo = "hst";
  std::string out;
  std::string format = "json";
  std::string low_neighbor = "continue";
  bool gate_long_range = false;
};

struct GenArgs {
  SyntheticSpec spec{.length = 0, .noise = 0.0, .seed = 0};
  std::string out;
  std::string format = "text";
};

struct BenchArgs {
  std::string config;
  std::optional<std::size_t> runs;
  bool serial_timing = false;
  std::string out;
  std::string format;
};

struct ProfileArgs {
  std::string input;
  std::size_t window = 0;
  std::string out;
};

// Writes to `path`, or to stdout when it is empty.
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  fn(out);
  if (!out) throw IoError("error writing '" + path + "'");
}

int run_search_cmd(const SearchArgs& args) {
  const TimeSeries ts = load_series(args.input);
  HstOptions options;
  if (args.low_neighbor == "stop") {
    options.low_neighbor = LowNeighborRule::kStop;
  } else if (args.low_neighbor != "continue") {
    throw ParameterError("--low-neighbor must be continue or stop");
  }
  options.gate_long_range = args.gate_long_range;

  const auto format = parse_format(args.format);
  const SearchReport report =
      run_search(parse_algorithm(args.algo), ts, args.params, args.input, options);
  with_output(args.out, [&](std::ostream& os) { write_report({&report, 1}, format, os); });
  return 0;
}

int run_gen_cmd(const GenArgs& args) {
  SeriesFormat format = SeriesFormat::kText;
  if (args.format == "json") {
    format = SeriesFormat::kJson;
  } else if (args.format != "text") {
    throw ParameterError("--format must be text or json");
  }
  write_series(gen_sine_noise(args.spec), args.out, format);
  return 0;
}

int run_bench_cmd(const BenchArgs& args) {
  BenchmarkConfig config = load_config(args.config);
  if (args.runs) config.runs = *args.runs;
  if (args.serial_timing) config.serial_timing = true;
  if (!args.format.empty()) config.format = parse_format(args.format);
  if (!args.out.empty()) config.output = args.out;
  config.validate();

  const auto cells = run_benchmark(config);

  std::printf("%-36s %-7s %8s %14s %10s %10s\n", "dataset", "algo", "N", "mean calls", "cps",
              "time [s]");
  for (const auto& cell : cells) {
    std::printf("%-36s %-7s %8zu %14.1f %10.2f %10.4f\n", cell.dataset.c_str(),
                cell.algorithm.c_str(), cell.sequences, cell.mean_calls, cell.cps,
                cell.mean_wall_time);
  }
  const auto rows = speedups(cells, "hotsax", "hst");
  if (!rows.empty()) {
    std::printf("\nHST over HOT SAX\n%-36s %10s %10s\n", "dataset", "D-speedup", "T-speedup");
    for (const auto& row : rows) {
      std::printf("%-36s %10.2f %10.2f%s\n", row.dataset.c_str(), row.d_speedup, row.t_speedup,
                  row.t_low_confidence ? "  (low confidence)" : "");
    }
  }

  if (config.output) {
    std::ofstream out(*config.output);
    if (!out) throw IoError("cannot write '" + config.output->string() + "'");
    write_summary(cells, config.format, out);
  }
  return 0;
}

int run_profile_cmd(const ProfileArgs& args) {
  const TimeSeries ts = load_series(args.input);
  if (args.window < 2 || args.window > ts.size()) {
    throw ParameterError("window must be in [2, " + std::to_string(ts.size()) + "]");
  }
  const auto stats = compute_stats(ts, args.window);
  const auto profile = exact_nnd_profile(ts, stats, args.window);
  with_output(args.out, [&](std::ostream& os) {
    os << "index,nnd,ngh\n";
    char buf[40];
    for (std::size_t i = 0; i < profile.nnd.size(); ++i) {
      if (profile.ngh[i] == kNoNeighbor) {
        os << i << ",inf,\n";
        continue;
      }
      std::snprintf(buf, sizeof buf, "%.17g", profile.nnd[i]);
      os << i << ',' << buf << ',' << profile.ngh[i] << '\n';
    }
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact time-series discord discovery (brute force, HOT SAX, HST)"};
  app.require_subcommand(1);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Find the top-k discords of a series");
  search_cmd->add_option("-i,--input", search.input, "Series file")->required();
  search_cmd->add_option("-w,--window", search.params.window, "Sequence length s")->required();
  search_cmd->add_option("-p,--paa", search.params.segments, "PAA segments P");
  search_cmd->add_option("-a,--alphabet", search.params.alphabet, "SAX alphabet size");
  search_cmd->add_option("-n,--discords", search.params.discords, "Number of discords k");
  search_cmd->add_option("--algo", search.algo, "brute | hotsax | hst");
  search_cmd->add_option("--seed", search.params.seed, "RNG seed");
  search_cmd->add_option("--out", search.out, "Report path (stdout if omitted)");
  search_cmd->add_option("--format", search.format, "json | csv");
  search_cmd->add_option("--low-neighbor", search.low_neighbor,
                         "HST long-range sweep on a low-nnd neighbour: continue | stop");
  search_cmd->add_flag("--gate-long-range", search.gate_long_range,
                       "HST: run the long-range topology only after full scans");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a noisy sine series");
  gen_cmd->add_option("--length", gen.spec.length, "Number of points")->required();
  gen_cmd->add_option("--noise", gen.spec.noise, "Noise amplitude E")->required();
  gen_cmd->add_option("--seed", gen.spec.seed, "RNG seed");
  gen_cmd->add_option("--out", gen.out, "Output path")->required();
  gen_cmd->add_option("--format", gen.format, "text | json");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark config");
  bench_cmd->add_option("--config", bench.config, "Config file")->required();
  bench_cmd->add_option("--runs", bench.runs, "Runs per cell (overrides the config)");
  bench_cmd->add_flag("--serial-timing", bench.serial_timing, "Run cells one at a time");
  bench_cmd->add_option("--out", bench.out, "Summary path (overrides the config)");
  bench_cmd->add_option("--format", bench.format, "json | csv (overrides the config)");

  ProfileArgs profile;
  auto* profile_cmd = app.add_subcommand("profile", "Dump the exact nnd profile as CSV");
  profile_cmd->add_option("-i,--input", profile.input, "Series file")->required();
  profile_cmd->add_option("-w,--window", profile.window, "Sequence length s")->required();
  profile_cmd->add_option("--out", profile.out, "Output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParams;
  }

  try {
    if (*search_cmd) return run_search_cmd(search);
    if (*gen_cmd) return run_gen_cmd(gen);
    if (*bench_cmd) return run_bench_cmd(bench);
    if (*profile_cmd) return run_profile_cmd(profile);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParams;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const CorrectnessError& e) {
    std::cerr << "correctness error: " << e.what() << '\n';
    return kExitCorrectness;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitCorrectness;
  }
  return 0;
}

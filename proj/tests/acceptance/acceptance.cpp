// Acceptance suite: one PASS/FAIL/SKIP line per criterion, exit status 1 if
// any criterion fails.

#include "discordkit/exact.hpp"
#include "discordkit/hotsax.hpp"
#include "discordkit/hst.hpp"
#include "discordkit/io.hpp"
#include "discordkit/metrics.hpp"
#include "discordkit/runner.hpp"
#include "discordkit/synthetic.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace discordkit;

namespace {

enum class Verdict { kPass, kFail, kSkip };

struct Outcome {
  Verdict verdict;
  std::string detail;
};

// Setup-phase budget, checked on every HST run made by the suite.
struct SetupLedger {
  std::size_t runs = 0;
  std::size_t over = 0;
  double worst_ratio = 0.0;

  void record(std::uint64_t setup_calls, std::size_t sequences) {
    ++runs;
    const double ratio = static_cast<double>(setup_calls) / static_cast<double>(sequences);
    worst_ratio = std::max(worst_ratio, ratio);
    if (setup_calls > 3 * static_cast<std::uint64_t>(sequences)) ++over;
  }
};

SetupLedger setup_ledger;

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

SearchReport hst_report(const TimeSeries& ts, const SearchParams& params, std::string dataset) {
  auto report = run_search(Algorithm::kHst, ts, params, std::move(dataset));
  setup_ledger.record(report.setup_calls, report.sequences);
  return report;
}

bool match(const std::vector<Discord>& got, const std::vector<Discord>& expected) {
  if (got.size() != expected.size()) return false;
  for (std::size_t m = 0; m < got.size(); ++m) {
    if (got[m].position != expected[m].position) return false;
    if (std::isinf(got[m].nnd) || std::isinf(expected[m].nnd)) {
      if (got[m].nnd != expected[m].nnd) return false;
    } else if (std::abs(got[m].nnd - expected[m].nnd) > 1e-9) {
      return false;
    }
  }
  return true;
}

// 1. HST and HOT SAX report the brute-force discords.
Outcome exactness() {
  struct Case {
    TimeSeries ts;
    std::string label;
  };
  std::vector<Case> cases;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    cases.push_back({gen_random_walk(5000, seed), fmt("walk seed=%llu", (unsigned long long)seed)});
  }
  const double noise[] = {0.01, 0.5, 5.0};
  for (std::uint64_t c = 0; c < 20; ++c) {
    const double e = noise[c % 3];
    cases.push_back({gen_sine_noise({5000, e, 1000 + c}),
                     fmt("sine E=%g seed=%llu", e, (unsigned long long)(1000 + c))});
  }

  std::size_t mismatches = 0;
  std::string first_mismatch;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const SearchParams params{
        .window = 128, .segments = 4, .alphabet = 4, .discords = 3, .seed = 500 + c};
    const auto& ts = cases[c].ts;
    const auto brute = run_search(Algorithm::kBrute, ts, params);
    const auto hotsax = run_search(Algorithm::kHotSax, ts, params);
    const auto hst = hst_report(ts, params, cases[c].label);
    for (const auto* r : {&hotsax, &hst}) {
      if (match(r->discords, brute.discords) && r->truncated == brute.truncated) continue;
      if (mismatches++ == 0) first_mismatch = r->algorithm + " on " + cases[c].label;
    }
  }
  if (mismatches > 0) {
    return {Verdict::kFail, fmt("%zu mismatches, first: %s", mismatches, first_mismatch.c_str())};
  }
  return {Verdict::kPass, fmt("%zu series, k=3, HST and HOT SAX identical to brute force",
                              cases.size())};
}

// 2. Every nnd written by HST is an upper bound of the exact value.
Outcome upper_bound() {
  std::size_t updates = 0;
  std::size_t violations = 0;
  std::size_t instances = 0;
  std::mt19937_64 gen(2024);
  for (std::uint64_t c = 0; c < 24; ++c) {
    const std::size_t windows[] = {16, 32, 64, 100};
    const std::size_t s = windows[c % 4];
    const std::size_t len = 1200 + gen() % 800;
    const TimeSeries ts = c % 2 == 0 ? gen_random_walk(len, 300 + c)
                                     : gen_sine_noise({len, c % 3 == 0 ? 0.01 : 1.0, 300 + c});
    const SearchParams params{.window = s, .segments = 4, .alphabet = 4, .discords = 3, .seed = c};
    const auto st = compute_stats(ts, s);
    const auto profile = exact_nnd_profile(ts, st, s);
    if (profile.nnd.size() > 2000) continue;
    ++instances;
    HstObserver observer;
    observer.on_update = [&](std::size_t i, double v) {
      ++updates;
      if (v < profile.nnd[i]) ++violations;
    };
    const auto index = build_index(ts, st, params);
    DistanceCounter counter;
    Rng rng(params.seed);
    const auto result = hst_discords(ts, st, index, params, counter, rng, {}, observer);
    setup_ledger.record(result.setup_calls, profile.nnd.size());
  }
  const Verdict v = violations == 0 && updates > 0 ? Verdict::kPass : Verdict::kFail;
  return {v, fmt("%zu instances, %zu nnd updates checked, %zu violations", instances, updates,
                 violations)};
}

// 4. Noisy sine sweep at 20000 points.
struct SweepPoint {
  double noise;
  double hst_cps;
  double hotsax_cps;
  double d_speedup;
};

std::vector<SweepPoint> sweep;

Outcome table4_trend() {
  const double noise[] = {0.0001, 0.001, 0.01, 0.1, 0.5, 1.0, 5.0, 10.0};
  BenchmarkConfig config;
  for (const double e : noise) {
    config.datasets.push_back({fmt("E=%g", e), SyntheticSpec{20000, e, 1}});
  }
  config.algorithms = {Algorithm::kHotSax, Algorithm::kHst};
  config.params = {.window = 120, .segments = 4, .alphabet = 4, .discords = 1, .seed = 1};
  config.runs = 10;
  const auto cells = run_benchmark(config);

  std::map<std::string, const CellSummary*> hst;
  std::map<std::string, const CellSummary*> hotsax;
  for (const auto& cell : cells) {
    (cell.algorithm == "hst" ? hst : hotsax)[cell.dataset] = &cell;
    if (cell.algorithm == "hst") {
      for (const auto& run : cell.runs) setup_ledger.record(run.setup_calls, run.sequences);
    }
  }
  for (const double e : noise) {
    const auto id = fmt("E=%g", e);
    sweep.push_back({e, hst[id]->cps, hotsax[id]->cps,
                     d_speedup(hotsax[id]->mean_calls, hst[id]->mean_calls)});
  }

  const auto& low = sweep.front();
  const bool a = low.hst_cps <= 30.0 && low.d_speedup >= 20.0;
  bool b = true;
  for (const auto& p : sweep) {
    if (p.noise <= 1.0 && p.hst_cps > 40.0) b = false;
  }
  const auto& mid = sweep[4];
  const auto& high = sweep[7];
  const bool c = high.hst_cps > mid.hst_cps && high.hotsax_cps > mid.hotsax_cps;

  std::string detail = fmt("(a) %s E=1e-4 HST cps %.1f, D-speedup %.1f; (b) %s; (c) %s", a ? "ok" : "FAILED",
                           low.hst_cps, low.d_speedup, b ? "ok" : "FAILED", c ? "ok" : "FAILED");
  return {a && b && c ? Verdict::kPass : Verdict::kFail, detail};
}

// 5. Direct and dot-product distance forms, shift and scale invariance.
Outcome distance_forms() {
  std::mt19937_64 gen(5);
  std::size_t pairs = 0;
  std::size_t bad = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 1; pairs < 100000; ++seed) {
    const TimeSeries ts = seed % 2 == 0 ? gen_random_walk(4000, seed)
                                        : gen_sine_noise({4000, 0.5 * static_cast<double>(seed % 7), seed});
    const std::size_t windows[] = {4, 16, 64, 128, 300};
    const std::size_t s = windows[seed % 5];
    const auto st = compute_stats(ts, s);
    const ZNormDistance d(ts, st, s);
    DistanceCounter counter;
    std::uniform_int_distribution<std::size_t> pick(0, ts.size() - s);
    for (int t = 0; t < 5000 && pairs < 100000; ++t) {
      const std::size_t i = pick(gen);
      const std::size_t j = pick(gen);
      if (is_self_match(i, j, s) || st.sigma[i] <= 1e-6 || st.sigma[j] <= 1e-6) continue;
      ++pairs;
      const double rel = oracle::rel_diff(d(i, j, counter), oracle::distance(ts, i, j, s));
      worst = std::max(worst, rel);
      if (rel > 1e-6) ++bad;
    }
  }

  std::size_t inv_bad = 0;
  double inv_worst = 0.0;
  std::uniform_real_distribution<double> shift(-1000.0, 1000.0);
  std::uniform_real_distribution<double> log_scale(-3.0, 3.0);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t s = 64;
    const auto base = gen_random_walk(600, seed);
    const auto st0 = compute_stats(base, s);
    const ZNormDistance d0(base, st0, s);
    const std::size_t i = gen() % 100;
    const std::size_t j = 300 + gen() % 200;
    std::vector<double> p(base.points().begin(), base.points().end());
    const double c = shift(gen);
    const double m = std::pow(10.0, log_scale(gen));
    for (std::size_t q = j; q < j + s; ++q) p[q] = c + m * p[q];
    const TimeSeries moved(std::move(p));
    const auto st = compute_stats(moved, s);
    const ZNormDistance d(moved, st, s);
    DistanceCounter counter;
    const double diff = std::abs(d(i, j, counter) - d0(i, j, counter));
    inv_worst = std::max(inv_worst, diff);
    if (diff > 1e-9) ++inv_bad;
  }
  const Verdict v = bad == 0 && inv_bad == 0 ? Verdict::kPass : Verdict::kFail;
  return {v, fmt("%zu pairs, worst relative gap %.2e; 200 shifted/scaled windows, worst %.2e",
                 pairs, worst, inv_worst)};
}

// 6. Later discords are cheap for HST, not for HOT SAX.
Outcome multi_discord() {
  const auto ts = gen_sine_noise({20000, 0.5, 1});
  double hst1 = 0.0;
  double hst10 = 0.0;
  double hs1 = 0.0;
  double hs10 = 0.0;
  const int runs = 3;
  for (int r = 0; r < runs; ++r) {
    SearchParams params{.window = 120, .segments = 4, .alphabet = 4, .discords = 1,
                        .seed = static_cast<std::uint64_t>(r + 1)};
    hst1 += static_cast<double>(hst_report(ts, params, "E=0.5").distance_calls);
    hs1 += static_cast<double>(run_search(Algorithm::kHotSax, ts, params).distance_calls);
    params.discords = 10;
    const auto h = hst_report(ts, params, "E=0.5");
    const auto s = run_search(Algorithm::kHotSax, ts, params);
    if (h.discords.size() != 10 || !match(h.discords, s.discords)) {
      return {Verdict::kFail, "HST and HOT SAX disagree on the top 10 discords"};
    }
    hst10 += static_cast<double>(h.distance_calls);
    hs10 += static_cast<double>(s.distance_calls);
  }
  const double hst_ratio = hst10 / hst1;
  const double hs_ratio = hs10 / hs1;
  const Verdict v = hst_ratio <= 5.0 && hs_ratio >= 5.0 ? Verdict::kPass : Verdict::kFail;
  return {v, fmt("k=10 over k=1 calls: HST %.2f (limit 5), HOT SAX %.2f (floor 5)", hst_ratio,
                 hs_ratio)};
}

// 7. HST cost per sequence grows slowly with s.
Outcome linearity() {
  const auto ts = gen_random_walk(50000, 7);
  // s / P = 40 at both lengths.
  double short_cps = 0.0;
  double long_cps = 0.0;
  const int runs = 3;
  for (int r = 0; r < runs; ++r) {
    const auto seed = static_cast<std::uint64_t>(r + 1);
    short_cps += hst_report(ts, {.window = 120, .segments = 3, .alphabet = 4, .discords = 1, .seed = seed},
                            "walk").cps;
    long_cps += hst_report(ts, {.window = 920, .segments = 23, .alphabet = 4, .discords = 1, .seed = seed},
                           "walk").cps;
  }
  short_cps /= runs;
  long_cps /= runs;
  const double ratio = long_cps / short_cps;
  return {ratio <= 5.0 ? Verdict::kPass : Verdict::kFail,
          fmt("cps %.2f at s=120 (P=3), %.2f at s=920 (P=23), ratio %.2f (limit 5)", short_cps,
              long_cps, ratio)};
}

// 8. Published datasets, only when they are available locally.
Outcome published_datasets() {
  const char* dir = std::getenv("DISCORDKIT_DATA_DIR");
  if (dir == nullptr || *dir == '\0') {
    return {Verdict::kSkip, "DISCORDKIT_DATA_DIR not set"};
  }
  struct Row {
    const char* file;
    std::size_t s;
    std::size_t p;
    std::size_t a;
    double hst_cps;
  };
  const Row rows[] = {
      {"ecg0606.txt", 120, 4, 4, 4},  {"ecg15.txt", 300, 4, 4, 6},
      {"nprs44.txt", 128, 4, 4, 6},   {"video.txt", 150, 5, 3, 8},
      {"nprs43.txt", 128, 4, 4, 9},   {"ecg308.txt", 300, 4, 4, 5},
      {"daily_commute.txt", 345, 15, 4, 15}, {"ecg108.txt", 300, 4, 4, 5},
      {"ecg318.txt", 300, 4, 4, 8},   {"ecg300.txt", 300, 4, 4, 12},
      {"tek17.txt", 128, 4, 4, 14},   {"dutch_power.txt", 750, 6, 3, 7},
      {"tek14.txt", 128, 4, 4, 13},   {"tek16.txt", 128, 4, 4, 14},
  };
  constexpr std::size_t kBruteLimit = 30000;
  std::size_t found = 0;
  std::size_t failed = 0;
  std::string notes;
  for (const auto& row : rows) {
    const auto path = std::filesystem::path(dir) / row.file;
    if (!std::filesystem::exists(path)) continue;
    ++found;
    const auto ts = load_series(path);
    const SearchParams params{.window = row.s, .segments = row.p, .alphabet = row.a, .discords = 1, .seed = 1};
    double cps_sum = 0.0;
    SearchReport first;
    for (std::uint64_t r = 0; r < 10; ++r) {
      auto p = params;
      p.seed = r + 1;
      auto report = hst_report(ts, p, row.file);
      cps_sum += report.cps;
      if (r == 0) first = report;
    }
    const double mean_cps = cps_sum / 10.0;
    // Brute force is only affordable on the shorter files; the rest are
    // checked against HOT SAX.
    const auto reference = ts.size() <= kBruteLimit ? run_search(Algorithm::kBrute, ts, params)
                                                    : run_search(Algorithm::kHotSax, ts, params);
    const bool exact = match(first.discords, reference.discords);
    const bool within = mean_cps <= 3.0 * row.hst_cps && mean_cps >= row.hst_cps / 3.0;
    if (!exact || !within) {
      ++failed;
      notes += fmt(" %s(cps %.1f vs %.0f%s)", row.file, mean_cps, row.hst_cps,
                   exact ? "" : ", wrong discord");
    }
  }
  if (found == 0) return {Verdict::kSkip, fmt("no known dataset file in %s", dir)};
  return {failed == 0 ? Verdict::kPass : Verdict::kFail,
          fmt("%zu datasets checked, %zu failed%s", found, failed, notes.c_str())};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "exactness against brute force", exactness},
      {2, "nnd upper-bound invariant", upper_bound},
      {4, "noise sweep trend at 20000 points", table4_trend},
      {5, "distance formula equivalence", distance_forms},
      {6, "multi-discord efficiency", multi_discord},
      {7, "cost growth with sequence length", linearity},
      {8, "published datasets (optional)", published_datasets},
  };

  std::map<int, std::pair<Outcome, std::string>> results;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {Verdict::kFail, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    results[c.id] = {outcome, fmt("%s [%.1f s]", c.name, took.count())};
  }
  results[3] = {{setup_ledger.over == 0 && setup_ledger.runs > 0 ? Verdict::kPass : Verdict::kFail,
                 fmt("%zu HST runs, %zu over 3N, worst setup calls per sequence %.3f",
                     setup_ledger.runs, setup_ledger.over, setup_ledger.worst_ratio)},
                "setup budget"};

  int failures = 0;
  for (const auto& [id, entry] : results) {
    const auto& [outcome, name] = entry;
    const char* tag = outcome.verdict == Verdict::kPass   ? "PASS"
                      : outcome.verdict == Verdict::kSkip ? "SKIP"
                                                          : "FAIL";
    if (outcome.verdict == Verdict::kFail) ++failures;
    std::printf("%s %d %s: %s\n", tag, id, name.c_str(), outcome.detail.c_str());
  }
  if (!sweep.empty()) {
    std::printf("\nnoise sweep (mean of 10 runs)\n%10s %10s %10s %10s\n", "E", "HOT SAX", "HST",
                "D-speedup");
    for (const auto& p : sweep) {
      std::printf("%10g %10.1f %10.1f %10.1f\n", p.noise, p.hotsax_cps, p.hst_cps, p.d_speedup);
    }
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}

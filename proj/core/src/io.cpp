#include "discordkit/io.hpp"

#include "discordkit/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

namespace discordkit {

using nlohmann::json;

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  throw ParameterError("unknown format '" + std::string(name) + "' (expected json or csv)");
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

std::string location(std::string_view source, std::size_t line, std::size_t column) {
  return std::string(source) + ": line " + std::to_string(line) + ", column " +
         std::to_string(column);
}

TimeSeries finish(std::vector<double> points, std::string_view source) {
  if (points.empty()) throw IoError(std::string(source) + ": no data");
  if (points.size() < 2) {
    throw IoError(std::string(source) + ": a time series needs at least 2 points");
  }
  return TimeSeries(std::move(points));
}

TimeSeries parse_json_series(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string(source) + ": " + e.what());
  }
  if (!doc.is_array()) throw IoError(std::string(source) + ": expected a JSON array of numbers");
  std::vector<double> points;
  points.reserve(doc.size());
  for (std::size_t k = 0; k < doc.size(); ++k) {
    if (!doc[k].is_number()) {
      throw IoError(std::string(source) + ": element " + std::to_string(k) + " is not a number");
    }
    points.push_back(doc[k].get<double>());
  }
  return finish(std::move(points), source);
}

}  // namespace

TimeSeries parse_series(std::string_view text, std::string_view source) {
  const auto first = text.find_first_not_of(" \t\r\n\f\v");
  if (first != std::string_view::npos && text[first] == '[') {
    return parse_json_series(text, source);
  }

  std::vector<double> points;
  std::size_t line = 1;
  std::size_t line_start = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_blank(text[pos])) {
      if (text[pos] == '\n') {
        ++line;
        line_start = pos + 1;
      }
      ++pos;
      continue;
    }
    const std::size_t begin = pos;
    while (pos < text.size() && !is_blank(text[pos])) ++pos;
    const std::string_view token = text.substr(begin, pos - begin);

    double value = 0.0;
    const char* token_begin = token.data();
    // from_chars rejects a leading '+', which some exporters emit.
    if (token.size() > 1 && token.front() == '+') ++token_begin;
    const auto [end, ec] = std::from_chars(token_begin, token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size() || !std::isfinite(value)) {
      throw IoError(location(source, line, begin - line_start + 1) + ": invalid number '" +
                    std::string(token) + "'");
    }
    points.push_back(value);
  }
  return finish(std::move(points), source);
}

TimeSeries load_series(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return parse_series(buffer.str(), path.string());
}

void write_series(const TimeSeries& ts, const std::filesystem::path& path, SeriesFormat format) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  if (format == SeriesFormat::kJson) {
    out << json(std::vector<double>(ts.points().begin(), ts.points().end())).dump() << '\n';
  } else {
    char buf[32];
    for (double p : ts.points()) {
      std::snprintf(buf, sizeof buf, "%.17g", p);
      out << buf << '\n';
    }
  }
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

namespace {

json distance_to_json(double d) {
  if (std::isinf(d)) return "inf";
  return d;
}

double distance_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInfinity;
    throw IoError("unexpected distance value '" + j.get<std::string>() + "'");
  }
  return j.get<double>();
}

json report_to_json(const SearchReport& r) {
  json discords = json::array();
  for (const auto& d : r.discords) {
    discords.push_back({{"position", d.position}, {"nnd", distance_to_json(d.nnd)}});
  }
  return {
      {"algorithm", r.algorithm},
      {"dataset", r.dataset},
      {"params",
       {{"window", r.params.window},
        {"segments", r.params.segments},
        {"alphabet", r.params.alphabet},
        {"discords", r.params.discords},
        {"seed", r.params.seed}}},
      {"sequences", r.sequences},
      {"discords", std::move(discords)},
      {"distance_calls", r.distance_calls},
      {"calls_per_discord", r.calls_per_discord},
      {"setup_calls", r.setup_calls},
      {"wall_time", r.wall_time},
      {"cps", r.cps},
      {"truncated", r.truncated},
  };
}

std::string fmt6(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

void write_report(std::span<const SearchReport> reports, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::kJson) {
    json doc = json::array();
    for (const auto& r : reports) doc.push_back(report_to_json(r));
    out << doc.dump(2) << '\n';
    return;
  }
  out << "algorithm,dataset,window,segments,alphabet,k,seed,rank,position,nnd,"
         "distance_calls,discord_calls,wall_time,cps,truncated\n";
  for (const auto& r : reports) {
    const std::string prefix = csv_field(r.algorithm) + ',' + csv_field(r.dataset) + ',' +
                               std::to_string(r.params.window) + ',' +
                               std::to_string(r.params.segments) + ',' +
                               std::to_string(r.params.alphabet) + ',' +
                               std::to_string(r.params.discords) + ',' +
                               std::to_string(r.params.seed) + ',';
    const std::string suffix = std::to_string(r.distance_calls);
    const std::string tail = fmt6(r.wall_time) + ',' + fmt6(r.cps) + ',' +
                             (r.truncated ? "true" : "false");
    if (r.discords.empty()) {
      out << prefix << ",,," << suffix << ",," << tail << '\n';
    }
    for (std::size_t m = 0; m < r.discords.size(); ++m) {
      const auto calls = m < r.calls_per_discord.size() ? r.calls_per_discord[m] : 0;
      out << prefix << (m + 1) << ',' << r.discords[m].position << ','
          << fmt6(r.discords[m].nnd) << ',' << suffix << ',' << calls << ',' << tail << '\n';
    }
  }
}

void write_report(std::span<const SearchReport> reports, ReportFormat format,
                  const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  write_report(reports, format, out);
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

std::vector<SearchReport> read_json_report(std::string_view text) {
  std::vector<SearchReport> reports;
  try {
    const json doc = json::parse(text);
    for (const auto& j : doc) {
      SearchReport r;
      r.algorithm = j.at("algorithm").get<std::string>();
      r.dataset = j.at("dataset").get<std::string>();
      const auto& p = j.at("params");
      r.params.window = p.at("window").get<std::size_t>();
      r.params.segments = p.at("segments").get<std::size_t>();
      r.params.alphabet = p.at("alphabet").get<std::size_t>();
      r.params.discords = p.at("discords").get<std::size_t>();
      r.params.seed = p.at("seed").get<std::uint64_t>();
      r.sequences = j.at("sequences").get<std::size_t>();
      for (const auto& d : j.at("discords")) {
        r.discords.push_back({d.at("position").get<std::size_t>(), distance_from_json(d.at("nnd"))});
      }
      r.distance_calls = j.at("distance_calls").get<std::uint64_t>();
      r.calls_per_discord = j.at("calls_per_discord").get<std::vector<std::uint64_t>>();
      r.setup_calls = j.at("setup_calls").get<std::uint64_t>();
      r.wall_time = j.at("wall_time").get<double>();
      r.cps = j.at("cps").get<double>();
      r.truncated = j.at("truncated").get<bool>();
      reports.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed report: ") + e.what());
  }
  return reports;
}

}  // namespace discordkit

#pragma once

#include "discordkit/report.hpp"
#include "discordkit/series.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>

namespace discordkit {

enum class ReportFormat { kJson, kCsv };
enum class SeriesFormat { kText, kJson };

/// Accepts "json" and "csv".
[[nodiscard]] ReportFormat parse_format(std::string_view name);

/// Parses whitespace/newline separated ASCII reals, or a JSON array of
/// numbers when the first non-blank character is '['. Errors name the
/// 1-based line and column of the offending token.
[[nodiscard]] TimeSeries parse_series(std::string_view text, std::string_view source = "<input>");

/// Reads a series file; IoError on failure.
[[nodiscard]] TimeSeries load_series(const std::filesystem::path& path);

/// Writes one value per line with 17 significant digits, or a JSON array.
/// Either form reloads bit-exactly through load_series.
void write_series(const TimeSeries& ts, const std::filesystem::path& path,
                  SeriesFormat format = SeriesFormat::kText);

/// JSON: an array of report objects with full double precision and +inf
/// written as "inf". CSV: one row per discord, distances with 6 significant
/// digits.
void write_report(std::span<const SearchReport> reports, ReportFormat format, std::ostream& out);
void write_report(std::span<const SearchReport> reports, ReportFormat format,
                  const std::filesystem::path& path);

/// Reads back a JSON report written by write_report.
[[nodiscard]] std::vector<SearchReport> read_json_report(std::string_view text);

}  // namespace discordkit

#pragma once

// Serialization of verification reports and generic tables.  Every number in
// a data row is written as a string; exact values are never rounded.

#include "cyclomat/verifier.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cyclomat {

inline constexpr const char* kVersion = "0.1.0";

enum class OutputFormat { json, csv, text };

/// "json", "csv" or "text"; std::nullopt otherwise.
std::optional<OutputFormat> parse_format(const std::string& s);

struct OutputOptions {
  OutputFormat format = OutputFormat::text;
  /// Adds elapsed_ms to every report.
  bool timing = false;
  /// Header comment (csv/text) or "generated" field (json) carrying a
  /// timestamp.  Off for byte-reproducible output.
  bool header = true;
  /// Echoed verbatim under "config" in JSON output.
  std::vector<std::pair<std::string, std::string>> config;
};

std::string render_reports(const std::vector<VerificationReport>& reports, const OutputOptions& opts);

/// Tables for the `table` and `explore` commands; JSON renders rows as
/// objects keyed by column name under "rows".
std::string render_table(const std::vector<std::string>& columns,
                         const std::vector<std::vector<std::string>>& rows, const OutputOptions& opts);

/// RFC 4180 quoting when needed.
std::string csv_escape(const std::string& field);

}  // namespace cyclomat

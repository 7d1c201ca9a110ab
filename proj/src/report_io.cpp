#include "cyclomat/report_io.hpp"

#include <json.hpp>

#include <chrono>
#include <ctime>
#include <sstream>

namespace cyclomat {

namespace {

using nlohmann::ordered_json;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string ms_string(double ms) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << ms;
  return os.str();
}

ordered_json envelope(const OutputOptions& opts) {
  ordered_json doc;
  doc["version"] = kVersion;
  if (opts.header) doc["generated"] = utc_timestamp();
  ordered_json cfg = ordered_json::object();
  for (const auto& [k, v] : opts.config) cfg[k] = v;
  doc["config"] = std::move(cfg);
  return doc;
}

std::string header_comment() { return std::string("# cyclomat ") + kVersion + " generated " + utc_timestamp() + "\n"; }

std::string param_text(const ReportParams& p) {
  std::string s;
  auto add = [&](const char* name, int v) {
    if (v == 0) return;
    if (!s.empty()) s += " ";
    s += std::string(name) + "=" + std::to_string(v);
  };
  add("q", p.q);
  add("p", p.p);
  add("n", p.n);
  add("k", p.k);
  if (!p.extra.empty()) {
    if (!s.empty()) s += " ";
    s += p.extra;
  }
  return s;
}

std::string num_or_empty(int v) { return v == 0 ? std::string() : std::to_string(v); }

}  // namespace

std::optional<OutputFormat> parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "text") return OutputFormat::text;
  return std::nullopt;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_reports(const std::vector<VerificationReport>& reports, const OutputOptions& opts) {
  std::ostringstream os;
  switch (opts.format) {
    case OutputFormat::json: {
      ordered_json doc = envelope(opts);
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) {
        ordered_json j;
        j["claim"] = r.claim;
        j["params"] = {{"q", num_or_empty(r.params.q)},
                       {"p", num_or_empty(r.params.p)},
                       {"n", num_or_empty(r.params.n)},
                       {"k", num_or_empty(r.params.k)},
                       {"extra", r.params.extra}};
        j["expected"] = r.expected;
        j["computed"] = r.computed;
        j["status"] = to_string(r.status);
        if (!r.note.empty()) j["note"] = r.note;
        if (opts.timing) j["elapsed_ms"] = ms_string(r.elapsed_ms);
        arr.push_back(std::move(j));
      }
      doc["reports"] = std::move(arr);
      os << doc.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv: {
      if (opts.header) os << header_comment();
      os << "claim,q,p,n,k,status,expected,computed" << (opts.timing ? ",elapsed_ms" : "") << "\n";
      for (const auto& r : reports) {
        os << csv_escape(r.claim) << ',' << num_or_empty(r.params.q) << ',' << num_or_empty(r.params.p) << ','
           << num_or_empty(r.params.n) << ',' << num_or_empty(r.params.k) << ',' << to_string(r.status) << ','
           << csv_escape(r.expected) << ',' << csv_escape(r.computed);
        if (opts.timing) os << ',' << ms_string(r.elapsed_ms);
        os << "\n";
      }
      break;
    }
    case OutputFormat::text: {
      if (opts.header) os << header_comment();
      std::size_t passed = 0, failed = 0;
      for (const auto& r : reports) {
        if (r.status == Status::pass) ++passed;
        if (r.status == Status::fail) ++failed;
        os << (r.status == Status::pass ? "PASS" : r.status == Status::fail ? "FAIL" : "INFO") << "  " << r.claim
           << "  " << param_text(r.params);
        if (opts.timing) os << "  (" << ms_string(r.elapsed_ms) << " ms)";
        os << "\n";
        if (r.status != Status::pass) {
          os << "      expected: " << r.expected << "\n      computed: " << r.computed << "\n";
          if (!r.note.empty()) os << "      note: " << r.note << "\n";
        }
      }
      os << reports.size() << " checks, " << passed << " passed, " << failed << " failed\n";
      break;
    }
  }
  return os.str();
}

std::string render_table(const std::vector<std::string>& columns,
                         const std::vector<std::vector<std::string>>& rows, const OutputOptions& opts) {
  std::ostringstream os;
  switch (opts.format) {
    case OutputFormat::json: {
      ordered_json doc = envelope(opts);
      ordered_json arr = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json j = ordered_json::object();
        for (std::size_t c = 0; c < columns.size(); ++c) j[columns[c]] = c < row.size() ? row[c] : "";
        arr.push_back(std::move(j));
      }
      doc["rows"] = std::move(arr);
      os << doc.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
    case OutputFormat::text: {
      // Text is CSV without quoting, tab separated.
      const bool csv = opts.format == OutputFormat::csv;
      const char sep = csv ? ',' : '\t';
      if (opts.header) os << header_comment();
      for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? std::string(1, sep) : "") << columns[c];
      os << "\n";
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          os << (c ? std::string(1, sep) : "") << (csv ? csv_escape(row[c]) : row[c]);
        }
        os << "\n";
      }
      break;
    }
  }
  return os.str();
}

}  // namespace cyclomat

#include "cyclomat/report_io.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace cyclomat;

namespace {

std::vector<VerificationReport> sample() {
  VerificationReport a;
  a.claim = "thm11";
  a.params = {5, 5, 1, 2, "s=1,3"};
  a.expected = "4 (mod 5)";
  a.computed = "-4 = 1 (mod 5)";
  a.status = Status::fail;
  a.note = "mismatch, see \"computed\"";
  a.elapsed_ms = 12.5;
  VerificationReport b;
  b.claim = "lerch";
  b.params.extra = "m=7";
  b.expected = b.computed = "1";
  b.status = Status::pass;
  return {a, b};
}

}  // namespace

TEST_CASE("json reports carry every value as a string") {
  OutputOptions opts;
  opts.format = OutputFormat::json;
  opts.config = {{"q_max", "49"}};
  const auto doc = nlohmann::json::parse(render_reports(sample(), opts));
  CHECK(doc["version"] == kVersion);
  CHECK(doc.contains("generated"));
  CHECK(doc["config"]["q_max"] == "49");
  const auto& r = doc["reports"];
  REQUIRE(r.size() == 2);
  CHECK(r[0]["params"]["q"] == "5");
  CHECK(r[0]["params"]["extra"] == "s=1,3");
  CHECK(r[1]["params"]["q"] == "");
  CHECK(r[0]["status"] == "fail");
  CHECK(r[0]["note"] == "mismatch, see \"computed\"");
  CHECK_FALSE(r[1].contains("note"));
  CHECK_FALSE(r[0].contains("elapsed_ms"));
  opts.timing = true;
  CHECK(nlohmann::json::parse(render_reports(sample(), opts))["reports"][0].contains("elapsed_ms"));
}

TEST_CASE("headerless output is reproducible") {
  for (auto f : {OutputFormat::json, OutputFormat::csv, OutputFormat::text}) {
    OutputOptions opts;
    opts.format = f;
    opts.header = false;
    const auto once = render_reports(sample(), opts);
    CHECK(once == render_reports(sample(), opts));
    CHECK(once.find("generated") == std::string::npos);
  }
}

TEST_CASE("csv layout and quoting") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  OutputOptions opts;
  opts.format = OutputFormat::csv;
  opts.header = false;
  const auto out = render_reports(sample(), opts);
  CHECK(out.rfind("claim,q,p,n,k,status,expected,computed\n", 0) == 0);
  CHECK(out.find("thm11,5,5,1,2,fail,4 (mod 5),-4 = 1 (mod 5)\n") != std::string::npos);
  opts.header = true;
  CHECK(render_reports(sample(), opts).rfind("# cyclomat 0.1.0 generated ", 0) == 0);
}

TEST_CASE("text summary") {
  OutputOptions opts;
  opts.header = false;
  const auto out = render_reports(sample(), opts);
  CHECK(out.find("FAIL  thm11") != std::string::npos);
  CHECK(out.find("2 checks, 1 passed, 1 failed") != std::string::npos);
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("tables") {
  OutputOptions opts;
  opts.format = OutputFormat::json;
  opts.header = false;
  const auto doc = nlohmann::json::parse(render_table({"q", "det_A"}, {{"3", "4"}, {"5", "-256"}}, opts));
  CHECK(doc["rows"][1]["det_A"] == "-256");
  opts.format = OutputFormat::csv;
  CHECK(render_table({"q", "det_A"}, {{"3", "4"}}, opts) == "q,det_A\n3,4\n");
}

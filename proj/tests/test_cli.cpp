#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" CYCLOMAT_CLI_PATH "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json json_of(const std::string& args) { return nlohmann::json::parse(run(args).out); }

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("verify --q 5 --k 1,2 --claims thm12").code == 0);
  CHECK(run("verify --q 4 --k 5").code == 2);
  CHECK(run("verify --q 6").code == 2);
  CHECK(run("verify --q 5 --claims bogus").code == 2);
  CHECK(run("verify --format xml").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("verify --q 7 --claims thm13-B2").code == 1);
}

TEST_CASE("the only failing closed form is the B_p(2) sign at p = +-1 mod 8") {
  const auto doc = json_of("verify --q-max 27 --claims thm13 --format json --no-header");
  std::vector<std::string> failing;
  for (const auto& r : doc["reports"]) {
    if (r["status"] == "fail") {
      CHECK(r["claim"] == "thm13-B2");
      failing.push_back(r["params"]["q"]);
    }
  }
  CHECK(failing == std::vector<std::string>{"7", "17", "23"});
}

TEST_CASE("table rows") {
  const auto doc = json_of("table --q 3,7,9 --format json --no-header");
  auto find = [&](const std::string& q, const std::string& k) {
    for (const auto& r : doc["rows"]) {
      if (r["q"] == q && r["k"] == k) return r;
    }
    FAIL("row missing");
    return nlohmann::json{};
  };
  const auto r91 = find("9", "1");
  CHECK(r91["det_A"] == "-16777216");
  CHECK(r91["det_B"] == "0");
  CHECK(r91["singular"] == "true");
  CHECK(find("9", "4")["det_B"] == "8/9");
  CHECK(find("3", "2")["det_A"] == "-1");
  const auto r73 = find("7", "3");
  CHECK(r73["m"] == "2");
  CHECK(r73["det_A"] == "8");
  CHECK(r73["det_B"] == "8/7");
}

TEST_CASE("explore") {
  const auto doc = json_of("explore --q 7,13 --format json --no-header");
  bool seen = false;
  for (const auto& r : doc["rows"]) {
    if (r["q"] == "7" && r["k"] == "6") {
      CHECK(r["det_A"] == "-1");
      seen = true;
    }
    if (r["q"] == "13" && r["k"] == "3") CHECK(r["det_A"] == "-768");
  }
  CHECK(seen);
}

TEST_CASE("output does not depend on the worker count") {
  const std::string args = "verify --q 5,7,8,9 --claims all --format csv --no-header";
  const auto serial = run(args + " -j 1"), parallel = run(args + " -j 4");
  CHECK(serial.code == parallel.code);
  CHECK(serial.out == parallel.out);
  CHECK_FALSE(serial.out.empty());
}

TEST_CASE("cache directory from the environment") {
  const auto dir = std::filesystem::temp_directory_path() / "cyclomat_cli_cache_test";
  std::filesystem::remove_all(dir);
  const auto r = run("table --q 25 --format csv --no-header", "CYCLOMAT_CACHE_DIR=" + dir.string());
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(dir));
  CHECK_FALSE(std::filesystem::is_empty(dir));
  std::filesystem::remove_all(dir);
}

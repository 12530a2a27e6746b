#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include "matring/report.hpp"

using namespace matring;
namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* p = std::getenv("MATRING_CLI");
  REQUIRE(p != nullptr);
  return p;
}

std::string golden_dir() {
  const char* p = std::getenv("MATRING_GOLDEN_DIR");
  REQUIRE(p != nullptr);
  return p;
}

struct Scratch {
  fs::path dir;
  Scratch(const std::string& tag) {
    dir = fs::temp_directory_path() / ("matring-cli-" + tag + "-" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string file(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

int run_env(const std::string& env, const std::string& args) {
  const std::string cmd = env + " " + cli_path() + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("orders subcommand writes a well-formed report") {
  Scratch tmp("orders");
  CHECK(run("orders --n 2 --p 2 --out " + tmp.file("r.json")) == 0);
  json report = load_report_file(tmp.file("r.json"));
  CHECK(report["schema_version"] == kSchemaVersion);
  CHECK(report["tool"]["name"] == "matring");
  CHECK(report["payload"]["gl"] == "6");
  CHECK(report["payload"]["sl"] == "6");
  CHECK(report["payload"]["z"] == "10");
  CHECK(report["config"]["subcommand"] == "orders");
}

TEST_CASE("worker count never changes payload bytes") {
  Scratch tmp("workers");
  const std::string base = "sumset --kind N --n 2 --p 3 --A full --B full";
  CHECK(run(base + " --workers 1 --out " + tmp.file("w1.json")) == 0);
  CHECK(run(base + " --workers 8 --out " + tmp.file("w8.json")) == 0);
  json w1 = load_report_file(tmp.file("w1.json"));
  json w8 = load_report_file(tmp.file("w8.json"));
  CHECK(w1["payload"].dump() == w8["payload"].dump());
  CHECK(w1["payload"]["observed"] == "2673");
}

TEST_CASE("compare verdicts: clean, diff, schema mismatch") {
  Scratch tmp("compare");
  CHECK(run("omega --n 2 --R 1,2 --S 1 --out " + tmp.file("a.json")) == 0);
  CHECK(run("omega --n 2 --R 1,2 --S 1 --out " + tmp.file("b.json")) == 0);
  CHECK(run("compare " + tmp.file("a.json") + " " + tmp.file("b.json")) == 0);

  json tampered = load_report_file(tmp.file("b.json"));
  tampered["payload"]["omega"] = "4";
  {
    std::ofstream out(tmp.file("tampered.json"));
    out << tampered.dump(2);
  }
  CHECK(run("compare " + tmp.file("a.json") + " " + tmp.file("tampered.json")) == kExitDiff);

  json reschema = load_report_file(tmp.file("b.json"));
  reschema["schema_version"] = 99;
  {
    std::ofstream out(tmp.file("schema.json"));
    out << reschema.dump(2);
  }
  CHECK(run("compare " + tmp.file("a.json") + " " + tmp.file("schema.json")) == kExitSchema);
}

TEST_CASE("failure classes map to distinct exit codes") {
  Scratch tmp("errors");
  CHECK(run("orders --n 2 --p 9 --out " + tmp.file("x.json")) == kExitConfig);
  CHECK(run("rankprofile --n 2 --p 5 --cap 100 --out " + tmp.file("x.json")) == kExitCap);
  CHECK(run("compare /nonexistent/a.json /nonexistent/b.json") == kExitIo);
  CHECK(run("charsum --kind bogus --n 2 --p 2 --out " + tmp.file("x.json")) == kExitConfig);
  // failed runs leave no partial output behind
  CHECK_FALSE(fs::exists(tmp.file("x.json")));
  CHECK_FALSE(fs::exists(tmp.file("x.json") + ".tmp"));
}

TEST_CASE("environment variables mirror the flags") {
  Scratch tmp("env");
  CHECK(run_env("MATRING_P=3", "orders --n 2 --out " + tmp.file("env.json")) == 0);
  json report = load_report_file(tmp.file("env.json"));
  CHECK(report["payload"]["field"]["p"] == 3);
  CHECK(report["payload"]["gl"] == "48");
}

TEST_CASE("csv format emits the flattened view") {
  Scratch tmp("csv");
  CHECK(run("orders --n 2 --p 2 --format csv --out " + tmp.file("r.csv")) == 0);
  std::ifstream in(tmp.file("r.csv"));
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.rfind("field,value\n", 0) == 0);
  CHECK(text.find("payload.gl,6\n") != std::string::npos);
}

TEST_CASE("survey reports reproduce the committed goldens") {
  Scratch tmp("golden");
  const std::string golden = golden_dir() + "/survey_singular_n2_q3.json";
  if (!fs::exists(golden)) {
    FAIL(("missing golden fixture " + golden));
  }
  CHECK(run("survey --kind singular --n 2 --p 3 --mode exhaustive --out " +
            tmp.file("s.json")) == 0);
  CHECK(run("compare " + tmp.file("s.json") + " " + golden) == 0);

  const std::string kgolden = golden_dir() + "/survey_kloosterman_n2_q3_s1.json";
  if (!fs::exists(kgolden)) {
    FAIL(("missing golden fixture " + kgolden));
  }
  CHECK(run("survey --kind kloosterman --n 2 --p 3 --mode sampled --samples 512 --seed 1 "
            "--out " + tmp.file("k.json")) == 0);
  CHECK(run("compare " + tmp.file("k.json") + " " + kgolden) == 0);
}

TEST_CASE("a report's echoed config re-runs to the identical payload") {
  Scratch tmp("roundtrip");
  CHECK(run("survey --kind sl --n 2 --p 3 --mode exhaustive --out " + tmp.file("r.json")) == 0);
  json report = load_report_file(tmp.file("r.json"));
  json payload = run_config_payload(report["config"]);
  CHECK(payload.dump() == report["payload"].dump());
}

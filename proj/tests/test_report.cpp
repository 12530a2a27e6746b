#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>

#include "matring/report.hpp"
#include "matring/rng.hpp"

using namespace matring;
namespace fs = std::filesystem;

namespace {

json orders_config(std::uint32_t n, std::uint32_t p, std::uint32_t k = 1) {
  return json{{"subcommand", "orders"}, {"n", n}, {"p", p}, {"k", k}};
}

}  // namespace

TEST_CASE("the pinned generator reproduces the published SplitMix64 stream") {
  // frozen vectors; alternate-language implementations must match these
  // word-for-word to reproduce any seeded set or sample in a report
  const std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> vectors = {
      {0, {16294208416658607535ull, 7960286522194355700ull, 487617019471545679ull}},
      {1, {10451216379200822465ull, 13757245211066428519ull, 17911839290282890590ull}},
      {42, {13679457532755275413ull, 2949826092126892291ull, 5139283748462763858ull}},
  };
  for (const auto& [seed, expect] : vectors) {
    SplitMix64 rng(seed);
    for (std::uint64_t v : expect) CHECK(rng.next() == v);
  }
}

TEST_CASE("numeric rendering conventions") {
  CHECK(dec_str(bigint("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
  CHECK(rat_str(bigrat(2673)) == "2673/1");
  CHECK(rat_str(bigrat(5, 4)) == "5/4");
  CHECK(real_str(1.16) == "1.16");
  CHECK(real_str(2.0) == "2.0");           // integral floats still carry '.'
  CHECK(real_str(0.0) == "0.0");
  CHECK(real_str(2896.309375740099).substr(0, 10) == "2896.30937");
}

TEST_CASE("payloads for the documented spot examples") {
  json orders = run_config_payload(orders_config(2, 2));
  CHECK(orders["gl"] == "6");
  CHECK(orders["sl"] == "6");
  CHECK(orders["z"] == "10");
  CHECK(orders["total"] == "16");

  json sumset = run_config_payload(json{{"subcommand", "sumset"}, {"n", 2}, {"p", 3},
                                        {"stat", "N"}, {"A", "full"}, {"B", "full"}});
  CHECK(sumset["observed"] == "2673");
  CHECK(sumset["gap"] == "0/1");
  CHECK(sumset["ratio"] == "0.0");

  json omega = run_config_payload(json{{"subcommand", "omega"}, {"n", 2},
                                       {"R", "1,2"}, {"S", "1"}});
  CHECK(omega["omega"] == "3");
  CHECK(omega["primes"] == json::array({"2", "3", "5"}));

  json charsum = run_config_payload(json{{"subcommand", "charsum"}, {"n", 2}, {"p", 2},
                                         {"sum", "singular"}, {"U", "e11"}});
  CHECK(charsum["accum"]["counts"] == json::array({"6", "4"}));
  CHECK(charsum["accum"]["value_re"] == "2.0");
}

TEST_CASE("a config re-runs to an identical payload, independent of workers") {
  for (const json& config : {
           orders_config(2, 3),
           json{{"subcommand", "rankprofile"}, {"n", 2}, {"p", 2}},
           json{{"subcommand", "survey"}, {"n", 2}, {"p", 3}, {"sum", "kloosterman"},
                {"mode", "sampled"}, {"seed", 1}, {"samples", 32}},
           json{{"subcommand", "sumset"}, {"n", 2}, {"p", 5}, {"stat", "T"},
                {"A", "rand:7:125"}, {"B", "rand:8:125"}},
           json{{"subcommand", "resclass"}, {"set", "range:100"}, {"Q", 10}},
       }) {
    json first = run_config_payload(config);
    json again = run_config_payload(config);
    CHECK(first.dump() == again.dump());

    json wide = config;
    wide["workers"] = 8;
    CHECK(run_config_payload(wide).dump() == first.dump());
  }
}

TEST_CASE("unknown subcommands and missing keys are config errors") {
  CHECK_THROWS_AS(run_config_payload(json{{"subcommand", "nope"}}), ConfigError);
  CHECK_THROWS_AS(run_config_payload(json{{"subcommand", "sumset"}, {"n", 2}, {"p", 3}}),
                  ConfigError);
  CHECK_THROWS_AS(run_config_payload(json{{"subcommand", "orders"}, {"n", 2}, {"p", 9}}),
                  NotPrimeError);
}

TEST_CASE("matrix and set specs parse, bad specs throw") {
  FieldCtx f3 = FieldCtx::make(3, 1);
  CHECK(matrix_from_spec("zero", 2, f3).is_zero());
  CHECK(matrix_from_spec("id", 2, f3) == MatF::identity(2, f3));
  CHECK(matrix_from_spec("e11", 2, f3) == MatF::e11(2, f3));
  CHECK(matrix_from_spec("idx:5", 2, f3) == MatF::from_index(2, f3, 5));
  CHECK(matrix_from_spec("list:1,2,0,1", 2, f3) ==
        MatF::from_entries(2, f3, {1, 2, 0, 1}));
  CHECK_THROWS_AS(matrix_from_spec("wat", 2, f3), ConfigError);
  CHECK_THROWS_AS(matrix_from_spec("list:1,2", 2, f3), ConfigError);

  CHECK(set_from_spec("full", 2, f3, {}).size() == 81);
  CHECK(set_from_spec("rand:7:27", 2, f3, {}).size() == 27);
  CHECK(set_from_spec("entries:0,1", 2, f3, {}).size() == 16);
  CHECK_THROWS_AS(set_from_spec("rand:7", 2, f3, {}), ConfigError);
  CHECK_THROWS_AS(set_from_spec("file:/nonexistent/x.json", 2, f3, {}), IoError);

  CHECK(intset_from_spec("range:5").members == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
  CHECK(intset_from_spec("1,2").members == std::vector<std::uint64_t>{1, 2});
  CHECK(intset_from_spec("rand:3:4:50").size() == 4);
}

TEST_CASE("explicit set files round-trip through set_from_spec") {
  const fs::path dir = fs::temp_directory_path() / "matring-test-report";
  fs::create_directories(dir);
  const fs::path path = dir / "set.json";
  {
    std::ofstream out(path);
    out << "[[1,0,0,1],[0,0,0,0],[1,0,0,1]]";
  }
  FieldCtx f3 = FieldCtx::make(3, 1);
  MatrixSet s = set_from_spec("file:" + path.string(), 2, f3, {});
  CHECK(s.size() == 2);  // duplicate collapses
  fs::remove_all(dir);
}

TEST_CASE("report files are written atomically and parsed back") {
  const fs::path dir = fs::temp_directory_path() / "matring-test-report2";
  fs::create_directories(dir);
  const fs::path path = dir / "report.json";

  json config = orders_config(2, 2);
  json report = render_report(config, run_config_payload(config), 0.001);
  write_report_file(path.string(), report.dump(2) + "\n");
  CHECK(fs::exists(path));
  CHECK_FALSE(fs::exists(path.string() + ".tmp"));

  json loaded = load_report_file(path.string());
  CHECK(loaded["payload"]["gl"] == "6");
  CHECK(loaded["schema_version"] == kSchemaVersion);

  {
    std::ofstream out(dir / "broken.json");
    out << "{not json";
  }
  CHECK_THROWS_AS(load_report_file((dir / "broken.json").string()), ReportParseError);
  CHECK_THROWS_AS(load_report_file((dir / "absent.json").string()), IoError);
  fs::remove_all(dir);
}

TEST_CASE("compare: exact fields exactly, floating fields within 1e-9") {
  json config = orders_config(2, 2);
  json report = render_report(config, run_config_payload(config), 0.5);
  json golden = render_report(config, run_config_payload(config), 0.9);  // timing differs
  CHECK(compare_reports(report, golden).empty());

  json off = golden;
  off["payload"]["z"] = "11";
  auto diffs = compare_reports(report, off);
  REQUIRE(diffs.size() == 1);
  CHECK(diffs[0].find("payload.z") != std::string::npos);

  // an exact integer field may not drift even within float tolerance
  json big = render_report(config, run_config_payload(config), 0.5);
  big["payload"]["gl"] = "600000000000001";
  json big2 = big;
  big2["payload"]["gl"] = "600000000000000";
  CHECK(compare_reports(big, big2).size() == 1);

  // floating drift below 1e-9 relative is accepted
  json fa = big, fb = big;
  fa["payload"]["x"] = "2896.30937574";
  fb["payload"]["x"] = "2896.3093757400001";
  CHECK(compare_reports(fa, fb).empty());

  json schema = golden;
  schema["schema_version"] = 2;
  CHECK_THROWS_AS(compare_reports(report, schema), SchemaMismatchError);
}

TEST_CASE("csv flattening") {
  json config = orders_config(2, 2);
  json report = render_report(config, run_config_payload(config), 0.0);
  std::string csv = flatten_csv(report);
  CHECK(csv.find("payload.gl,6\n") != std::string::npos);
  CHECK(csv.find("field,value\n") == 0);
}

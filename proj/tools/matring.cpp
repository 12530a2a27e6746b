// matring: exact desk-scale experiments in matrix rings over finite fields.
// One subcommand per experiment family; every run is a pure function of its
// printed config (seeds included), so reports reproduce byte-for-byte.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "matring/report.hpp"

namespace {

using matring::json;

struct CommonOpts {
  std::uint32_t n = 2;
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::uint64_t scan_cap = 1ull << 24;
  std::uint64_t pair_cap = 1ull << 26;
  std::uint64_t tuple_cap = 1ull << 22;
  std::uint64_t table_cap = 1ull << 22;
  bool scalar_diag = false;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_field = true) {
  if (with_field) {
    cmd->add_option("--n", o.n, "matrix dimension")->envname("MATRING_N");
    cmd->add_option("--p", o.p, "field characteristic (prime)")->envname("MATRING_P");
    cmd->add_option("--k", o.k, "extension degree")->envname("MATRING_K");
  }
  cmd->add_option("--seed", o.seed, "seed for all randomized choices")->envname("MATRING_SEED");
  cmd->add_option("--workers", o.workers, "worker threads (never changes results)")
      ->envname("MATRING_WORKERS");
  cmd->add_option("--cap", o.scan_cap, "enumeration scan cap")->envname("MATRING_CAP");
  cmd->add_option("--pair-cap", o.pair_cap, "pair scan cap")->envname("MATRING_PAIR_CAP");
  cmd->add_option("--tuple-cap", o.tuple_cap, "exhaustive survey tuple cap")
      ->envname("MATRING_TUPLE_CAP");
  cmd->add_option("--table-cap", o.table_cap, "sum-multiplicity table cap")
      ->envname("MATRING_TABLE_CAP");
  cmd->add_flag("--scalar-diag", o.scalar_diag, "permit n = 1 (diagnostic only)")
      ->envname("MATRING_SCALAR_DIAG");
  cmd->add_option("--out", o.out, "report output path (default: stdout)")
      ->envname("MATRING_OUT");
  cmd->add_option("--format", o.format, "json or csv")->envname("MATRING_FORMAT");
}

json base_config(const std::string& subcommand, const CommonOpts& o, bool with_field = true) {
  json config{{"subcommand", subcommand},
              {"workers", o.workers},
              {"caps", json{{"scan", o.scan_cap},
                            {"pair", o.pair_cap},
                            {"tuple", o.tuple_cap},
                            {"table", o.table_cap}}}};
  if (with_field) {
    config["n"] = o.n;
    config["p"] = o.p;
    config["k"] = o.k;
  }
  if (o.scalar_diag) config["scalar_diag"] = true;
  return config;
}

int emit_report(const json& config, const CommonOpts& o) {
  const auto start = std::chrono::steady_clock::now();
  json payload = matring::run_config_payload(config);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json report = matring::render_report(config, payload, wall);

  std::string text;
  if (o.format == "json") {
    text = report.dump(2) + "\n";
  } else if (o.format == "csv") {
    text = matring::flatten_csv(report);
  } else {
    throw matring::ConfigError("format must be json or csv");
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    matring::write_report_file(o.out, text);
  }
  return matring::kExitOk;
}

int run_compare(const std::string& report_path, const std::string& golden_path) {
  json report = matring::load_report_file(report_path);
  json golden = matring::load_report_file(golden_path);
  auto diffs = matring::compare_reports(report, golden);
  for (const std::string& d : diffs) std::cout << d << "\n";
  return diffs.empty() ? matring::kExitOk : matring::kExitDiff;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact experiments on singular/unimodular sums, character sums and\n"
               "determinant prime divisors in matrix rings over finite fields"};
  app.require_subcommand(1);

  CommonOpts o;

  auto* orders = app.add_subcommand("orders", "|GL|, |SL|, |Z| closed forms");
  add_common(orders, o);

  auto* rankprofile = app.add_subcommand("rankprofile", "exact per-rank matrix counts");
  add_common(rankprofile, o);

  std::string kind, uspec = "e11", vspec = "zero", hspec = "id";
  auto* charsum = app.add_subcommand("charsum", "one exact character sum");
  add_common(charsum, o);
  charsum->add_option("--kind", kind, "singular | sl | kloosterman")->required();
  charsum->add_option("--U", uspec, "matrix spec");
  charsum->add_option("--V", vspec, "matrix spec (kloosterman)");
  charsum->add_option("--H", hspec, "matrix spec (kloosterman)");

  std::string mode = "exhaustive";
  std::uint64_t samples = 0;
  std::uint32_t h_count = 1;
  auto* survey = app.add_subcommand("survey", "measure an implied constant");
  add_common(survey, o);
  survey->add_option("--kind", kind, "singular | sl | kloosterman")->required();
  survey->add_option("--mode", mode, "exhaustive | sampled");
  survey->add_option("--samples", samples, "tuples for sampled mode");
  survey->add_option("--hcount", h_count, "H matrices for exhaustive kloosterman");

  std::string aspec = "full", bspec = "full", cspec = "full", dspec = "full";
  bool distinct = false;
  auto* sumset = app.add_subcommand("sumset", "N or T count with gap report");
  add_common(sumset, o);
  sumset->add_option("--kind", kind, "N | T")->required();
  sumset->add_option("--A", aspec, "set spec");
  sumset->add_option("--B", bspec, "set spec");
  sumset->add_flag("--distinct", distinct, "count distinct sums instead of pairs");

  auto* sumprod = app.add_subcommand("sumprod", "R(A,B,C,D;H) with gap report");
  add_common(sumprod, o);
  sumprod->add_option("--A", aspec, "set spec");
  sumprod->add_option("--B", bspec, "set spec");
  sumprod->add_option("--C", cspec, "set spec");
  sumprod->add_option("--D", dspec, "set spec");
  sumprod->add_option("--H", hspec, "matrix spec (invertible)");

  std::string fields, rule = "full";
  auto* asymtable = app.add_subcommand("asymtable", "q-row table of q*count/(#A#B)");
  add_common(asymtable, o);
  asymtable->add_option("--kind", kind, "N | T")->required();
  asymtable->add_option("--fields", fields, "comma list of p or p:k")->required();
  asymtable->add_option("--rule", rule, "full | rand:<exp>");

  std::string setspec;
  std::uint64_t bigq = 0;
  auto* resclass = app.add_subcommand("resclass", "residue-class census over [Q,2Q]");
  add_common(resclass, o, /*with_field=*/false);
  resclass->add_option("--set", setspec, "integer set spec")->required();
  resclass->add_option("--Q", bigq, "prime window start")->required();

  std::string rspec, sspec, check_p;
  auto* omega = app.add_subcommand("omega", "prime divisors of sumset determinants");
  add_common(omega, o);
  omega->add_option("--R", rspec, "integer set spec or comma list")->required();
  omega->add_option("--S", sspec, "integer set spec or comma list")->required();
  omega->add_option("--check-p", check_p, "also run the mod-p divisibility route");

  std::string report_path, golden_path;
  auto* compare = app.add_subcommand("compare", "diff a report against a golden fixture");
  compare->add_option("report", report_path, "report path")->required();
  compare->add_option("golden", golden_path, "golden path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (compare->parsed()) return run_compare(report_path, golden_path);

    json config;
    if (orders->parsed()) {
      config = base_config("orders", o);
    } else if (rankprofile->parsed()) {
      config = base_config("rankprofile", o);
    } else if (charsum->parsed()) {
      config = base_config("charsum", o);
      config["sum"] = kind;
      config["U"] = uspec;
      if (kind == "kloosterman") {
        config["V"] = vspec;
        config["H"] = hspec;
      }
    } else if (survey->parsed()) {
      config = base_config("survey", o);
      config["sum"] = kind;
      config["mode"] = mode;
      config["seed"] = o.seed;
      config["samples"] = samples;
      config["h_count"] = h_count;
    } else if (sumset->parsed()) {
      config = base_config("sumset", o);
      config["stat"] = kind;
      config["A"] = aspec;
      config["B"] = bspec;
      config["distinct"] = distinct;
    } else if (sumprod->parsed()) {
      config = base_config("sumprod", o);
      config["A"] = aspec;
      config["B"] = bspec;
      config["C"] = cspec;
      config["D"] = dspec;
      config["H"] = hspec;
    } else if (asymtable->parsed()) {
      config = base_config("asymtable", o);
      config.erase("p");
      config.erase("k");
      config["stat"] = kind;
      config["fields"] = fields;
      config["rule"] = rule;
      config["seed"] = o.seed;
    } else if (resclass->parsed()) {
      config = base_config("resclass", o, /*with_field=*/false);
      config["set"] = setspec;
      config["Q"] = bigq;
    } else if (omega->parsed()) {
      config = base_config("omega", o);
      config.erase("p");
      config.erase("k");
      config["R"] = rspec;
      config["S"] = sspec;
      if (!check_p.empty()) config["check_p"] = check_p;
    }
    return emit_report(config, o);
  } catch (const matring::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return matring::kExitFailure;
  }
}

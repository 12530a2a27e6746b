#include "matring/report.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace matring {

std::string dec_str(const bigint& v) { return v.str(); }
std::string dec_str(std::uint64_t v) { return std::to_string(v); }

std::string rat_str(const bigrat& v) {
  return numerator(v).str() + "/" + denominator(v).str();
}

std::string real_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos &&
      s.find_first_of("0123456789") != std::string::npos) {
    s += ".0";
  }
  return s;
}

json field_json(const FieldCtx& f) {
  json mod = json::array();
  for (std::uint32_t c : f.modulus()) mod.push_back(c);
  return json{{"p", f.p()}, {"k", f.k()}, {"q", f.q()}, {"modulus", mod}};
}

json matrix_json(const MatF& m) {
  const FieldCtx& f = m.ctx();
  json rows = json::array();
  for (std::uint32_t i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (std::uint32_t j = 0; j < m.n(); ++j) {
      json coeffs = json::array();
      for (std::uint32_t c : f.coeffs(m.at(i, j))) coeffs.push_back(c);
      row.push_back(coeffs);
    }
    rows.push_back(row);
  }
  return json{{"n", m.n()}, {"ctx", field_json(f)}, {"entries", rows}};
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("bad " + what + ": '" + s + "'");
  }
  return v;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& s, const std::string& what) {
  std::vector<std::uint64_t> out;
  for (const std::string& part : split(s, ',')) out.push_back(parse_u64(part, what));
  return out;
}

}  // namespace

json set_json(const MatrixSet& s, const std::string& spec) {
  json j{{"spec", spec}, {"size", dec_str(s.size())}};
  const SetProvenance& prov = s.provenance();
  switch (prov.kind) {
    case SetProvenance::Kind::Full: j["provenance"] = "full"; break;
    case SetProvenance::Kind::Random:
      j["provenance"] = "random";
      j["seed"] = dec_str(prov.seed);
      j["requested_size"] = dec_str(prov.size);
      break;
    case SetProvenance::Kind::ProductOfEntries: {
      j["provenance"] = "entries";
      json pool = json::array();
      for (std::uint32_t e : prov.entry_pool) pool.push_back(e);
      j["entry_pool"] = pool;
      break;
    }
    case SetProvenance::Kind::Explicit:
      j["provenance"] = "explicit";
      if (!prov.source.empty()) j["source"] = prov.source;
      break;
  }
  return j;
}

json intset_json(const IntSet& s, const std::string& spec) {
  json members = json::array();
  for (std::uint64_t v : s.members) members.push_back(dec_str(v));
  return json{{"spec", spec}, {"N", dec_str(s.N)}, {"size", dec_str(s.size())},
              {"members", members}};
}

MatF matrix_from_spec(const std::string& spec, std::uint32_t n, const FieldCtx& f) {
  if (spec == "zero") return MatF(n, f);
  if (spec == "id") return MatF::identity(n, f);
  if (spec == "e11") return MatF::e11(n, f);
  if (spec.rfind("idx:", 0) == 0) {
    return MatF::from_index(n, f, parse_u64(spec.substr(4), "matrix index"));
  }
  if (spec.rfind("list:", 0) == 0) {
    std::vector<std::uint32_t> entries;
    for (std::uint64_t v : parse_u64_list(spec.substr(5), "matrix entry")) {
      entries.push_back(static_cast<std::uint32_t>(v));
    }
    return MatF::from_entries(n, f, std::move(entries));
  }
  throw ConfigError("bad matrix spec '" + spec + "'");
}

MatrixSet set_from_spec(const std::string& spec, std::uint32_t n, const FieldCtx& f,
                        const Caps& caps) {
  if (spec == "full") return MatrixSet::full(n, f, caps);
  if (spec.rfind("rand:", 0) == 0) {
    auto parts = split(spec.substr(5), ':');
    if (parts.size() != 2) throw ConfigError("bad set spec '" + spec + "' (rand:<seed>:<size>)");
    return MatrixSet::random(n, f, parse_u64(parts[0], "seed"), parse_u64(parts[1], "size"),
                             caps);
  }
  if (spec.rfind("entries:", 0) == 0) {
    std::vector<std::uint32_t> pool;
    for (std::uint64_t v : parse_u64_list(spec.substr(8), "entry index")) {
      pool.push_back(static_cast<std::uint32_t>(v));
    }
    return MatrixSet::product_of_entries(n, f, std::move(pool), caps);
  }
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open matrix set file '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_array()) {
      throw ReportParseError("matrix set file '" + path + "' is not a JSON array");
    }
    std::vector<MatF> members;
    for (const json& mj : j) {
      std::vector<std::uint32_t> entries;
      for (const json& e : mj) entries.push_back(e.get<std::uint32_t>());
      members.push_back(MatF::from_entries(n, f, std::move(entries)));
    }
    return MatrixSet::explicit_set(n, f, std::move(members), path);
  }
  throw ConfigError("bad set spec '" + spec + "'");
}

IntSet intset_from_spec(const std::string& spec) {
  if (spec.rfind("range:", 0) == 0) return IntSet::range(parse_u64(spec.substr(6), "N"));
  if (spec.rfind("list:", 0) == 0) {
    return IntSet::from_list(parse_u64_list(spec.substr(5), "member"));
  }
  if (spec.rfind("rand:", 0) == 0) {
    auto parts = split(spec.substr(5), ':');
    if (parts.size() != 3) {
      throw ConfigError("bad integer set spec '" + spec + "' (rand:<seed>:<size>:<N>)");
    }
    return IntSet::random(parse_u64(parts[0], "seed"), parse_u64(parts[1], "size"),
                          parse_u64(parts[2], "N"));
  }
  // bare comma list shorthand, e.g. "1,2,3"
  return IntSet::from_list(parse_u64_list(spec, "member"));
}

namespace {

Caps caps_from_config(const json& config) {
  Caps caps;
  if (config.contains("caps")) {
    const json& c = config["caps"];
    if (c.contains("scan")) caps.scan_cap = c["scan"].get<std::uint64_t>();
    if (c.contains("pair")) caps.pair_cap = c["pair"].get<std::uint64_t>();
    if (c.contains("tuple")) caps.tuple_cap = c["tuple"].get<std::uint64_t>();
    if (c.contains("table")) caps.table_cap = c["table"].get<std::uint64_t>();
  }
  if (config.contains("workers")) caps.workers = config["workers"].get<unsigned>();
  if (config.contains("scalar_diag")) caps.scalar_diag = config["scalar_diag"].get<bool>();
  return caps;
}

FieldCtx field_from_config(const json& config) {
  return FieldCtx::make(config["p"].get<std::uint32_t>(),
                        config.value("k", std::uint32_t{1}));
}

std::string require_str(const json& config, const char* key) {
  if (!config.contains(key)) throw ConfigError(std::string("missing '") + key + "'");
  return config[key].get<std::string>();
}

json characcum_json(const CharAccum& acc) {
  json counts = json::array();
  for (std::uint64_t c : acc.counts) counts.push_back(dec_str(c));
  const std::complex<double> v = acc.value();
  return json{{"p", acc.p},
              {"counts", counts},
              {"total", dec_str(acc.total())},
              {"value_re", real_str(v.real())},
              {"value_im", real_str(v.imag())},
              {"modulus", real_str(std::abs(v))}};
}

json gap_json(const GapReport& rep) {
  return json{{"observed", dec_str(rep.observed)},
              {"main_term", rat_str(rep.main_term)},
              {"gap", rat_str(rep.gap)},
              {"envelope", real_str(rep.envelope)},
              {"ratio", real_str(rep.ratio)}};
}

json payload_orders(const json& config) {
  const std::uint32_t n = config["n"].get<std::uint32_t>();
  if (n == 0) throw ConfigError("n must be positive");
  FieldCtx f = field_from_config(config);
  const bigint q = f.q();
  return json{{"kind", "orders"},
              {"n", n},
              {"field", field_json(f)},
              {"total", dec_str(boost::multiprecision::pow(q, n * n))},
              {"gl", dec_str(gl_order(n, q))},
              {"sl", dec_str(sl_order(n, q))},
              {"z", dec_str(z_order(n, q))}};
}

json payload_rankprofile(const json& config) {
  const std::uint32_t n = config["n"].get<std::uint32_t>();
  FieldCtx f = field_from_config(config);
  const Caps caps = caps_from_config(config);
  RankProfile prof = rank_profile(n, f, caps);
  json counts = json::array(), closed = json::array();
  bool match = true;
  for (std::size_t r = 0; r < prof.counts.size(); ++r) {
    counts.push_back(dec_str(prof.counts[r]));
    closed.push_back(dec_str(prof.closed_form[r]));
    match = match && prof.counts[r] == prof.closed_form[r];
  }
  return json{{"kind", "rankprofile"}, {"n", n},        {"field", field_json(f)},
              {"counts", counts},      {"closed_form", closed}, {"match", match}};
}

json payload_charsum(const json& config) {
  const std::uint32_t n = config["n"].get<std::uint32_t>();
  FieldCtx f = field_from_config(config);
  const Caps caps = caps_from_config(config);
  const std::string sum = require_str(config, "sum");
  MatF u = matrix_from_spec(require_str(config, "U"), n, f);
  json out{{"kind", "charsum"}, {"sum", sum}, {"n", n}, {"field", field_json(f)},
           {"U", matrix_json(u)}};
  CharAccum acc;
  if (sum == "singular") {
    acc = sum_singular(u, caps);
  } else if (sum == "sl") {
    acc = sum_sl(u, caps);
  } else if (sum == "kloosterman") {
    MatF v = matrix_from_spec(require_str(config, "V"), n, f);
    MatF h = matrix_from_spec(require_str(config, "H"), n, f);
    out["V"] = matrix_json(v);
    out["H"] = matrix_json(h);
    acc = kloosterman(u, v, h, caps);
  } else {
    throw ConfigError("charsum kind must be singular, sl or kloosterman");
  }
  out["accum"] = characcum_json(acc);
  return out;
}

json payload_survey(const json& config) {
  const std::uint32_t n = config["n"].get<std::uint32_t>();
  FieldCtx f = field_from_config(config);
  const Caps caps = caps_from_config(config);
  const std::string sum = require_str(config, "sum");
  SumKind kind;
  if (sum == "singular") {
    kind = SumKind::Singular;
  } else if (sum == "sl") {
    kind = SumKind::SL;
  } else if (sum == "kloosterman") {
    kind = SumKind::Kloosterman;
  } else {
    throw ConfigError("survey kind must be singular, sl or kloosterman");
  }
  ScanSpec scan;
  const std::string mode = config.value("mode", std::string("exhaustive"));
  if (mode == "exhaustive") {
    scan.mode = ScanSpec::Mode::Exhaustive;
  } else if (mode == "sampled") {
    scan.mode = ScanSpec::Mode::Sampled;
  } else {
    throw ConfigError("survey mode must be exhaustive or sampled");
  }
  scan.seed = config.value("seed", std::uint64_t{0});
  scan.samples = config.value("samples", std::uint64_t{0});
  scan.h_count = config.value("h_count", std::uint32_t{1});
  if (scan.mode == ScanSpec::Mode::Sampled && scan.samples == 0) {
    throw ConfigError("sampled survey needs --samples");
  }

  BoundReport rep = bound_survey(kind, n, f, scan, caps);
  json witness = json::object();
  witness["U"] = matrix_json(rep.witness.at(0));
  if (rep.witness.size() == 3) {
    witness["V"] = matrix_json(rep.witness.at(1));
    witness["H"] = matrix_json(rep.witness.at(2));
  }
  return json{{"kind", "survey"},
              {"sum", sum},
              {"n", n},
              {"field", field_json(f)},
              {"mode", mode},
              {"seed", dec_str(scan.seed)},
              {"samples", dec_str(scan.samples)},
              {"h_count", scan.h_count},
              {"scanned", dec_str(rep.scanned)},
              {"envelope_exponent", rep.envelope_exponent},
              {"observed_max", real_str(rep.observed_max)},
              {"implied_constant", real_str(rep.implied_constant)},
              {"witness", witness}};
}

json payload_sumset(const json& config) {
  const std::uint32_t n = config["n"].get<std::uint32_t>();
  FieldCtx f = field_from_config(config);
  const Caps caps = caps_from_config(config);
  const std::string stat = require_str(config, "stat");
  if (stat != "N" && stat != "T") throw ConfigError("sumset stat must be N or T");
  const std::string spec_a = require_str(config, "A");
  const std::string spec_b = require_str(config, "B");
  MatrixSet a = set_from_spec(spec_a, n, f, caps);
  MatrixSet b = set_from_spec(spec_b, n, f, caps);
  const bool distinct = config.value("distinct", false);

  json out{{"kind", "sumset"},  {"stat", stat},
           {"n", n},            {"field", field_json(f)},
           {"A", set_json(a, spec_a)}, {"B", set_json(b, spec_b)},
           {"distinct", distinct}};
  if (distinct) {
    // no theorem envelope applies to distinct sums; report the raw count
    const std::uint64_t observed = stat == "N" ? count_singular_sums(a, b, caps, true)
                                               : count_sl_sums(a, b, caps, true);
    out["observed"] = dec_str(observed);
  } else {
    GapReport rep = gap_report(stat == "N" ? GapKind::N : GapKind::T, {&a, &b}, nullptr, caps);
    out.update(gap_json(rep));
  }
  return out;
}

json payload_sumprod(const json& config) {
  const std::uint32_t n = config["n"].get<std::uint32_t>();
  FieldCtx f = field_from_config(config);
  const Caps caps = caps_from_config(config);
  const std::string spec_a = require_str(config, "A");
  const std::string spec_b = require_str(config, "B");
  const std::string spec_c = require_str(config, "C");
  const std::string spec_d = require_str(config, "D");
  MatrixSet a = set_from_spec(spec_a, n, f, caps);
  MatrixSet b = set_from_spec(spec_b, n, f, caps);
  MatrixSet c = set_from_spec(spec_c, n, f, caps);
  MatrixSet d = set_from_spec(spec_d, n, f, caps);
  MatF h = matrix_from_spec(require_str(config, "H"), n, f);
  GapReport rep = gap_report(GapKind::R, {&a, &b, &c, &d}, &h, caps);
  json out{{"kind", "sumprod"},        {"n", n},
           {"field", field_json(f)},   {"A", set_json(a, spec_a)},
           {"B", set_json(b, spec_b)}, {"C", set_json(c, spec_c)},
           {"D", set_json(d, spec_d)}, {"H", matrix_json(h)}};
  out.update(gap_json(rep));
  return out;
}

json payload_asymtable(const json& config) {
  const std::uint32_t n = config["n"].get<std::uint32_t>();
  const Caps caps = caps_from_config(config);
  const std::string stat = require_str(config, "stat");
  if (stat != "N" && stat != "T") throw ConfigError("asymtable stat must be N or T");
  const std::string rule = config.value("rule", std::string("full"));
  const std::uint64_t seed = config.value("seed", std::uint64_t{0});

  std::vector<std::pair<std::uint32_t, std::uint32_t>> fields;
  for (const std::string& part : split(require_str(config, "fields"), ',')) {
    auto pk = split(part, ':');
    if (pk.size() == 1) {
      fields.emplace_back(static_cast<std::uint32_t>(parse_u64(pk[0], "p")), 1);
    } else if (pk.size() == 2) {
      fields.emplace_back(static_cast<std::uint32_t>(parse_u64(pk[0], "p")),
                          static_cast<std::uint32_t>(parse_u64(pk[1], "k")));
    } else {
      throw ConfigError("bad field list entry '" + part + "' (p or p:k)");
    }
  }

  AsymTable table = asymptotic_table(stat == "N" ? GapKind::N : GapKind::T, n, fields, rule,
                                     seed, caps);
  json rows = json::array();
  for (const AsymRow& row : table.rows) {
    rows.push_back(json{{"p", row.p},
                        {"k", row.k},
                        {"q", dec_str(row.q)},
                        {"size_a", dec_str(row.size_a)},
                        {"size_b", dec_str(row.size_b)},
                        {"observed", dec_str(row.observed)},
                        {"ratio", real_str(row.ratio)}});
  }
  return json{{"kind", "asymtable"}, {"stat", stat}, {"n", n},
              {"rule", rule},        {"seed", dec_str(seed)}, {"rows", rows}};
}

json payload_resclass(const json& config) {
  const std::string spec = require_str(config, "set");
  IntSet t = intset_from_spec(spec);
  const std::uint64_t Q = config["Q"].get<std::uint64_t>();
  ResClassCensus census = resclass_census(t, Q);
  json rows = json::array();
  for (const CensusRow& row : census.rows) {
    rows.push_back(json{{"p", dec_str(row.p)},
                        {"nu", dec_str(row.nu)},
                        {"threshold", real_str(row.threshold)},
                        {"pass", row.pass}});
  }
  return json{{"kind", "resclass"},
              {"set", intset_json(t, spec)},
              {"N", dec_str(census.N)},
              {"Q", dec_str(census.Q)},
              {"prime_count", dec_str(census.prime_count)},
              {"rows", rows},
              {"pass_count", dec_str(census.pass_count)},
              {"pass_fraction", real_str(census.pass_fraction)},
              {"lemma_floor", real_str(census.lemma_floor)},
              {"meets_lemma_floor", census.meets_lemma_floor}};
}

json payload_omega(const json& config) {
  const std::uint32_t n = config["n"].get<std::uint32_t>();
  const Caps caps = caps_from_config(config);
  const std::string spec_r = require_str(config, "R");
  const std::string spec_s = require_str(config, "S");
  IntSet r = intset_from_spec(spec_r);
  IntSet s = intset_from_spec(spec_s);
  OmegaReport rep = omega_w(r, s, n, caps);
  json primes = json::array();
  for (std::uint64_t p : rep.primes) primes.push_back(dec_str(p));
  json out{{"kind", "omega"},
           {"n", n},
           {"R", intset_json(r, spec_r)},
           {"S", intset_json(s, spec_s)},
           {"total_pairs", dec_str(rep.total_pairs)},
           {"zero_det_pairs", dec_str(rep.zero_det_pairs)},
           {"primes", primes},
           {"omega", dec_str(rep.omega)}};
  if (config.contains("check_p")) {
    json checks = json::array();
    for (std::uint64_t p : parse_u64_list(config["check_p"].get<std::string>(), "prime")) {
      checks.push_back(json{{"p", dec_str(p)}, {"divides", divides_w(r, s, n, p, caps)}});
    }
    out["divides_checks"] = checks;
  }
  return out;
}

}  // namespace

json run_config_payload(const json& config) {
  const std::string sub = require_str(config, "subcommand");
  if (sub == "orders") return payload_orders(config);
  if (sub == "rankprofile") return payload_rankprofile(config);
  if (sub == "charsum") return payload_charsum(config);
  if (sub == "survey") return payload_survey(config);
  if (sub == "sumset") return payload_sumset(config);
  if (sub == "sumprod") return payload_sumprod(config);
  if (sub == "asymtable") return payload_asymtable(config);
  if (sub == "resclass") return payload_resclass(config);
  if (sub == "omega") return payload_omega(config);
  throw ConfigError("unknown subcommand '" + sub + "'");
}

json render_report(const json& config, const json& payload, double wall_seconds) {
  return json{{"schema_version", kSchemaVersion},
              {"tool", json{{"name", kToolName}, {"version", kToolVersion}}},
              {"config", config},
              {"payload", payload},
              {"wall_time_s", real_str(wall_seconds)}};
}

void write_report_file(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out << contents;
    if (!out.good()) throw IoError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw IoError("rename to '" + target.string() + "' failed: " + ec.message());
  }
}

json load_report_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open report '" + path + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ReportParseError("'" + path + "' is not valid JSON");
  return j;
}

namespace {

bool looks_floating(const std::string& s) {
  return s.find_first_of(".eE") != std::string::npos &&
         s.find_first_not_of("+-0123456789.eE") == std::string::npos;
}

bool float_close(const std::string& a, const std::string& b) {
  double x = 0, y = 0;
  try {
    x = std::stod(a);
    y = std::stod(b);
  } catch (...) {
    return false;
  }
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) <= 1e-9 * scale;
}

void diff_json(const json& a, const json& b, const std::string& path,
               std::vector<std::string>& out) {
  if (a.type() != b.type()) {
    out.push_back(path + ": type mismatch");
    return;
  }
  if (a.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (!b.contains(it.key())) {
        out.push_back(path + "." + it.key() + ": missing from golden");
        continue;
      }
      diff_json(it.value(), b[it.key()], path + "." + it.key(), out);
    }
    for (auto it = b.begin(); it != b.end(); ++it) {
      if (!a.contains(it.key())) out.push_back(path + "." + it.key() + ": missing from report");
    }
    return;
  }
  if (a.is_array()) {
    if (a.size() != b.size()) {
      out.push_back(path + ": array length " + std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()));
      return;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      diff_json(a[i], b[i], path + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  if (a.is_string()) {
    const std::string& x = a.get_ref<const std::string&>();
    const std::string& y = b.get_ref<const std::string&>();
    if (x == y) return;
    if ((looks_floating(x) || looks_floating(y)) && float_close(x, y)) return;
    out.push_back(path + ": '" + x + "' vs '" + y + "'");
    return;
  }
  if (a != b) out.push_back(path + ": " + a.dump() + " vs " + b.dump());
}

}  // namespace

std::vector<std::string> compare_reports(const json& report, const json& golden) {
  for (const json* j : {&report, &golden}) {
    if (!j->contains("schema_version") || !j->contains("payload")) {
      throw ReportParseError("report lacks schema_version/payload");
    }
  }
  if (report["schema_version"] != golden["schema_version"]) {
    throw SchemaMismatchError("schema_version " + report["schema_version"].dump() + " vs " +
                              golden["schema_version"].dump());
  }
  std::vector<std::string> diffs;
  diff_json(report["payload"], golden["payload"], "payload", diffs);
  return diffs;
}

namespace {

void flatten_into(const json& j, const std::string& path, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten_into(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    }
    return;
  }
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten_into(j[i], path + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  std::string value = j.is_string() ? j.get<std::string>() : j.dump();
  if (value.find(',') != std::string::npos || value.find('"') != std::string::npos) {
    std::string quoted = "\"";
    for (char c : value) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    value = quoted;
  }
  out += path + "," + value + "\n";
}

}  // namespace

std::string flatten_csv(const json& report) {
  std::string out = "field,value\n";
  flatten_into(report, "", out);
  return out;
}

}  // namespace matring

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "matring/charsum.hpp"
#include "matring/intexp.hpp"
#include "matring/sumset.hpp"

namespace matring {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "matring";
inline constexpr const char* kToolVersion = "0.1.0";

// Payload rendering conventions: counts and other exact integers are decimal
// strings (they can exceed the 53-bit float-safe range), rationals are
// "num/den", floating values are 12-significant-digit decimals that always
// carry a '.' or exponent so compare() can tell the two families apart.
std::string dec_str(const bigint& v);
std::string dec_str(std::uint64_t v);
std::string rat_str(const bigrat& v);
std::string real_str(double v);

json field_json(const FieldCtx& f);
json matrix_json(const MatF& m);
json set_json(const MatrixSet& s, const std::string& spec);
json intset_json(const IntSet& s, const std::string& spec);

// spec grammars (documented in the README):
//   matrix: zero | id | e11 | idx:<index> | list:<i0,i1,...>
//   matrix set: full | rand:<seed>:<size> | entries:<i0,i1,...> | file:<path>
//   integer set: range:<N> | list:<v1,v2,...> | rand:<seed>:<size>:<N>
MatF matrix_from_spec(const std::string& spec, std::uint32_t n, const FieldCtx& f);
MatrixSet set_from_spec(const std::string& spec, std::uint32_t n, const FieldCtx& f,
                        const Caps& caps);
IntSet intset_from_spec(const std::string& spec);

// Dispatch a fully-resolved RunConfig to the owning module. A run is a pure
// function of the config; worker count never changes the payload.
json run_config_payload(const json& config);

json render_report(const json& config, const json& payload, double wall_seconds);

// write-then-rename so failed runs leave no partial report behind
void write_report_file(const std::string& path, const std::string& contents);
json load_report_file(const std::string& path);

// Field-by-field payload diff. Exact fields must match exactly; floating
// fields (the ones rendered with '.' or an exponent) compare within 1e-9
// relative. The config echo and timing are informational and not diffed.
std::vector<std::string> compare_reports(const json& report, const json& golden);

std::string flatten_csv(const json& report);

}  // namespace matring

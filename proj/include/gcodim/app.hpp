#pragma once

#include "gcodim/asymptotics.hpp"
#include "gcodim/codim.hpp"
#include "gcodim/oracle.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace gcodim::app {

using nlohmann::json;

enum ExitCode { Ok = 0, VerifyFailed = 1, ParseFailure = 2, SemanticFailure = 3 };

struct NamedStructure {
    std::string id;
    Structure s;
};

/// Group input: builtin name string or {"order", "table", "labels"}.
FiniteGroup parse_group(const json& j);
/// Elementary: {"group", "vector"}; fine: {"group", "subgroup", "cocycle"?};
/// G-simple: {"group", "subgroup", "cocycle"?, "vector"}. Optional "id", "kind".
NamedStructure parse_structure(const json& j);
/// Reads a file, or standard input for "-".
json read_json_source(const std::string& path);

json analyze_json(const NamedStructure& s);
json group_json(const FiniteGroup& g, int max_len);
json radical_json(const RadicalConstant& c);

struct AsymRequest {
    Target target = Target::CSequence;
    AlphaMode mode = AlphaMode::Derived;
    int digits = 12;
};
json asym_json(const NamedStructure& s, const AsymRequest& req);

enum class CodimKind { Exact, Proxy, T };
struct CodimRequest {
    CodimKind kind = CodimKind::Exact;
    int n_lo = 0, n_hi = 3;
    bool csv = false;
    OracleCaps caps;
};
/// Returns the formatted output (JSON or CSV).
std::string codim_output(const NamedStructure& s, const CodimRequest& req);

std::string converge_csv(const NamedStructure& s, AlphaMode mode, const std::vector<int>& ns);

struct VerifyRecord {
    std::string check, structure;
    int n = 0;
    std::string lhs, rhs;
    bool pass = false;
    long elapsed_ms = 0;
};

struct VerifyOptions {
    OracleCaps caps;
    int t_max_n = 4;
    bool timing = true;
    unsigned jobs = 0;
};

std::vector<NamedStructure> default_fleet();
std::vector<NamedStructure> parse_fleet(const json& j);
std::vector<VerifyRecord> run_verify(const std::vector<NamedStructure>& fleet,
                                     const VerifyOptions& opt);
json report_json(const std::vector<VerifyRecord>& recs, bool timing);

struct D3Report {
    json body;
    bool ok = true;
};
D3Report example_d3();

/// Parses "a..b".
std::pair<int, int> parse_range(const std::string& s);
/// Parses "a,b,c".
std::vector<int> parse_int_list(const std::string& s);

} // namespace gcodim::app

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bszego/weights.hpp"

namespace bsz {

struct Param {
    std::string key;
    std::string text;  // rendered value
    double num = 0.0;
    bool numeric = true;

    static Param of(std::string key, double v);
    static Param of(std::string key, std::string v);
};

using Params = std::vector<Param>;

struct VerificationRecord {
    std::string theorem_id;
    Params params;
    double closed_form = 0.0;
    double oracle_value = 0.0;
    double abs_error = 0.0;
    double tol = 0.0;
    bool passed = false;
    std::string note;  // error text for records that threw
    std::int64_t runtime_ms = 0;

    // Sets abs_error = |closed_form - oracle_value| and passed.
    void settle();
};

// theorem_id, then params pairwise (numeric values compared as numbers)
bool record_less(const VerificationRecord& a, const VerificationRecord& b);

using Grid = std::map<std::string, std::vector<double>>;

struct SuiteInfo {
    std::string id;
    int criterion = 0;
    double default_tol = 1e-8;
    Grid default_grid;
    std::string summary;
};

const std::vector<SuiteInfo>& suite_list();
// Throws UnknownSuite.
const SuiteInfo& find_suite(const std::string& id);

struct RunConfig {
    std::vector<std::string> suites;         // empty or {"all"} runs every suite
    std::map<std::string, Grid> grids;       // per-suite overrides, merged key by key
    std::map<std::string, double> tolerances;  // per-suite tolerance
    std::optional<double> tol;               // overrides every tolerance
    int jobs = 1;
    std::uint64_t seed = 20240601;
    std::string output_path;
    std::string output_format = "text";

    // {suites, grids, tolerances, output: {path, format}}; throws InvalidSpec.
    static RunConfig from_json(const std::string& text);
};

// Reads BSZEGO_SEED when set.
std::uint64_t seed_from_env(std::uint64_t fallback);

std::vector<VerificationRecord> run_verify(const RunConfig& cfg);

// Runs every suite tied to one acceptance criterion with its defaults.
std::vector<VerificationRecord> run_criterion(int criterion, int jobs = 1);

enum class ReportFormat { Json, Csv, Text };
ReportFormat parse_report_format(const std::string& s);

std::string report(std::vector<VerificationRecord> records, ReportFormat format);
// Inverse of the JSON report.
std::vector<VerificationRecord> parse_report(const std::string& json_text);

enum class RuleFormat { Json, Csv };
RuleFormat parse_rule_format(const std::string& s);

// Closed-form rule for the family: CosPlusCosh, SquaredCosPlusCosh or
// CoshMinusCosOverT; 17 significant digits.
std::string dump_rule(int n, int m, double a, Family family, RuleFormat format);

}  // namespace bsz

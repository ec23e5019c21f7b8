#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bszego/error.hpp"
#include "bszego/verify.hpp"

namespace {

constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bsz::Error(bsz::ErrorKind::InvalidSpec, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw bsz::Error(bsz::ErrorKind::InvalidSpec, "cannot write " + path);
    out << text;
}

bool all_passed(const std::vector<bsz::VerificationRecord>& rs) {
    for (const auto& r : rs)
        if (!r.passed) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bernstein-Szego weights: closed-form rules and numerical verification"};
    app.require_subcommand(1);

    std::vector<std::string> suites;
    std::string config_path, out_path, verify_format;
    int jobs = 1;
    double tol = 0.0;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suites, "suite id or 'all' (repeatable)");
    verify->add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    auto* tol_opt = verify->add_option("--tol", tol, "tolerance for every record")->check(CLI::PositiveNumber);
    verify->add_option("--format", verify_format, "json, csv or text");
    verify->add_option("--out", out_path, "report file (default stdout)");

    int n = 1, m = 1;
    double a = 1.0;
    std::string family = "CosPlusCosh", rule_format = "json";
    auto* rule = app.add_subcommand("rule", "print a closed-form quadrature rule");
    rule->add_option("--n", n)->required();
    rule->add_option("--m", m)->required();
    rule->add_option("--a", a)->required();
    rule->add_option("--family", family, "CosPlusCosh, SquaredCosPlusCosh or CoshMinusCosOverT");
    rule->add_option("--format", rule_format, "json or csv");

    std::string in_path, report_format = "text";
    auto* rep = app.add_subcommand("report", "re-render a JSON report");
    rep->add_option("--in", in_path)->required()->check(CLI::ExistingFile);
    rep->add_option("--format", report_format, "json, csv or text");

    auto* list = app.add_subcommand("list", "list registered suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*verify) {
            bsz::RunConfig cfg;
            if (!config_path.empty()) cfg = bsz::RunConfig::from_json(slurp(config_path));
            if (!suites.empty()) cfg.suites = suites;
            if (verify->count("--jobs")) cfg.jobs = jobs;
            if (*tol_opt) cfg.tol = tol;
            if (!verify_format.empty()) cfg.output_format = verify_format;
            if (!out_path.empty()) cfg.output_path = out_path;
            cfg.seed = bsz::seed_from_env(cfg.seed);
            const auto fmt = bsz::parse_report_format(cfg.output_format);
            for (const auto& s : cfg.suites)
                if (s != "all") bsz::find_suite(s);
            auto records = bsz::run_verify(cfg);
            emit(bsz::report(records, fmt), cfg.output_path);
            return all_passed(records) ? 0 : 1;
        }
        if (*rule) {
            std::cout << bsz::dump_rule(n, m, a, bsz::parse_family(family), bsz::parse_rule_format(rule_format));
            return 0;
        }
        if (*rep) {
            auto records = bsz::parse_report(slurp(in_path));
            std::cout << bsz::report(records, bsz::parse_report_format(report_format));
            return all_passed(records) ? 0 : 1;
        }
        if (*list) {
            for (const auto& s : bsz::suite_list())
                std::cout << s.id << "\t" << s.criterion << "\t" << s.summary << "\n";
            return 0;
        }
    } catch (const bsz::Error& e) {
        std::cerr << "bszego: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

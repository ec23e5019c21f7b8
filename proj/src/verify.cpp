#include "bszego/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "bszego/error.hpp"
#include "bszego/quadrature.hpp"
#include "suites.hpp"

namespace bsz {

namespace {

using nlohmann::json;

std::string shortest(double v) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string g17(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string params_text(const Params& ps, char sep) {
    std::string s;
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i) s += sep;
        s += ps[i].key + "=" + ps[i].text;
    }
    return s;
}

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double from_num(const json& j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

std::string summary_line(const std::vector<VerificationRecord>& rs) {
    size_t ok = std::count_if(rs.begin(), rs.end(), [](const auto& r) { return r.passed; });
    return std::to_string(ok) + "/" + std::to_string(rs.size()) + " passed";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) {
        if (c == '"') o += '"';
        o += c;
    }
    return o + "\"";
}

}  // namespace

Param Param::of(std::string key, double v) {
    Param p;
    p.key = std::move(key);
    p.num = v;
    p.text = shortest(v);
    p.numeric = true;
    return p;
}

Param Param::of(std::string key, std::string v) {
    Param p;
    p.key = std::move(key);
    p.text = std::move(v);
    p.numeric = false;
    return p;
}

void VerificationRecord::settle() {
    abs_error = std::abs(closed_form - oracle_value);
    passed = std::isfinite(abs_error) && abs_error <= tol;
}

bool record_less(const VerificationRecord& a, const VerificationRecord& b) {
    if (a.theorem_id != b.theorem_id) return a.theorem_id < b.theorem_id;
    const size_t n = std::min(a.params.size(), b.params.size());
    for (size_t i = 0; i < n; ++i) {
        const Param& x = a.params[i];
        const Param& y = b.params[i];
        if (x.key != y.key) return x.key < y.key;
        if (x.numeric && y.numeric) {
            if (x.num != y.num) return x.num < y.num;
        } else if (x.text != y.text) {
            return x.text < y.text;
        }
    }
    return a.params.size() < b.params.size();
}

RunConfig RunConfig::from_json(const std::string& text) {
    RunConfig cfg;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidSpec, std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw Error(ErrorKind::InvalidSpec, "config must be a JSON object");
    try {
        if (j.contains("suites")) cfg.suites = j.at("suites").get<std::vector<std::string>>();
        if (j.contains("grids"))
            for (const auto& [suite, g] : j.at("grids").items())
                for (const auto& [key, vals] : g.items())
                    cfg.grids[suite][key] = vals.is_array() ? vals.get<std::vector<double>>()
                                                            : std::vector<double>{vals.get<double>()};
        if (j.contains("tolerances"))
            for (const auto& [suite, t] : j.at("tolerances").items()) cfg.tolerances[suite] = t.get<double>();
        if (j.contains("output")) {
            const json& o = j.at("output");
            if (o.contains("path")) cfg.output_path = o.at("path").get<std::string>();
            if (o.contains("format")) cfg.output_format = o.at("format").get<std::string>();
        }
        if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<int>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidSpec, std::string("bad config field: ") + e.what());
    }
    return cfg;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
    const char* s = std::getenv("BSZEGO_SEED");
    if (!s || !*s) return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (*end != '\0') throw Error(ErrorKind::InvalidSpec, "BSZEGO_SEED must be an unsigned integer");
    return v;
}

std::vector<VerificationRecord> run_verify(const RunConfig& cfg) {
    std::vector<std::string> ids;
    if (cfg.suites.empty() || (cfg.suites.size() == 1 && cfg.suites[0] == "all")) {
        for (const auto& s : suite_list()) ids.push_back(s.id);
    } else {
        ids = cfg.suites;
    }

    std::vector<detail::Job> jobs;
    for (const auto& id : ids) {
        const SuiteInfo& info = find_suite(id);
        detail::SuiteContext ctx;
        ctx.grid = info.default_grid;
        if (auto g = cfg.grids.find(id); g != cfg.grids.end())
            for (const auto& [k, v] : g->second) {
                if (!info.default_grid.count(k))
                    throw Error(ErrorKind::InvalidSpec, "suite " + id + " has no grid key '" + k + "'");
                if (v.empty()) throw Error(ErrorKind::InvalidSpec, "empty grid for " + id + "." + k);
                ctx.grid[k] = v;
            }
        ctx.tol = info.default_tol;
        if (auto t = cfg.tolerances.find(id); t != cfg.tolerances.end()) ctx.tol = t->second;
        if (cfg.tol) ctx.tol = *cfg.tol;
        ctx.seed = cfg.seed;
        auto more = detail::expand_suite(id, ctx);
        for (auto& j : more) {
            std::sort(j.params.begin(), j.params.end(),
                      [](const Param& a, const Param& b) { return a.key < b.key; });
            j.tol = ctx.tol;
            jobs.push_back(std::move(j));
        }
    }

    std::vector<std::vector<VerificationRecord>> results(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next++; i < jobs.size(); i = next++) {
            const auto t0 = std::chrono::steady_clock::now();
            std::vector<VerificationRecord> out;
            try {
                out = jobs[i].run();
            } catch (const std::exception& e) {
                VerificationRecord r;
                r.theorem_id = jobs[i].id;
                r.params = jobs[i].params;
                r.closed_form = r.oracle_value = r.abs_error = std::numeric_limits<double>::quiet_NaN();
                r.tol = jobs[i].tol;
                r.passed = false;
                r.note = e.what();
                out.push_back(std::move(r));
            }
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
            for (auto& r : out) {
                r.runtime_ms = ms;
                std::sort(r.params.begin(), r.params.end(),
                          [](const Param& a, const Param& b) { return a.key < b.key; });
            }
            results[i] = std::move(out);
        }
    };
    const int n_threads = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(jobs.size())));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<VerificationRecord> all;
    for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(all));
    std::stable_sort(all.begin(), all.end(), record_less);
    return all;
}

std::vector<VerificationRecord> run_criterion(int criterion, int jobs) {
    RunConfig cfg;
    cfg.jobs = jobs;
    cfg.seed = seed_from_env(cfg.seed);
    for (const auto& s : suite_list())
        if (s.criterion == criterion) cfg.suites.push_back(s.id);
    if (cfg.suites.empty()) throw Error(ErrorKind::UnknownSuite, "no suite for criterion " + std::to_string(criterion));
    return run_verify(cfg);
}

ReportFormat parse_report_format(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "text") return ReportFormat::Text;
    throw Error(ErrorKind::InvalidSpec, "unknown report format '" + s + "'");
}

std::string report(std::vector<VerificationRecord> records, ReportFormat format) {
    std::stable_sort(records.begin(), records.end(), record_less);
    const size_t passed = std::count_if(records.begin(), records.end(), [](const auto& r) { return r.passed; });
    std::ostringstream out;
    switch (format) {
        case ReportFormat::Json: {
            json rs = json::array(), timing = json::array();
            for (const auto& r : records) {
                json p = json::object();
                for (const auto& q : r.params) {
                    if (!q.numeric)
                        p[q.key] = q.text;
                    else if (q.num == std::trunc(q.num) && std::abs(q.num) < 1e15)
                        p[q.key] = static_cast<std::int64_t>(q.num);
                    else
                        p[q.key] = q.num;
                }
                json o = {{"theorem_id", r.theorem_id}, {"params", p},
                          {"closed_form", num(r.closed_form)}, {"oracle_value", num(r.oracle_value)},
                          {"abs_error", num(r.abs_error)}, {"tol", r.tol}, {"passed", r.passed}};
                if (!r.note.empty()) o["note"] = r.note;
                rs.push_back(o);
                timing.push_back(r.runtime_ms);
            }
            json doc = {{"records", rs},
                        {"summary", {{"passed", passed}, {"failed", records.size() - passed}, {"total", records.size()}}},
                        {"timing", {{"runtime_ms", timing}}}};
            out << doc.dump(2) << "\n";
            break;
        }
        case ReportFormat::Csv: {
            out << "theorem_id,params,closed_form,oracle_value,abs_error,tol,passed,note\n";
            for (const auto& r : records)
                out << csv_field(r.theorem_id) << "," << csv_field(params_text(r.params, ';')) << ","
                    << g17(r.closed_form) << "," << g17(r.oracle_value) << "," << g17(r.abs_error) << ","
                    << g17(r.tol) << "," << (r.passed ? "true" : "false") << "," << csv_field(r.note) << "\n";
            out << "# " << summary_line(records) << "\n";
            break;
        }
        case ReportFormat::Text: {
            out << "status  theorem            abs_error       tol       params\n";
            for (const auto& r : records) {
                char buf[96];
                std::snprintf(buf, sizeof buf, "%-6s  %-18s %-15.3e %-9.1e ", r.passed ? "PASS" : "FAIL",
                              r.theorem_id.c_str(), r.abs_error, r.tol);
                out << buf << params_text(r.params, ' ');
                if (!r.note.empty()) out << "  [" << r.note << "]";
                out << "\n";
            }
            out << summary_line(records) << "\n";
            break;
        }
    }
    return out.str();
}

std::vector<VerificationRecord> parse_report(const std::string& json_text) {
    std::vector<VerificationRecord> out;
    try {
        json doc = json::parse(json_text);
        const json& rs = doc.at("records");
        std::vector<std::int64_t> ms;
        if (doc.contains("timing")) ms = doc.at("timing").at("runtime_ms").get<std::vector<std::int64_t>>();
        for (size_t i = 0; i < rs.size(); ++i) {
            const json& o = rs[i];
            VerificationRecord r;
            r.theorem_id = o.at("theorem_id").get<std::string>();
            for (const auto& [k, v] : o.at("params").items())
                r.params.push_back(v.is_number() ? Param::of(k, v.get<double>()) : Param::of(k, v.get<std::string>()));
            r.closed_form = from_num(o.at("closed_form"));
            r.oracle_value = from_num(o.at("oracle_value"));
            r.abs_error = from_num(o.at("abs_error"));
            r.tol = o.at("tol").get<double>();
            r.passed = o.at("passed").get<bool>();
            if (o.contains("note")) r.note = o.at("note").get<std::string>();
            if (i < ms.size()) r.runtime_ms = ms[i];
            out.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidSpec, std::string("not a verification report: ") + e.what());
    }
    return out;
}

RuleFormat parse_rule_format(const std::string& s) {
    if (s == "json") return RuleFormat::Json;
    if (s == "csv") return RuleFormat::Csv;
    throw Error(ErrorKind::InvalidSpec, "unknown rule format '" + s + "'");
}

std::string dump_rule(int n, int m, double a, Family family, RuleFormat format) {
    QuadratureRule r;
    switch (family) {
        case Family::CosPlusCosh: r = rule_cos_plus_cosh(n, m, a); break;
        case Family::SquaredCosPlusCosh: r = rule_squared(n, m, a); break;
        case Family::CoshMinusCosOverT: r = rule_cosh_minus_cos(n, m, a); break;
        default:
            throw Error(ErrorKind::InvalidSpec, std::string("no closed-form rule for ") + family_name(family));
    }
    std::ostringstream out;
    if (format == RuleFormat::Csv) {
        out << "node,weight\n";
        for (size_t i = 0; i < r.nodes.size(); ++i) out << g17(r.nodes[i]) << "," << g17(r.weights[i]) << "\n";
        return out.str();
    }
    auto list = [&](const std::vector<double>& v) {
        out << "[";
        for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << g17(v[i]);
        out << "]";
    };
    out << "{\"nodes\":";
    list(r.nodes);
    out << ",\"weights\":";
    list(r.weights);
    out << ",\"exact_degree\":" << r.exact_degree << ",\"constraint\":{\"p_zero_at_origin\":"
        << (r.constraint == RuleConstraint::RequiresPZeroAtOrigin ? "true" : "false") << "}"
        << ",\"spec\":{\"n\":" << n << ",\"m\":" << m << ",\"a\":" << g17(a) << ",\"family\":\""
        << family_name(family) << "\"}}\n";
    return out.str();
}

}  // namespace bsz

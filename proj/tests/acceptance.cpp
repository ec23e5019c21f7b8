#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bszego/verify.hpp"

namespace {

const std::map<int, std::string> kTitles = {
    {1, "odd-parity orthogonality rows"},
    {2, "even-parity orthogonality rows"},
    {3, "squared-weight orthogonality rows"},
    {4, "gauss rule exactness"},
    {5, "squared-weight rule exactness"},
    {6, "signed rule exactness"},
    {7, "corollaries A, B, C"},
    {8, "generating-function sums"},
    {9, "fejer-riesz factors"},
    {10, "kernel reproducing property"},
    {11, "matched-moment measures"},
    {12, "finite ramanujan analog"},
    {13, "theta integral and fourier checks"},
    {14, "partial fractions"},
    {15, "limiting and improper integrals"},
    {16, "generating-function identities"},
};

std::string params_text(const bsz::Params& ps) {
    std::string s;
    for (const auto& p : ps) s += (s.empty() ? "" : " ") + p.key + "=" + p.text;
    return s;
}

bool run(int c, int jobs, int show) {
    auto rs = bsz::run_criterion(c, jobs);
    std::vector<const bsz::VerificationRecord*> bad;
    double worst = 0.0;
    for (const auto& r : rs) {
        if (!r.passed) bad.push_back(&r);
        else if (r.tol > 0.0) worst = std::max(worst, r.abs_error / r.tol);
    }
    const bool ok = bad.empty() && !rs.empty();
    std::printf("criterion %d: %s %s (%zu/%zu records, worst passing error/tol %.2g)\n", c,
                ok ? "PASS" : "FAIL", kTitles.at(c).c_str(), rs.size() - bad.size(), rs.size(), worst);
    for (int i = 0; i < std::min<int>(show, bad.size()); ++i) {
        const auto& r = *bad[i];
        std::printf("    %s [%s] error %.3g tol %.3g%s%s\n", r.theorem_id.c_str(), params_text(r.params).c_str(),
                    r.abs_error, r.tol, r.note.empty() ? "" : " ", r.note.c_str());
    }
    if (int(bad.size()) > show) std::printf("    ... %zu more\n", bad.size() - show);
    std::fflush(stdout);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> criteria;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    int show = 5;
    app.add_option("--criterion", criteria, "criterion number 1-16 (repeatable; default all)")
        ->check(CLI::Range(1, 16));
    app.add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    app.add_option("--show", show, "failing records listed per criterion")->check(CLI::NonNegativeNumber);
    CLI11_PARSE(app, argc, argv);
    if (criteria.empty())
        for (int c = 1; c <= 16; ++c) criteria.push_back(c);

    int failed = 0;
    for (int c : criteria) failed += run(c, jobs, show) ? 0 : 1;
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

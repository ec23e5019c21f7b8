#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "bszego/error.hpp"
#include "bszego/oracle.hpp"
#include "bszego/orthopoly.hpp"
#include "bszego/pick.hpp"
#include "bszego/quadrature.hpp"
#include "bszego/trig.hpp"

namespace bsz {

namespace {

using detail::Job;
using detail::SuiteContext;
using Records = std::vector<VerificationRecord>;

const double kPi = std::numbers::pi;

std::vector<double> range(int lo, int hi, int step = 1) {
    std::vector<double> v;
    for (int i = lo; i <= hi; i += step) v.push_back(i);
    return v;
}

const std::vector<double> kA3{0.5, 1.0, 2.0};
const std::vector<double> kFib{1, 2, 3, 5, 8, 13, 21, 34, 55};

const std::vector<SuiteInfo>& registry() {
    static const std::vector<SuiteInfo> r = {
        {"f1*", 1, 1e-8, {{"n", range(1, 7, 2)}, {"m", range(1, 7, 2)}, {"a", kA3}},
         "odd n, m: j = -1 row pi/2, rows j = 0..(m+n-2)/2 vanish"},
        {"sinsinh2", 2, 1e-8, {{"n", range(2, 6, 2)}, {"m", range(2, 6, 2)}, {"a", kA3}},
         "even n, m: sin sinh form, j = -1 row pi/2, rows j = 0..(m+n-4)/2 vanish"},
        {"coscosheven2", 2, 1e-8, {{"n", range(2, 6, 2)}, {"m", range(2, 6, 2)}, {"a", kA3}},
         "even n, m: cos cosh form vanishes for j = 0..(m+n-2)/2"},
        {"square", 3, 1e-8, {{"n", range(1, 3)}, {"m", range(1, 3)}, {"a", kA3}},
         "squared weight: j = -1 row pi/2, rows j = 0..n+m-2 vanish"},
        {"quad1", 4, 1e-8,
         {{"n", range(1, 15, 2)}, {"m", range(1, 15, 2)}, {"a", kA3}, {"max_sum", {16}}, {"samples", {100}}},
         "closed-form rule exact on random polynomials of degree m+n-1"},
        {"quad_squared", 5, 1e-8, {{"n", range(1, 5)}, {"m", range(1, 5)}, {"a", kA3}, {"samples", {100}}},
         "squared-weight rule exact on random polynomials of degree 2m+2n-3"},
        {"quad_signed", 6, 1e-8, {{"n", range(1, 7, 2)}, {"m", range(2, 6, 2)}, {"a", kA3}, {"samples", {100}}},
         "signed rule exact on random p with p(0) = 0, degree m+n-1"},
        {"corollary_A", 7, 1e-9, {{"n", range(1, 6)}, {"a", {0.5, 1.0, 3.0}}}, "value pi/4"},
        {"corollary_B", 7, 1e-9, {{"n", range(1, 6)}}, "closed form in (sqrt2 + 1)^{2n}"},
        {"corollary_C", 7, 1e-8, {{"n", range(1, 11)}, {"m", range(1, 11)}, {"max_sum", {12}}},
         "finite sum against the integral, equal parity"},
        {"gen_fn", 8, 1e-8, {{"n", range(1, 7)}, {"m", range(1, 7)}, {"a", kA3}},
         "single-sum form against the integral, 0 <= u < n"},
        {"gen_fn_beta", 8, 1e-10, {{"n", range(1, 7)}, {"m", range(1, 7)}, {"a", kA3}},
         "beta form against the alpha form, |u| < min(n, m)"},
        {"fejer_riesz", 9, 1e-9,
         {{"n", kFib}, {"m", kFib}, {"a", kA3}, {"family", {0, 1}}, {"max_sum", {64}}},
         "Szego factor: residual, degree, h(0) > 0, roots outside the disk"},
        {"kernel", 10, 1e-7, {{"n", range(1, 11, 2)}, {"m", range(1, 11, 2)}, {"a", {1.0, 2.0}}, {"max_sum", {12}}},
         "int K_k(t, 0) dmu = 1"},
        {"measure3", 11, 1e-6,
         {{"n", {1, 3, 3}}, {"m", {1, 3, 5}}, {"phi", {0, 1, 2, 3}}, {"form", {2, 5}}},
         "moments j = 0..2k-2 of the Pick-function measure; n and m paired element-wise"},
        {"measure3_boundary", 11, 0.0, {{"n", {1, 3, 3}}, {"m", {1, 3, 5}}, {"form", {2, 5}}, {"samples", {40}}},
         "moment 2k-1 deviates by > 1e-4 for >= 90% of random phi; n and m paired element-wise"},
        {"353m", 12, 1e-8, {{"n", range(2, 8, 2)}, {"k", range(1, 5, 2)}}, "value pi/4"},
        {"q_f", 12, 1e-12, {{"nu", range(2, 20, 2)}, {"mu", {0, 1, 3}}}, "sum f(j) = nu/2 and |q_j| < 1"},
        {"tt", 13, 1e-8, {{"n", range(1, 9, 2)}, {"m", range(3, 9, 2)}}, "(pi/4n) S(n, m)"},
        {"tsgf", 13, 1e-7, {{"n", {3, 5, 7}}, {"R", {20}}}, "Fourier coefficients S(n, K)/n for K = 3..2R+1"},
        {"pf0", 14, 1e-10, {{"k", range(1, 8)}, {"samples", {100}}}, "1/((1-z^2) U_{k-1}(z)) partial fractions"},
        {"pf", 14, 1e-10, {{"k", range(1, 8)}, {"c", {0.0, 0.3, 0.9}}, {"samples", {100}}},
         "reciprocal cos form partial fractions, theta in [0, pi/2]"},
        {"pf_u_theta", 14, 1e-10, {{"k", range(1, 8)}, {"samples", {100}}},
         "reciprocal sin form partial fractions at exp(-i theta)"},
        {"arctan1", 15, 1e-6, {{"a", kA3}}, "atan(a)/2"},
        {"z", 15, 1e-6, {{"k", range(1, 3)}}, "x^{4k-1} moment vanishes"},
        {"form1", 15, 1e-6, {{"n", range(1, 5, 2)}, {"a", kA3}}, "finite atan(a)/2 analogue, odd n"},
        {"coscosheven", 15, 1e-6, {{"n", range(2, 6, 2)}}, "even n cos cosh integral vanishes"},
        {"alpha", 15, 1e-6, {{"alpha_over_pi", {0.125, 0.25, 0.375}}}, "alpha/2"},
        {"limit_series", 15, 1e-6,
         {{"kind", range(0, 4)}, {"alpha", {0.7, 1.0, 1.3}}, {"beta", {0.8, 1.5}}, {"poly", {0, 1}}},
         "limiting series against the improper integral"},
        {"limit_parity", 15, 1e-10, {{"alpha", {0.7, 1.0, 1.3}}, {"poly", {0, 1}}},
         "the two cosh - cos series forms agree"},
        {"glaisher", 15, 1e-6, {{"a", kA3}}, "theta series against the integral"},
        {"proof_identities", 16, 1e-12, {{"n", range(1, 8)}, {"m", range(1, 9, 2)}, {"samples", {20}}},
         "partial-fraction identities (a), (b), (c)"},
        {"gen_fn_poly", 0, 1e-8, {{"n", range(1, 7)}, {"m", range(1, 7)}, {"a", kA3}},
         "single-sum form with a random polynomial of degree n-1"},
        {"gen_fn_odd", 0, 1e-8, {{"n", range(2, 5)}, {"m", range(2, 5)}, {"a", kA3}},
         "odd-u cosh - cos single sums against the integral, alpha and beta forms"},
        {"rule_moments", 0, 1e-7, {{"n", range(1, 7, 2)}, {"m", range(1, 7, 2)}, {"a", kA3}},
         "moment-matched weights reproduce the closed-form rule"},
    };
    return r;
}

int as_int(double v) { return static_cast<int>(std::lround(v)); }

std::vector<int> ints(const Grid& g, const std::string& key) {
    std::vector<int> out;
    for (double v : g.at(key)) out.push_back(as_int(v));
    return out;
}

double one(const Grid& g, const std::string& key) { return g.at(key).front(); }

std::vector<std::pair<int, int>> zipped(const Grid& g) {
    std::vector<int> ns = ints(g, "n"), ms = ints(g, "m");
    if (ns.size() != ms.size()) throw Error(ErrorKind::InvalidSpec, "n and m lists must have equal length");
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < ns.size(); ++i) out.emplace_back(ns[i], ms[i]);
    return out;
}

std::uint64_t mix_seed(std::uint64_t seed, const std::string& id, const Params& ps) {
    std::uint64_t h = 1469598103934665603ull ^ seed;
    auto eat = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    eat(id);
    for (const auto& p : ps) eat(p.key + "=" + p.text);
    return h;
}

VerificationRecord make(const std::string& id, Params ps, double closed, double oracle_val, double tol) {
    VerificationRecord r;
    r.theorem_id = id;
    r.params = std::move(ps);
    r.closed_form = closed;
    r.oracle_value = oracle_val;
    r.tol = tol;
    r.settle();
    return r;
}

// record whose error is not |closed - oracle|
VerificationRecord make_err(const std::string& id, Params ps, double closed, double oracle_val, double err,
                            double tol) {
    VerificationRecord r = make(id, std::move(ps), closed, oracle_val, tol);
    r.abs_error = err;
    r.passed = std::isfinite(err) && err <= tol;
    return r;
}

Params with(Params ps, Param p) {
    ps.push_back(std::move(p));
    return ps;
}

double theta_int(const std::function<double(double)>& f, double a) {
    return oracle::integrate(oracle::IntegrandSpec::theta(f, a), 1e-12).value;
}

RealPolynomial random_poly(std::mt19937_64& rng, int degree) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> c(degree + 1);
    for (double& x : c) x = u(rng);
    return RealPolynomial(c);
}

// 100 random polynomials through a rule and the oracle; worst normalised error
Records exactness(const std::string& id, const Params& ps, const QuadratureRule& rule, int degree, int samples,
                  bool zero_at_origin, std::uint64_t seed, double tol) {
    std::mt19937_64 rng(seed);
    double worst = -1.0, wr = 0.0, wo = 0.0;
    for (int s = 0; s < samples; ++s) {
        RealPolynomial p = random_poly(rng, degree);
        std::function<double(double)> f;
        if (zero_at_origin) {
            std::vector<double> c = p.coeffs();
            c[0] = 0.0;
            p = RealPolynomial(c);
            // p(t) / (cosh - cos) = (p(t) / t) / rho for this family
            RealPolynomial q = p.divide_linear(0.0);
            f = [&rule, q](double t) { return q(t) * weight_theta_density(rule.spec, t); };
        } else {
            f = [&rule, &p](double t) { return p(t) * weight_theta_density(rule.spec, t); };
        }
        double r = apply_rule(rule, p);
        double o = theta_int(f, rule.spec.a);
        double e = std::abs(r - o) / (1.0 + std::abs(o));
        if (e > worst) {
            worst = e;
            wr = r;
            wo = o;
        }
    }
    return {make_err(id, ps, wr, wo, worst, tol)};
}

using Expander = std::function<void(const SuiteContext&, std::vector<Job>&)>;

// sin_ratio(n, t) sinh_ratio(m, t/a) t / sqrt a = sin(n asin sqrt t) sinh(m asinh sqrt(t/a))
double eta_over_t(int n, int m, double a, double t) {
    return sin_ratio(n, t) * sinh_ratio(m, t / a) / std::sqrt(a);
}

double xi_value(int n, int m, double a, double t) { return cos_branch(n, t) * cosh_branch(m, t / a); }

void expand_vanishing(const std::string& id, const SuiteContext& ctx, std::vector<Job>& jobs) {
    for (int n : ints(ctx.grid, "n"))
        for (int m : ints(ctx.grid, "m"))
            for (double a : ctx.grid.at("a")) {
                Params ps{Param::of("a", a), Param::of("m", m), Param::of("n", n)};
                const double tol = ctx.tol;
                jobs.push_back({id, ps, [=]() {
                    Records out;
                    int jlo = -1, jhi = 0;
                    std::function<double(double, int)> f;
                    if (id == "f1*") {
                        if (n % 2 == 0 || m % 2 == 0) throw Error(ErrorKind::ParityError, "needs odd n, m");
                        const WeightSpec w = WeightSpec::make(n, m, a, Family::CosPlusCosh);
                        jhi = (m + n - 2) / 2;
                        f = [=](double t, int j) {
                            return std::sqrt(a) * eta_over_t(n, m, a, t) * std::pow(t, j + 1) / rho_eval(w, t);
                        };
                    } else if (id == "sinsinh2") {
                        if (n % 2 == 1 || m % 2 == 1) throw Error(ErrorKind::ParityError, "needs even n, m");
                        const WeightSpec w = WeightSpec::make(n, m, a, Family::CosPlusCosh);
                        jhi = (m + n - 4) / 2;
                        f = [=](double t, int j) {
                            double s = std::sqrt(std::max(0.0, (1.0 - t) * (a + t)));
                            return eta_over_t(n, m, a, t) * std::pow(t, j + 1) / rho_eval(w, t) * s;
                        };
                    } else if (id == "coscosheven2") {
                        if (n % 2 == 1 || m % 2 == 1) throw Error(ErrorKind::ParityError, "needs even n, m");
                        const WeightSpec w = WeightSpec::make(n, m, a, Family::CosPlusCosh);
                        jlo = 0;
                        jhi = (m + n - 2) / 2;
                        f = [=](double t, int j) { return xi_value(n, m, a, t) * std::pow(t, j) / rho_eval(w, t); };
                    } else {
                        const WeightSpec w = WeightSpec::make(n, m, a, Family::CosPlusCosh);
                        jhi = n + m - 2;
                        f = [=](double t, int j) {
                            double s = std::sqrt(std::max(0.0, (1.0 - t) * (a + t)));
                            double r = rho_eval(w, t);
                            return eta_over_t(2 * n, 2 * m, a, t) * std::pow(t, j + 1) / (r * r) * s;
                        };
                    }
                    for (int j = jlo; j <= jhi; ++j) {
                        double v = theta_int([&](double t) { return f(t, j); }, a);
                        out.push_back(make(id, with(ps, Param::of("j", j)), j == -1 ? kPi / 2 : 0.0, v, tol));
                    }
                    return out;
                }});
            }
}

const std::map<std::string, Expander>& expanders() {
    static const std::map<std::string, Expander> e = {
        {"f1*", [](const SuiteContext& c, std::vector<Job>& j) { expand_vanishing("f1*", c, j); }},
        {"sinsinh2", [](const SuiteContext& c, std::vector<Job>& j) { expand_vanishing("sinsinh2", c, j); }},
        {"coscosheven2",
         [](const SuiteContext& c, std::vector<Job>& j) { expand_vanishing("coscosheven2", c, j); }},
        {"square", [](const SuiteContext& c, std::vector<Job>& j) { expand_vanishing("square", c, j); }},
        {"quad1",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             const int max_sum = as_int(one(c.grid, "max_sum")), samples = as_int(one(c.grid, "samples"));
             for (int n : ints(c.grid, "n"))
                 for (int m : ints(c.grid, "m")) {
                     if (n % 2 == 0 || m % 2 == 0 || n + m > max_sum) continue;
                     for (double a : c.grid.at("a")) {
                         Params ps{Param::of("a", a), Param::of("m", m), Param::of("n", n)};
                         std::uint64_t seed = mix_seed(c.seed, "quad1", ps);
                         double tol = c.tol;
                         jobs.push_back({"quad1", ps, [=]() {
                             QuadratureRule r = rule_cos_plus_cosh(n, m, a);
                             return exactness("quad1", ps, r, m + n - 1, samples, false, seed, tol);
                         }});
                     }
                 }
         }},
        {"quad_squared",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             const int samples = as_int(one(c.grid, "samples"));
             for (int n : ints(c.grid, "n"))
                 for (int m : ints(c.grid, "m"))
                     for (double a : c.grid.at("a")) {
                         Params ps{Param::of("a", a), Param::of("m", m), Param::of("n", n)};
                         std::uint64_t seed = mix_seed(c.seed, "quad_squared", ps);
                         double tol = c.tol;
                         jobs.push_back({"quad_squared", ps, [=]() {
                             QuadratureRule r = rule_squared(n, m, a);
                             return exactness("quad_squared", ps, r, 2 * m + 2 * n - 3, samples, false, seed, tol);
                         }});
                     }
         }},
        {"quad_signed",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             const int samples = as_int(one(c.grid, "samples"));
             for (int n : ints(c.grid, "n"))
                 for (int m : ints(c.grid, "m"))
                     for (double a : c.grid.at("a")) {
                         Params ps{Param::of("a", a), Param::of("m", m), Param::of("n", n)};
                         std::uint64_t seed = mix_seed(c.seed, "quad_signed", ps);
                         double tol = c.tol;
                         jobs.push_back({"quad_signed", ps, [=]() {
                             QuadratureRule r = rule_cosh_minus_cos(n, m, a);
                             return exactness("quad_signed", ps, r, m + n - 1, samples, true, seed, tol);
                         }});
                     }
         }},
        {"corollary_A",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (int n : ints(c.grid, "n"))
                 for (double a : c.grid.at("a")) {
                     Params ps{Param::of("a", a), Param::of("n", n)};
                     double tol = c.tol;
                     jobs.push_back({"corollary_A", ps, [=]() {
                         CorollaryValue v = corollary_eval(Corollary::A, n, 0, a);
                         return Records{make("corollary_A", ps, v.closed_form, v.oracle_value, tol)};
                     }});
                 }
         }},
        {"corollary_B",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (int n : ints(c.grid, "n")) {
                 Params ps{Param::of("n", n)};
                 double tol = c.tol;
                 jobs.push_back({"corollary_B", ps, [=]() {
                     CorollaryValue v = corollary_eval(Corollary::B, n);
                     return Records{make("corollary_B", ps, v.closed_form, v.oracle_value, tol)};
                 }});
             }
         }},
        {"corollary_C",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             const int max_sum = as_int(one(c.grid, "max_sum"));
             for (int n : ints(c.grid, "n"))
                 for (int m : ints(c.grid, "m")) {
                     if ((n + m) % 2 != 0 || n + m > max_sum) continue;
                     Params ps{Param::of("m", m), Param::of("n", n)};
                     double tol = c.tol;
                     jobs.push_back({"corollary_C", ps, [=]() {
                         CorollaryValue v = corollary_eval(Corollary::C, n, m);
                         return Records{make("corollary_C", ps, v.closed_form, v.oracle_value, tol)};
                     }});
                 }
         }},
        {"gen_fn",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (int n : ints(c.grid, "n"))
                 for (int m : ints(c.grid, "m"))
                     for (double a : c.grid.at("a")) {
                         Params ps{Param::of("a", a), Param::of("m", m), Param::of("n", n)};
                         double tol = c.tol;
                         jobs.push_back({"gen_fn", ps, [=]() {
                             Records out;
                             const WeightSpec w = WeightSpec::make(n, m, a, Family::CosPlusCosh);
                             for (int u = 0; u < n; ++u) {
                                 double o = theta_int(
                                     [&](double t) { return cheb_T(u, 1.0 - 2.0 * t) * weight_theta_density(w, t); },
                                     a);
                                 out.push_back(make("gen_fn", with(ps, Param::of("u", u)), sum_form(n, m, a, u), o, tol));
                             }
                             return out;
                         }});
                     }
         }},
        {"gen_fn_beta",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (int n : ints(c.grid, "n"))
                 for (int m : ints(c.grid, "m"))
                     for (double a : c.grid.at("a")) {
                         Params ps{Param::of("a", a), Param::of("m", m), Param::of("n", n)};
                         double tol = c.tol;
                         jobs.push_back({"gen_fn_beta", ps, [=]() {
                             Records out;
                             for (int u = 1 - std::min(n, m); u < std::min(n, m); ++u)
                                 out.push_back(make("gen_fn_beta", with(ps, Param::of("u", u)),
                                                    sum_form_beta(n, m, a, u), sum_form(n, m, a, u), tol));
                             return out;
                         }});
                     }
         }},
        {"gen_fn_poly",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (int n : ints(c.grid, "n"))
                 for (int m : ints(c.grid, "m"))
                     for (double a : c.grid.at("a")) {
                         Params ps{Param::of("a", a), Param::of("m", m), Param::of("n", n)};
                         std::uint64_t seed = mix_seed(c.seed, "gen_fn_poly", ps);
                         double tol = c.tol;
                         jobs.push_back({"gen_fn_poly", ps, [=]() {
                             std::mt19937_64 rng(seed);
                             RealPolynomial p = random_poly(rng, n - 1);
                             const WeightSpec w = WeightSpec::make(n, m, a, Family::CosPlusCosh);
                             double o = theta_int([&](double t) { return p(t) * weight_theta_density(w, t); }, a);
                             return Records{make("gen_fn_poly", ps, sum_form_poly(n, m, a, p), o, tol)};
                         }});
                     }
         }},
        {"gen_fn_odd",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (int n : ints(c.grid, "n"))
                 for (int m : ints(c.grid, "m"))
                     for (double a : c.grid.at("a")) {
                         Params ps{Param::of("a", a), Param::of("m", m), Param::of("n", n)};
                         double tol = c.tol;
                         jobs.push_back({"gen_fn_odd", ps, [=]() {
                             Records out;
                             const WeightSpec w = WeightSpec::make(n, m, a, Family::CoshMinusCosOverT);
                             for (int u = 1; u < 2 * std::max(n, m) - 2; u += 2) {
                                 // sqrt t sin(u asin sqrt t) / (cosh - cos) = sin_ratio(u, t) / rho
                                 double o = theta_int(
                                     [&](double t) { return sin_ratio(u, t) * weight_theta_density(w, t); }, a);
                                 Params pu = with(ps, Param::of("u", u));
                                 if (u < 2 * n - 2)
                                     out.push_back(make("gen_fn_odd", with(pu, Param::of("form", "alpha")),
                                                        sum_form_odd(n, m, a, u), o, tol));
                                 if (u < 2 * m - 2)
                                     out.push_back(make("gen_fn_odd", with(pu, Param::of("form", "beta")),
                                                        sum_form_odd_beta(n, m, a, u), o, tol));
                             }
                             return out;
                         }});
                     }
         }},
        {"rule_moments",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (int n : ints(c.grid, "n"))
                 for (int m : ints(c.grid, "m"))
                     for (double a : c.grid.at("a")) {
                         Params ps{Param::of("a", a), Param::of("m", m), Param::of("n", n)};
                         double tol = c.tol;
                         jobs.push_back({"rule_moments", ps, [=]() {
                             QuadratureRule r = rule_cos_plus_cosh(n, m, a);
                             QuadratureRule mm = weights_from_moments(r.nodes, r.spec, MeasureFactor::InvSqrtBoth);
                             double worst = 0.0, wc = 0.0, wo = 0.0;
                             for (size_t i = 0; i < r.nodes.size(); ++i) {
                                 double e = std::abs(r.weights[i] - mm.weights[i]) / std::abs(r.weights[i]);
                                 if (e >= worst) {
                                     worst = e;
                                     wc = r.weights[i];
                                     wo = mm.weights[i];
                                 }
                             }
                             return Records{make_err("rule_moments", ps, wc, wo, worst, tol)};
                         }});
                     }
         }},
        {"fejer_riesz",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             const int max_sum = as_int(one(c.grid, "max_sum"));
             for (int f : ints(c.grid, "family"))
                 for (int n : ints(c.grid, "n"))
                     for (int m : ints(c.grid, "m")) {
                         if (n + m > max_sum) continue;
                         for (double a : c.grid.at("a")) {
                             const Family fam = f == 0 ? Family::CosPlusCosh : Family::CoshMinusCosOverT;
                             Params ps{Param::of("a", a), Param::of("family", family_name(fam)), Param::of("m", m),
                                       Param::of("n", n)};
                             double tol = c.tol;
                             jobs.push_back({"fejer_riesz", ps, [=]() {
                                 SzegoFactor h = build_szego_factor(WeightSpec::make(n, m, a, fam));
                                 return Records{make_err("fejer_riesz", ps, 0.0, h.max_factorization_residual,
                                                         h.max_factorization_residual, tol)};
                             }});
                         }
                     }
         }},
        {"kernel",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             const int max_sum = as_int(one(c.grid, "max_sum"));
             for (int n : ints(c.grid, "n"))
                 for (int m : ints(c.grid, "m")) {
                     if (n % 2 == 0 || m % 2 == 0 || n + m > max_sum) continue;
                     for (double a : c.grid.at("a")) {
                         Params ps{Param::of("a", a), Param::of("m", m), Param::of("n", n)};
                         double tol = c.tol;
                         jobs.push_back({"kernel", ps, [=]() {
                             const WeightSpec w = WeightSpec::make(n, m, a, Family::CosPlusCosh);
                             const int k = (n + m) / 2;
                             OrthoPoly pk = explicit_family(w);
                             OrthoPoly pk1 = szego_orthonormal(build_szego_factor(w), k + 1, MeasureFactor::InvSqrtBoth);
                             RealPolynomial K = kernel_polynomial(pk, pk1, 0.0);
                             double o = theta_int([&](double t) { return K(t) * weight_theta_density(w, t); }, a);
                             return Records{make("kernel", with(ps, Param::of("k", k)), 1.0, o, tol)};
                         }});
                     }
                 }
         }},
        {"measure3",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (auto [n, m] : zipped(c.grid)) {
                     for (int phi_id : ints(c.grid, "phi"))
                         for (int form : ints(c.grid, "form")) {
                             Params ps{Param::of("form", form == 5 ? "measure5" : "measure2"), Param::of("m", m),
                                       Param::of("n", n), Param::of("phi", phi_id)};
                             double tol = c.tol;
                             jobs.push_back({"measure3", ps, [=]() {
                                 PickFunction phi;
                                 switch (phi_id) {
                                     case 0: phi = PickFunction::make(0.0, {0.0, 1.0}); break;
                                     case 1: phi = PickFunction::make(0.0, {0.0, 2.0}); break;
                                     case 2: phi = PickFunction::make(0.0, {1.0, 1.0}); break;
                                     default: phi = PickFunction::make(1.0, {0.0, 1.0}, {{1.0, {0.0, -1.0}}});
                                 }
                                 MatchedMeasure mm = example_measure(
                                     n, m, phi, form == 5 ? MeasureForm::Measure5 : MeasureForm::Measure2);
                                 Records out;
                                 for (int j = 0; j <= 2 * mm.k - 2; ++j) {
                                     MomentPair mp = moment_match_check(mm, j);
                                     out.push_back(make_err("measure3", with(ps, Param::of("j", j)), mp.rhs, mp.lhs,
                                                            mp.rel_error(), tol));
                                 }
                                 return out;
                             }});
                         }
                 }
         }},
        {"measure3_boundary",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             const int samples = as_int(one(c.grid, "samples"));
             for (auto [n, m] : zipped(c.grid)) {
                     for (int form : ints(c.grid, "form")) {
                         Params ps{Param::of("form", form == 5 ? "measure5" : "measure2"), Param::of("m", m),
                                   Param::of("n", n)};
                         std::uint64_t seed = mix_seed(c.seed, "measure3_boundary", ps);
                         double tol = c.tol;
                         jobs.push_back({"measure3_boundary", ps, [=]() {
                             SharpnessSample s = boundary_sharpness(
                                 n, m, form == 5 ? MeasureForm::Measure5 : MeasureForm::Measure2, samples, seed);
                             double fr = s.fraction();
                             return Records{make_err("measure3_boundary", ps, 0.9, fr, std::max(0.0, 0.9 - fr), tol)};
                         }});
                     }
                 }
         }},
        {"353m",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (int n : ints(c.grid, "n"))
                 for (int k : ints(c.grid, "k")) {
                     Params ps{Param::of("k", k), Param::of("n", n)};
                     double tol = c.tol;
                     jobs.push_back({"353m", ps, [=]() {
                         Comparison v = ramanujan_353_finite(n, k);
                         return Records{make("353m", ps, v.rhs, v.lhs, tol)};
                     }});
                 }
         }},
        {"q_f",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (int nu : ints(c.grid, "nu"))
                 for (int mu : ints(c.grid, "mu")) {
                     Params ps{Param::of("mu", mu), Param::of("nu", nu)};
                     double tol = c.tol;
                     jobs.push_back({"q_f", ps, [=]() {
                         QfSymmetry q = q_f_symmetry(nu, mu);
                         Records out;
                         out.push_back(make_err("q_f", with(ps, Param::of("check", "sum")), 0.5 * nu, q.sum_f.real(),
                                                std::abs(q.sum_f - Complex(0.5 * nu, 0.0)), tol));
                         out.push_back(make_err("q_f", with(ps, Param::of("check", "modulus")), 1.0, q.max_abs_q,
                                                q.max_abs_q < 1.0 ? 0.0 : q.max_abs_q, tol));
                         out.push_back(make_err("q_f", with(ps, Param::of("check", "pair")), 0.0, q.max_deviation,
                                                q.max_deviation, std::max(tol, 1e-10)));
                         return out;
                     }});
                 }
         }},
        {"tt",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (int n : ints(c.grid, "n"))
                 for (int m : ints(c.grid, "m")) {
                     Params ps{Param::of("m", m), Param::of("n", n)};
                     double tol = c.tol;
                     jobs.push_back({"tt", ps, [=]() {
                         Comparison v = theta_integral(n, m);
                         return Records{make("tt", ps, v.rhs, v.lhs, tol)};
                     }});
                 }
         }},
        {"tsgf",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             const int R = as_int(one(c.grid, "R"));
             for (int n : ints(c.grid, "n")) {
                 Params ps{Param::of("R", R), Param::of("n", n)};
                 double tol = c.tol;
                 jobs.push_back({"tsgf", ps, [=]() {
                     TsgfErrors e = tsgf_fourier_check(n, R);
                     return Records{make_err("tsgf", with(ps, Param::of("part", "sine")), 0.0, e.sine, e.sine, tol),
                                    make_err("tsgf", with(ps, Param::of("part", "cosine")), 0.0, e.cosine, e.cosine, tol),
                                    make_err("tsgf", with(ps, Param::of("part", "complex")), 0.0, e.complex, e.complex,
                                             tol)};
                 }});
             }
         }},
        {"pf0",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             const int samples = as_int(one(c.grid, "samples"));
             for (int k : ints(c.grid, "k")) {
                 Params ps{Param::of("k", k)};
                 std::uint64_t seed = mix_seed(c.seed, "pf0", ps);
                 double tol = c.tol;
                 jobs.push_back({"pf0", ps, [=]() {
                     std::mt19937_64 rng(seed);
                     std::uniform_real_distribution<double> x(-1.5, 1.5), y(-1.0, 1.0);
                     double worst = 0.0;
                     ComplexComparison w;
                     for (int s = 0; s < samples;) {
                         try {
                             ComplexComparison v = pf_reciprocal_U(k, Complex(x(rng), y(rng)));
                             double e = v.error() / std::max(1.0, std::abs(v.lhs));
                             if (e >= worst) worst = e, w = v;
                             ++s;
                         } catch (const Error& err) {
                             if (err.kind() != ErrorKind::PoleProximity) throw;
                         }
                     }
                     return Records{make_err("pf0", ps, std::abs(w.rhs), std::abs(w.lhs), worst, tol)};
                 }});
             }
         }},
        {"pf",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             const int samples = as_int(one(c.grid, "samples"));
             for (int k : ints(c.grid, "k"))
                 for (double cc : c.grid.at("c")) {
                     Params ps{Param::of("c", cc), Param::of("k", k)};
                     std::uint64_t seed = mix_seed(c.seed, "pf", ps);
                     double tol = c.tol;
                     jobs.push_back({"pf", ps, [=]() {
                         std::mt19937_64 rng(seed);
                         std::uniform_real_distribution<double> th(0.0, 0.5 * kPi);
                         double worst = 0.0;
                         ComplexComparison w;
                         for (int s = 0; s < samples;) {
                             try {
                                 ComplexComparison v = pf_reciprocal_T(k, th(rng), cc);
                                 double e = v.error() / std::max(1.0, std::abs(v.lhs));
                                 if (e >= worst) worst = e, w = v;
                                 ++s;
                             } catch (const Error& err) {
                                 if (err.kind() != ErrorKind::PoleProximity) throw;
                             }
                         }
                         return Records{make_err("pf", ps, std::abs(w.rhs), std::abs(w.lhs), worst, tol)};
                     }});
                 }
         }},
        {"pf_u_theta",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             const int samples = as_int(one(c.grid, "samples"));
             for (int k : ints(c.grid, "k")) {
                 Params ps{Param::of("k", k)};
                 std::uint64_t seed = mix_seed(c.seed, "pf_u_theta", ps);
                 double tol = c.tol;
                 jobs.push_back({"pf_u_theta", ps, [=]() {
                     std::mt19937_64 rng(seed);
                     std::uniform_real_distribution<double> th(1e-3, 0.5 * kPi);
                     double worst = 0.0;
                     ComplexComparison w;
                     for (int s = 0; s < samples;) {
                         try {
                             ComplexComparison v = pf_reciprocal_U_theta(k, th(rng));
                             double e = v.error() / std::max(1.0, std::abs(v.lhs));
                             if (e >= worst) worst = e, w = v;
                             ++s;
                         } catch (const Error& err) {
                             if (err.kind() != ErrorKind::PoleProximity) throw;
                         }
                     }
                     return Records{make_err("pf_u_theta", ps, std::abs(w.rhs), std::abs(w.lhs), worst, tol)};
                 }});
             }
         }},
        {"arctan1",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (double a : c.grid.at("a")) {
                 Params ps{Param::of("a", a)};
                 double tol = c.tol;
                 jobs.push_back({"arctan1", ps, [=]() {
                     Comparison v = arctan_identity(a);
                     return Records{make("arctan1", ps, v.rhs, v.lhs, tol)};
                 }});
             }
         }},
        {"z",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (int k : ints(c.grid, "k")) {
                 Params ps{Param::of("k", k)};
                 double tol = c.tol;
                 jobs.push_back({"z", ps, [=]() {
                     Comparison v = vanishing_moment_identity(k);
                     return Records{make_err("z", ps, v.rhs, v.lhs, v.error(), tol)};
                 }});
             }
         }},
        {"form1",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (int n : ints(c.grid, "n"))
                 for (double a : c.grid.at("a")) {
                     Params ps{Param::of("a", a), Param::of("n", n)};
                     double tol = c.tol;
                     jobs.push_back({"form1", ps, [=]() {
                         Comparison v = finite_arctan_identity(n, a);
                         return Records{make("form1", ps, v.rhs, v.lhs, tol)};
                     }});
                 }
         }},
        {"coscosheven",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (int n : ints(c.grid, "n")) {
                 Params ps{Param::of("n", n)};
                 double tol = c.tol;
                 jobs.push_back({"coscosheven", ps, [=]() {
                     Comparison v = even_cosh_identity(n);
                     return Records{make_err("coscosheven", ps, v.rhs, v.lhs, v.error(), tol)};
                 }});
             }
         }},
        {"alpha",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (double f : c.grid.at("alpha_over_pi")) {
                 Params ps{Param::of("alpha_over_pi", f)};
                 double tol = c.tol;
                 jobs.push_back({"alpha", ps, [=]() {
                     Comparison v = angle_identity(f * kPi);
                     return Records{make("alpha", ps, v.rhs, v.lhs, tol)};
                 }});
             }
         }},
        {"limit_series",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             static const char* names[] = {"two_cosh_product", "cosh_minus_cos_x", "cosh_minus_cos_x_swapped",
                                           "product_cosh_minus_cos_x2", "mixed_x"};
             for (int kind : ints(c.grid, "kind"))
                 for (double al : c.grid.at("alpha"))
                     for (double be : c.grid.at("beta"))
                         for (int pi_ : ints(c.grid, "poly")) {
                             const LimitKind lk = static_cast<LimitKind>(kind);
                             // beta only enters the two-parameter kinds
                             if ((lk == LimitKind::CoshMinusCosX || lk == LimitKind::CoshMinusCosXSwapped) &&
                                 be != c.grid.at("beta").front())
                                 continue;
                             Params ps{Param::of("alpha", al), Param::of("beta", be), Param::of("kind", names[kind]),
                                       Param::of("poly", pi_)};
                             double tol = c.tol;
                             jobs.push_back({"limit_series", ps, [=]() {
                                 RealPolynomial p = pi_ == 0 ? RealPolynomial::constant(1.0)
                                                             : RealPolynomial({0.5, -0.3, 0.2});
                                 double s = limit_series(lk, al, be, p);
                                 double o = limit_integral(lk, al, be, p);
                                 return Records{make_err("limit_series", ps, s, o,
                                                         std::abs(s - o) / std::max(1.0, std::abs(o)), tol)};
                             }});
                         }
         }},
        {"limit_parity",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (double al : c.grid.at("alpha"))
                 for (int pi_ : ints(c.grid, "poly")) {
                     Params ps{Param::of("alpha", al), Param::of("poly", pi_)};
                     double tol = c.tol;
                     jobs.push_back({"limit_parity", ps, [=]() {
                         RealPolynomial p = pi_ == 0 ? RealPolynomial::constant(1.0)
                                                     : RealPolynomial({0.5, -0.3, 0.2});
                         double s1 = limit_series(LimitKind::CoshMinusCosX, al, 0.0, p);
                         double s2 = limit_series(LimitKind::CoshMinusCosXSwapped, al, 0.0, p);
                         return Records{make("limit_parity", ps, s1, s2, tol)};
                     }});
                 }
         }},
        {"glaisher",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             for (double a : c.grid.at("a")) {
                 Params ps{Param::of("a", a)};
                 double tol = c.tol;
                 jobs.push_back({"glaisher", ps, [=]() {
                     Comparison v = glaisher_check(a);
                     return Records{make("glaisher", ps, v.rhs, v.lhs, tol)};
                 }});
             }
         }},
        {"proof_identities",
         [](const SuiteContext& c, std::vector<Job>& jobs) {
             const int samples = as_int(one(c.grid, "samples"));
             for (int n : ints(c.grid, "n"))
                 for (int m : ints(c.grid, "m")) {
                     if (m % 2 == 0) continue;
                     Params ps{Param::of("m", m), Param::of("n", n)};
                     std::uint64_t seed = mix_seed(c.seed, "proof_identities", ps);
                     double tol = c.tol;
                     jobs.push_back({"proof_identities", ps, [=]() {
                         std::mt19937_64 rng(seed);
                         std::uniform_real_distribution<double> zd(0.05, 3.0), sd(-1.0, 1.0);
                         std::uniform_int_distribution<int> ud(1 - n, n - 1);
                         ProofIdentityErrors worst;
                         for (int s = 0; s < samples; ++s) {
                             double z = zd(rng) * (sd(rng) < 0.0 ? -1.0 : 1.0);
                             ProofIdentityErrors e = proof_identities_check(z, n, m, ud(rng));
                             worst.a = std::max(worst.a, e.a);
                             worst.b = std::max(worst.b, e.b);
                             worst.c = std::max(worst.c, e.c);
                         }
                         return Records{
                             make_err("proof_identities", with(ps, Param::of("part", "a")), 0.0, worst.a, worst.a, tol),
                             make_err("proof_identities", with(ps, Param::of("part", "b")), 0.0, worst.b, worst.b, tol),
                             make_err("proof_identities", with(ps, Param::of("part", "c")), 0.0, worst.c, worst.c, tol)};
                     }});
                 }
         }},
    };
    return e;
}

}  // namespace

const std::vector<SuiteInfo>& suite_list() { return registry(); }

const SuiteInfo& find_suite(const std::string& id) {
    for (const auto& s : registry())
        if (s.id == id) return s;
    throw Error(ErrorKind::UnknownSuite, "no suite named '" + id + "'");
}

namespace detail {

std::vector<Job> expand_suite(const std::string& id, const SuiteContext& ctx) {
    find_suite(id);
    std::vector<Job> jobs;
    expanders().at(id)(ctx, jobs);
    return jobs;
}

}  // namespace detail

}  // namespace bsz

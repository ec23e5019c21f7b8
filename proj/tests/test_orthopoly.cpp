#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "bszego/error.hpp"
#include "bszego/oracle.hpp"
#include "bszego/orthopoly.hpp"

using namespace bsz;

namespace {

const double kPi = std::numbers::pi;

double inner(const WeightSpec& s, const std::function<double(double)>& f) {
    auto g = [&](double t) { return f(t) * weight_theta_density(s, t); };
    return oracle::integrate(oracle::IntegrandSpec::theta(g, s.a)).value;
}

std::vector<double> sorted_roots(const OrthoPoly& p) {
    std::vector<double> r;
    for (auto z : poly_roots(p.poly)) r.push_back(z.real());
    std::sort(r.begin(), r.end());
    return r;
}

double sin2(double x) { return std::sin(x) * std::sin(x); }

}  // namespace

TEST_CASE("orthonormal polynomial for constant weight") {
    auto f = build_szego_factor(WeightSpec::make(1, 1, 1.0, Family::CosPlusCosh));
    auto p = szego_orthonormal(f, 1, MeasureFactor::InvSqrtBoth);
    CHECK(p.degree == 1);
    CHECK(std::abs(p.poly[0]) < 1e-14);
    CHECK(p.poly[1] == doctest::Approx(2.0 / std::sqrt(kPi)));
}

TEST_CASE("two constructions of p_k agree") {
    auto s = WeightSpec::make(3, 5, 1.0, Family::CosPlusCosh);
    auto e = explicit_family(s);
    auto z = szego_orthonormal(build_szego_factor(s), 4, MeasureFactor::InvSqrtBoth);
    REQUIRE(e.degree == 4);
    REQUIRE(z.degree == 4);
    double sign = e.poly.leading() * z.poly.leading() > 0 ? 1.0 : -1.0;
    for (int i = 0; i <= 4; ++i) CHECK(std::abs(e.poly[i] - sign * z.poly[i]) < 1e-10);
}

TEST_CASE("degree k + 1 polynomial from xi and eta") {
    auto s = WeightSpec::make(3, 5, 1.0, Family::CosPlusCosh);
    auto p = szego_orthonormal(build_szego_factor(s), 5, MeasureFactor::InvSqrtBoth);
    auto want = [&](double t) {
        auto [xi, eta] = xi_eta_eval(s, t);
        return 2.0 / std::sqrt(kPi) * (t * eta - std::sqrt(1.0 - t * t) * xi);
    };
    double sign = p(0.9) * want(0.9) > 0 ? 1.0 : -1.0;
    for (int i = 0; i < 50; ++i) {
        double t = -1.0 + 2.0 * (i + 0.5) / 50;
        CHECK(std::abs(p(t) - sign * want(t)) < 1e-9);
    }
}

TEST_CASE("orthonormality by oracle") {
    auto s = WeightSpec::make(3, 5, 2.0, Family::CosPlusCosh);
    auto f = build_szego_factor(s);
    std::vector<OrthoPoly> ps;
    for (int k = 5; k <= 7; ++k) ps.push_back(szego_orthonormal(f, k, MeasureFactor::InvSqrtBoth));
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i; j < ps.size(); ++j) {
            double v = inner(s, [&](double t) { return ps[i](t) * ps[j](t); });
            CHECK(std::abs(v - (i == j ? 1.0 : 0.0)) < 1e-9);
        }
    CHECK_THROWS_AS(szego_orthonormal(f, 1, MeasureFactor::InvSqrtBoth), Error);
}

TEST_CASE("explicit family roots") {
    auto p = explicit_family(WeightSpec::make(1, 1, 1.0, Family::CosPlusCosh));
    CHECK(p.degree == 1);
    CHECK(std::abs(p(0.0)) < 1e-15);

    auto q = explicit_family(WeightSpec::make(3, 5, 2.0, Family::CosPlusCosh));
    std::vector<double> want{0.0, sin2(kPi / 3), -2.0 * sin2(kPi / 5), -2.0 * sin2(2 * kPi / 5)};
    std::sort(want.begin(), want.end());
    auto got = sorted_roots(q);
    REQUIRE(got.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-10));
    REQUIRE(q.known_roots);
    for (double r : *q.known_roots) CHECK(std::abs(q(r)) < 1e-10);

    auto sq = explicit_family(WeightSpec::make(2, 3, 1.0, Family::SquaredCosPlusCosh,
                                              MeasureFactor::SqrtBoth));
    std::vector<double> want2{0.0, sin2(kPi / 4), -sin2(kPi / 6), -sin2(kPi / 3)};
    std::sort(want2.begin(), want2.end());
    auto got2 = sorted_roots(sq);
    REQUIRE(got2.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(got2[i] - want2[i]) < 1e-10);

    CHECK_THROWS_AS(explicit_family(WeightSpec::make(2, 3, 1.0, Family::CosPlusCosh)), Error);
}

TEST_CASE("kernel") {
    auto s = WeightSpec::make(1, 1, 1.0, Family::CosPlusCosh);
    auto p0 = constant_orthonormal(s, kPi / 2);
    CHECK(kernel_sum({p0}, 0.3, -0.7) == doctest::Approx(2.0 / kPi));

    // Christoffel-Darboux at u = 0 reduces to a multiple of p_k(t) / t
    auto s35 = WeightSpec::make(3, 5, 1.0, Family::CosPlusCosh);
    auto f = build_szego_factor(s35);
    auto pk = explicit_family(s35);
    auto pk1 = szego_orthonormal(f, 5, MeasureFactor::InvSqrtBoth);
    auto K = kernel_polynomial(pk, pk1, 0.0);
    double ratio = pk.poly.leading() / pk1.poly.leading();
    for (double t : {-0.8, -0.3, 0.4, 0.9})
        CHECK(K(t) == doctest::Approx(-ratio * pk1(0.0) * pk(t) / t).epsilon(1e-9));
    CHECK(kernel_christoffel_darboux(pk, pk1, 0.4, 0.0) == doctest::Approx(K(0.4)));

    double mass = inner(s35, [&](double t) { return K(t); });
    CHECK(std::abs(mass - 1.0) < 1e-7);
}

TEST_CASE("leading coefficient ratio") {
    CHECK(std::abs(leading_ratio_check(WeightSpec::make(3, 5, 1.0, Family::CosPlusCosh))) < 1e-10);
    CHECK(std::abs(leading_ratio_check(WeightSpec::make(3, 5, 3.0, Family::CosPlusCosh))) < 1e-10);
    CHECK(std::abs(leading_ratio_check(WeightSpec::make(1, 3, 0.5, Family::CosPlusCosh))) < 1e-10);
    auto s = WeightSpec::make(1, 3, 0.5, Family::CosPlusCosh);
    auto f = build_szego_factor(s);
    auto pk = explicit_family(s);
    auto pk1 = szego_orthonormal(f, 3, MeasureFactor::InvSqrtBoth);
    CHECK(std::abs(pk1.poly.leading() / pk.poly.leading()) == doctest::Approx(8.0 / 3.0).epsilon(1e-10));
}

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "bszego/error.hpp"
#include "bszego/weights.hpp"
#include "oracle_values.hpp"

using namespace bsz;
namespace ov = oracle_values;

TEST_CASE("rho evaluation") {
    auto s11 = WeightSpec::make(1, 1, 1.0, Family::CosPlusCosh);
    CHECK(rho_eval(s11, 0.3) == doctest::Approx(2.0));
    auto s13 = WeightSpec::make(1, 3, 1.0, Family::CosPlusCosh);
    for (double t : {-0.9, -0.4, 0.0, 0.35, 1.0})
        CHECK(rho_eval(s13, t) == doctest::Approx(2 + 16 * t + 48 * t * t + 32 * t * t * t));
    auto sq = WeightSpec::make(1, 1, 1.0, Family::SquaredCosPlusCosh);
    CHECK(rho_eval(sq, 0.3) == doctest::Approx(4.0));
}

TEST_CASE("weight spec validation") {
    CHECK_THROWS_AS(WeightSpec::make(0, 1, 1.0, Family::CosPlusCosh), Error);
    CHECK_THROWS_AS(WeightSpec::make(1, 1, -1.0, Family::CosPlusCosh), Error);
    CHECK_THROWS_AS(WeightSpec::make(1, 1, 1.0, Family::ProductCosPlusCosh), Error);
    CHECK(parse_family("CoshMinusCosOverT") == Family::CoshMinusCosOverT);
    CHECK_THROWS_AS(parse_family("nope"), Error);
}

TEST_CASE("xi and eta") {
    auto [xi0, eta0] = xi_eta_eval(WeightSpec::make(1, 1, 1.0, Family::CosPlusCosh), 0.0);
    CHECK(xi0 == doctest::Approx(1.0));
    CHECK(eta0 == doctest::Approx(0.0));
    auto s = WeightSpec::make(3, 5, 2.0, Family::CosPlusCosh);
    auto [xi, eta] = xi_eta_eval(s, 0.5);
    CHECK(std::abs(2.0 * (xi * xi + eta * eta) - rho_eval(s, 0.5)) < 1e-11 * rho_eval(s, 0.5));
    auto [xm, em] = xi_eta_eval(s, -1.0);
    CHECK(xm == doctest::Approx(ov::kXi_352_m1).epsilon(1e-12));
    CHECK(em == doctest::Approx(ov::kEta_352_m1).epsilon(1e-12));
}

TEST_CASE("szego factor of a constant weight") {
    auto f = build_szego_factor(WeightSpec::make(1, 1, 1.0, Family::CosPlusCosh));
    CHECK(f.h.degree() == 0);
    CHECK(f.h[0] == doctest::Approx(std::sqrt(2.0)));
    auto g = squared_factor(f);
    CHECK(g.h[0] == doctest::Approx(2.0));
}

TEST_CASE("szego factor against brute-force factorization") {
    auto f = build_szego_factor(WeightSpec::make(1, 3, 1.0, Family::CosPlusCosh));
    REQUIRE(f.h.degree() == 3);
    CHECK(f.h[0] == doctest::Approx(ov::kFactor131Coeff0).epsilon(1e-12));
    CHECK(f.h[1] == doctest::Approx(ov::kFactor131Coeff1).epsilon(1e-12));
    CHECK(f.h[2] == doctest::Approx(ov::kFactor131Coeff2).epsilon(1e-12));
    CHECK(f.h[3] == doctest::Approx(ov::kFactor131Coeff3).epsilon(1e-12));
    for (double th = 0.0; th < 2.0 * std::numbers::pi; th += 0.37)
        CHECK(std::norm(f.eval_circle(th)) == doctest::Approx(rho_eval(f.spec, std::cos(th))));
}

TEST_CASE("szego factor invariants") {
    for (auto s : {WeightSpec::make(3, 5, 2.0, Family::CosPlusCosh),
                   WeightSpec::make(3, 2, 1.0, Family::CoshMinusCosOverT),
                   WeightSpec::make(4, 4, 0.5, Family::CosPlusCosh)}) {
        auto f = build_szego_factor(s);
        CHECK(f.h.degree() == rho_degree(s));
        CHECK(f.h[0] > 0.0);
        CHECK(f.max_factorization_residual < 1e-12);
        for (auto z : poly_roots(f.h)) {
            // one Newton step as independent refinement
            auto w = z - f.h(z) / f.h.derivative()(z);
            CHECK(std::abs(w) >= 1.0 - 1e-8);
        }
        CHECK_NOTHROW(validate_factor(f));
    }
}

TEST_CASE("squared factor residual") {
    auto base = build_szego_factor(WeightSpec::make(3, 3, 2.0, Family::CosPlusCosh));
    auto sq = squared_factor(base);
    CHECK(sq.h.degree() == 2 * base.h.degree());
    double worst = 0.0, top = 0.0;
    for (double th = 0.0; th <= std::numbers::pi; th += 0.01) {
        double r = rho_eval(base.spec, theta_to_t(2.0, th));
        worst = std::max(worst, std::abs(std::norm(sq.eval_circle(th)) - r * r));
        top = std::max(top, r * r);
    }
    CHECK(worst <= 1e-9 * top);
}

TEST_CASE("equal-degree cancellation") {
    // n = m = 1, a = 1: leading terms cancel and rho is constant
    CHECK(rho_degree(WeightSpec::make(1, 1, 1.0, Family::CosPlusCosh)) == 0);
    CHECK(rho_degree(WeightSpec::make(3, 5, 2.0, Family::CosPlusCosh)) == 5);
    CHECK(rho_degree(WeightSpec::make(3, 2, 1.0, Family::CoshMinusCosOverT)) == 2);
}

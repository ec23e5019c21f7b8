#include <cmath>
#include <random>

#include <doctest.h>

#include "bszego/error.hpp"
#include "bszego/pick.hpp"

using namespace bsz;

namespace {

const Complex I(0.0, 1.0);

PickFunction one_pole() { return PickFunction::make(1.0, I, {{1.0, -I}}); }

}  // namespace

TEST_CASE("pick function evaluation") {
    CHECK(std::abs(pick_eval(PickFunction::make(0.0, I), 7.0) - I) < 1e-15);
    CHECK(std::abs(pick_eval(one_pole(), 0.0) - 2.0 * I) < 1e-15);
    CHECK_THROWS_AS(PickFunction::make(-1.0, I), Error);
    CHECK_THROWS_AS(PickFunction::make(0.0, Complex(1.0, 0.0)), Error);
    CHECK_THROWS_AS(PickFunction::make(0.0, I, {{1.0, I}}), Error);
    CHECK_THROWS_AS(PickFunction::make(0.0, I, {{-1.0, -I}}), Error);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0), v(0.1, 2.0);
    for (int i = 0; i < 50; ++i) {
        auto phi = PickFunction::make(v(rng), Complex(u(rng), v(rng)),
                                      {{v(rng), Complex(u(rng), -v(rng))}, {v(rng), Complex(u(rng), -v(rng))}});
        double x = 4.0 * u(rng);
        CHECK(pick_eval(phi, x).imag() >= phi.gamma.imag());
    }
}

TEST_CASE("density for the constant weight") {
    auto meas = example_measure(1, 1, PickFunction::make(0.0, I), MeasureForm::Measure2);
    CHECK(meas.k == 1);
    for (double x : {-3.0, -0.5, 0.0, 0.25, 10.0}) {
        CHECK(density(meas, x) > 0.0);
        CHECK(density(meas, x) == doctest::Approx(1.0 / (4.0 * x * x + 2.0)));
    }
}

TEST_CASE("density decays like x^-2k") {
    auto slope = [](int n, int m) {
        auto meas = example_measure(n, m, PickFunction::make(0.0, Complex(0.5, 1.5)), MeasureForm::Measure2);
        double x1 = 1e3, x2 = 1e4;
        return std::log(density(meas, x2) / density(meas, x1)) / std::log(x2 / x1);
    };
    CHECK(slope(1, 1) == doctest::Approx(-2.0).epsilon(1e-3));
    CHECK(slope(3, 5) == doctest::Approx(-8.0).epsilon(1e-3));
}

TEST_CASE("matched moments") {
    auto m11 = example_measure(1, 1, PickFunction::make(0.0, I), MeasureForm::Measure2);
    CHECK(moment_match_check(m11, 0).rel_error() < 1e-6);
    CHECK_THROWS_AS(moment_match_check(m11, 1), Error);

    auto m35 = example_measure(3, 5, PickFunction::make(0.0, I), MeasureForm::Measure2);
    for (int j = 0; j <= 6; ++j) CHECK(moment_match_check(m35, j).rel_error() < 1e-6);

    auto m5 = example_measure(3, 3, PickFunction::make(0.0, 2.0 * I), MeasureForm::Measure5);
    for (int j = 0; j <= 4; ++j) CHECK(moment_match_check(m5, j).rel_error() < 1e-6);
}

TEST_CASE("second form with a linear term") {
    auto meas = example_measure(3, 3, one_pole(), MeasureForm::Measure5);
    for (int j = 0; j <= 2 * meas.k - 3; ++j) CHECK(moment_match_check(meas, j).rel_error() < 1e-6);
    // at j = 2k - 2 the density decays like 1/x and the match is lost by
    // beta / (2 (kappa_k / kappa_{k-1} + beta) kappa_{k-1}^2)
    auto top = moment_match_check(meas, 2 * meas.k - 2);
    double kk1 = meas.p_km1.poly.leading();
    double expect = 1.0 / (2.0 * (1.0 / meas.kappa_ratio + 1.0) * kk1 * kk1);
    CHECK(std::abs(top.lhs - top.rhs) == doctest::Approx(expect).epsilon(1e-4));
}

TEST_CASE("boundary moment") {
    // phi = i keeps the symmetric measure symmetric, so odd moments agree
    auto sym = example_measure(3, 3, PickFunction::make(0.0, I), MeasureForm::Measure2);
    CHECK(boundary_deviation(sym) < 1e-10);
    auto meas = example_measure(3, 3, PickFunction::make(0.0, Complex(0.5, 1.0)), MeasureForm::Measure2);
    CHECK(boundary_deviation(meas) > 1e-4);
    auto s = boundary_sharpness(3, 3, MeasureForm::Measure2, 20, 11);
    CHECK(s.samples == 20);
    CHECK(s.fraction() >= 0.9);
}

TEST_CASE("integrals form") {
    for (double x : {-0.9, -0.2, 0.0, 0.6, 0.95}) {
        CHECK(integrals_form_residual(3, 3, PickFunction::make(0.0, I), x) < 1e-10);
        CHECK(integrals_form_residual(3, 5, PickFunction::make(0.0, Complex(1.0, 1.0)), x) < 1e-10);
        CHECK(integrals_form_residual(5, 3, PickFunction::make(1.0, I, {{1.0, -I}}), x) < 1e-10);
    }
    CHECK_THROWS_AS(integrals_form_residual(1, 1, PickFunction::make(0.0, I), 0.5), Error);
}

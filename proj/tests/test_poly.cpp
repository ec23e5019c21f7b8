#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "bszego/error.hpp"
#include "bszego/poly.hpp"

using namespace bsz;

TEST_CASE("chebyshev T") {
    CHECK(cheb_T(0, 0.7) == doctest::Approx(1.0));
    CHECK(cheb_T(3, 0.5) == doctest::Approx(-1.0));
    CHECK(std::abs(cheb_T(5, std::cos(0.3)) - std::cos(1.5)) < 1e-13);
    CHECK(cheb_T(4, 1.5) == doctest::Approx(8 * std::pow(1.5, 4) - 8 * 1.5 * 1.5 + 1));
}

TEST_CASE("chebyshev U") {
    CHECK(cheb_U(0, 0.2) == doctest::Approx(1.0));
    CHECK(cheb_U(1, 0.5) == doctest::Approx(1.0));
    CHECK(cheb_U(4, 1.0) == doctest::Approx(5.0));
    CHECK(std::abs(cheb_U(6, std::cos(0.4)) - std::sin(2.8) / std::sin(0.4)) < 1e-12);
}

TEST_CASE("polynomial evaluation") {
    CHECK(RealPolynomial({2.0})(Complex(0.3, -1.0)) == Complex(2.0, 0.0));
    CHECK(std::abs(RealPolynomial({0.0, 1.0})(Complex(0.0, 1.0)) - Complex(0.0, 1.0)) < 1e-15);
    CHECK(RealPolynomial({1.0, 2.0, 1.0})(1.0) == doctest::Approx(4.0));
}

TEST_CASE("polynomial arithmetic") {
    RealPolynomial p({1.0, -3.0, 2.0});  // (1 - x)(1 - 2x)
    CHECK(p.degree() == 2);
    CHECK(p.derivative()(0.5) == doctest::Approx(-1.0));
    double rem = 7.0;
    auto q = p.divide_linear(1.0, &rem);
    CHECK(rem == doctest::Approx(0.0));
    CHECK(q(3.0) == doctest::Approx(2.0 * 3.0 - 1.0));
    auto r = RealPolynomial::from_roots({1.0, 0.5}, 2.0);
    for (double x : {-1.0, 0.2, 4.0}) CHECK(r(x) == doctest::Approx(p(x)));
    auto s = p * p - p * 2.0;
    CHECK(s(0.3) == doctest::Approx(p(0.3) * p(0.3) - 2.0 * p(0.3)));
    CHECK(RealPolynomial({1.0, 1e-20}).trimmed(1e-15).degree() == 0);
}

TEST_CASE("chebyshev interpolation") {
    auto g = [](double t) { return 3.0 * t * t * t - t + 0.25; };
    auto p = interpolate_on_interval(g, -2.0, 1.0, 3);
    CHECK(p[3] == doctest::Approx(3.0));
    CHECK(p[1] == doctest::Approx(-1.0));
    CHECK(p[0] == doctest::Approx(0.25));
    CHECK_THROWS_AS(interpolate_on_interval([](double t) { return std::exp(t); }, -1.0, 1.0, 3),
                    Error);
}

TEST_CASE("coefficients from circle samples") {
    auto sample = [](int N, auto h) {
        std::vector<Complex> v;
        for (int k = 0; k < N; ++k) v.push_back(h(std::polar(1.0, 2.0 * std::numbers::pi * k / N)));
        return v;
    };
    auto c = poly_from_circle_samples(sample(4, [](Complex) { return Complex(std::sqrt(2.0)); }), 0);
    CHECK(c.degree() == 0);
    CHECK(c[0] == doctest::Approx(std::sqrt(2.0)));
    auto z2 = poly_from_circle_samples(sample(8, [](Complex z) { return z * z; }), 2);
    CHECK(std::abs(z2[0]) < 1e-15);
    CHECK(std::abs(z2[1]) < 1e-15);
    CHECK(z2[2] == doctest::Approx(1.0));
}

TEST_CASE("roots") {
    auto r = poly_roots(RealPolynomial({-1.0, 0.0, 1.0}));
    REQUIRE(r.size() == 2);
    double lo = std::min(r[0].real(), r[1].real()), hi = std::max(r[0].real(), r[1].real());
    CHECK(lo == doctest::Approx(-1.0));
    CHECK(hi == doctest::Approx(1.0));
    auto i = poly_roots(RealPolynomial({1.0, 0.0, 1.0}));
    REQUIRE(i.size() == 2);
    for (auto z : i) {
        CHECK(std::abs(z.real()) < 1e-14);
        CHECK(std::abs(std::abs(z.imag()) - 1.0) < 1e-14);
    }
    auto p = RealPolynomial::from_roots({0.1, 0.2, 0.3, -4.0, 7.5});
    for (auto z : poly_roots(p)) CHECK(std::abs(p(z)) < 1e-11);
}

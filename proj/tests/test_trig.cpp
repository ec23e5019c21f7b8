#include <cmath>
#include <numbers>

#include <doctest.h>

#include "bszego/error.hpp"
#include "bszego/trig.hpp"
#include "oracle_values.hpp"

using namespace bsz;
namespace ov = oracle_values;

namespace {
const double kPi = std::numbers::pi;
}

TEST_CASE("trigonometric sum S") {
    CHECK(s_sum(1, 1) == doctest::Approx(1.0));
    CHECK(std::abs(s_sum(1, 3)) < 1e-15);
    CHECK(s_sum(3, 3) == doctest::Approx(0.375));
    CHECK(s_sum(5, 7) == doctest::Approx(ov::kS_57).epsilon(1e-13));
}

TEST_CASE("theta integral") {
    auto c = theta_integral(3, 3);
    CHECK(c.rhs == doctest::Approx(kPi / 12 * 0.375));
    CHECK(c.error() < 1e-9);
    auto z = theta_integral(1, 3);
    CHECK(std::abs(z.rhs) < 1e-15);
    CHECK(std::abs(z.lhs) < 1e-9);
    CHECK(theta_integral(5, 3).error() < 1e-9);
    CHECK(std::abs(theta_integral(5, 7).lhs - ov::kThetaLhs_57) < 1e-10);
    CHECK_THROWS_AS(theta_integral(2, 3), Error);
}

TEST_CASE("partial fractions of the reciprocal T form") {
    CHECK(pf_reciprocal_T(1, kPi / 2, 0.0).error() < 1e-12);
    CHECK(pf_reciprocal_T(4, 0.7, 0.0).error() < 1e-10);
    auto c = pf_reciprocal_T(3, 1.1, 0.5);
    CHECK(c.error() < 1e-10);
    CHECK(std::abs(c.lhs - Complex(ov::kPfT3Re, ov::kPfT3Im)) < 1e-12);
    CHECK_THROWS_AS(pf_reciprocal_T(3, 2.0, 0.5), Error);
    CHECK_THROWS_AS(pf_reciprocal_T(3, 1.0, 1.0), Error);
}

TEST_CASE("partial fractions of the reciprocal U form") {
    CHECK(pf_reciprocal_U(1, Complex(0.3, 0.1)).error() < 1e-12);
    auto c = pf_reciprocal_U(3, Complex(0.4, 0.2));
    CHECK(c.error() < 1e-10);
    CHECK(std::abs(c.lhs - Complex(ov::kPfU3Re, ov::kPfU3Im)) < 1e-12);
    CHECK(pf_reciprocal_U(5, Complex(2.0, 0.0)).error() < 1e-10);
    CHECK(pf_reciprocal_U_theta(4, 0.9).error() < 1e-10);
    CHECK_THROWS_AS(pf_reciprocal_U(3, Complex(0.5, 0.0)), Error);
}

TEST_CASE("Fourier coefficient checks") {
    CHECK(tsgf_fourier_check(1, 5).max() < 1e-8);
    CHECK(tsgf_fourier_check(3, 10).max() < 1e-8);
    CHECK(tsgf_fourier_check(7, 20).max() < 1e-7);
}

TEST_CASE("finite analog of Ramanujan's integral") {
    auto c = ramanujan_353_finite(2, 1);
    CHECK(c.rhs == doctest::Approx(kPi / 4));
    CHECK(c.error() < 1e-12);
    CHECK(ramanujan_353_finite(4, 3).error() < 1e-9);
    auto b = ramanujan_353_finite(6, 1, 1);
    CHECK(std::abs(b.lhs - ov::kRamanujan_61_b1) < 1e-12);
    CHECK(b.error() < 1e-9);
}

TEST_CASE("q and f symmetry") {
    CHECK(q_f_symmetry(2, 0).max_deviation <= 1e-12);
    auto s = q_f_symmetry(4, 1);
    CHECK(s.max_deviation <= 1e-12);
    CHECK(std::abs(s.sum_f - Complex(2.0, 0.0)) < 1e-12);
    for (int nu = 2; nu <= 20; nu += 2) CHECK(q_f_symmetry(nu, 3).max_abs_q < 1.0);
}

TEST_CASE("identities behind the generating functions") {
    CHECK(proof_identities_check(0.5, 1, 1, 0).max() < 1e-12);
    CHECK(proof_identities_check(0.3, 4, 1, 2).a <= 1e-12);
    CHECK(proof_identities_check(1.2, 1, 5, 0).b <= 1e-12);
    CHECK(proof_identities_check(0.7, 6, 3, 3).c <= 1e-12);
}

TEST_CASE("improper integrals") {
    auto g = glaisher_check(1.0);
    CHECK(g.rhs == doctest::Approx(ov::kGlaisher_1).epsilon(1e-13));
    CHECK(g.error() < 1e-6);
    auto at = arctan_identity(1.0);
    CHECK(at.rhs == doctest::Approx(kPi / 8));
    CHECK(at.error() < 1e-8);
    CHECK(vanishing_moment_identity(1).error() < 1e-8);
    auto an = angle_identity(kPi / 4);
    CHECK(an.rhs == doctest::Approx(kPi / 8));
    CHECK(an.error() < 1e-8);
    auto f = finite_arctan_identity(3, 2.0);
    CHECK(f.rhs == doctest::Approx(std::atan(2.0) / 2));
    CHECK(f.error() < 1e-8);
    CHECK(even_cosh_identity(2).error() < 1e-6);
}

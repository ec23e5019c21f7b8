#pragma once

#include <string>
#include <utility>

#include "bszego/poly.hpp"

namespace bsz {

enum class Family {
    CosPlusCosh,
    SquaredCosPlusCosh,
    CoshMinusCosOverT,
    ProductCosPlusCosh,
    ProductCoshMinusCos,
    MixedPlusMinus,
};

enum class MeasureFactor { InvSqrtBoth, SqrtBoth, SqrtRatio, PlainDt };

const char* family_name(Family f);
Family parse_family(const std::string& s);
const char* measure_factor_name(MeasureFactor f);

struct WeightSpec {
    int n = 1;
    int m = 1;
    double a = 1.0;
    Family family = Family::CosPlusCosh;
    MeasureFactor measure = MeasureFactor::InvSqrtBoth;
    int m_prime = 0;  // product and mixed families only

    // Checks n, m >= 1, a > 0, m_prime >= 1 where used; throws InvalidSpec.
    static WeightSpec make(int n, int m, double a, Family family,
                           MeasureFactor measure = MeasureFactor::InvSqrtBoth, int m_prime = 0);
    bool has_m_prime() const;
};

// Real-valued branch pieces, valid on both sides of t = 0:
//   sin_ratio(n, t)  = sin(n asin sqrt t) / sqrt t
//   cos_branch(n, t) = cos(n asin sqrt t)
//   sinh_ratio(m, s) = sinh(m asinh sqrt s) / sqrt s
//   cosh_branch(m, s) = cosh(m asinh sqrt s)
double sin_ratio(int n, double t);
double cos_branch(int n, double t);
double sinh_ratio(int m, double s);
double cosh_branch(int m, double s);

// T_n(x) without the recurrence, for |x| > 1 too.
double cheb_T_direct(int n, double x);

double rho_eval(const WeightSpec& spec, double t);
// (xi_a, eta_a) of the base (n, m, a)
std::pair<double, double> xi_eta_eval(const WeightSpec& spec, double t);

// F(t) in F(t) / rho(t) * dt / sqrt((1-t)(a+t))
double measure_factor_eval(MeasureFactor mf, double a, double t);
// Weight density with respect to dt / sqrt((1-t)(a+t)).
double weight_theta_density(const WeightSpec& spec, double t);

// deg rho as a polynomial in t (families with a Szego factor, plus squares)
int rho_degree(const WeightSpec& spec);

struct SzegoFactor {
    WeightSpec spec;
    RealPolynomial h;
    double max_factorization_residual = 0.0;

    // h(e^{i theta})
    Complex eval_circle(double theta) const;
};

SzegoFactor build_szego_factor(const WeightSpec& spec);
SzegoFactor squared_factor(const SzegoFactor& base);
// Recomputes the residual and checks degree, h(0) > 0 and the root moduli.
void validate_factor(SzegoFactor& f);

// t on [-a, 1] from theta on [0, pi]
double theta_to_t(double a, double theta);

}  // namespace bsz

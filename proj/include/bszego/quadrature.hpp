#pragma once

#include <vector>

#include "bszego/poly.hpp"
#include "bszego/weights.hpp"

namespace bsz {

enum class RuleConstraint { None, RequiresPZeroAtOrigin };

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int exact_degree = 0;
    RuleConstraint constraint = RuleConstraint::None;
    WeightSpec spec;
};

struct AlphaBeta {
    double z = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
};

// alpha = 2n asinh(sin(pi z / 2n) / sqrt a), beta = 2m asinh(sqrt a sin(pi z / 2m))
AlphaBeta alpha_beta(double z, int n, int m, double a);

// Gauss rule for 1 / rho against dt / sqrt((1-t)(a+t)), n and m odd.
QuadratureRule rule_cos_plus_cosh(int n, int m, double a);

// Rule for sqrt((1-t)(a+t)) / rho^2, exact to degree 2m + 2n - 3.
QuadratureRule rule_squared(int n, int m, double a);

// Signed rule for p(t) / (cosh - cos) against dt / sqrt((1-t)(a+t)) with
// p(0) = 0; n and m of opposite parity.
QuadratureRule rule_cosh_minus_cos(int n, int m, double a);

// Weights matching the oracle moments of spec's weight with measure factor mf
// at the given nodes; exact to degree nodes.size() - 1.
QuadratureRule weights_from_moments(const std::vector<double>& nodes, const WeightSpec& spec,
                                    MeasureFactor mf);

double apply_rule(const QuadratureRule& rule, const RealPolynomial& p);

// Single-sum evaluations of int T_u(1 - 2t) / rho dt / sqrt((1-t)(a+t)):
// the alpha form (|u| < n) and the beta form (|u| < m).
double sum_form(int n, int m, double a, int u);
double sum_form_beta(int n, int m, double a, int u);
// Same integral with p(t) in the numerator, deg p < n.
double sum_form_poly(int n, int m, double a, const RealPolynomial& p);

// int sqrt t sin(u asin sqrt t) / (cosh - cos) dt / sqrt((1-t)(a+t)) for odd u,
// in the alpha form (|u| < 2n - 2) and the beta form (|u| < 2m - 2).
double sum_form_odd(int n, int m, double a, int u);
double sum_form_odd_beta(int n, int m, double a, int u);

enum class Corollary { A, B, C };

struct CorollaryValue {
    double closed_form = 0.0;
    double oracle_value = 0.0;
};

// A uses (n, a), B uses n, C uses (n, m) of equal parity.
CorollaryValue corollary_eval(Corollary which, int n, int m = 0, double a = 1.0);

enum class LimitKind {
    TwoCoshProduct,
    CoshMinusCosX,
    // second displayed form, with the even/odd roles of j exchanged
    CoshMinusCosXSwapped,
    ProductCoshMinusCosX2,
    MixedX,
};

// Right-hand series of the limiting quadrature formulas; `beta` is unused by
// the CoshMinusCosX kinds.
double limit_series(LimitKind kind, double alpha, double beta, const RealPolynomial& p,
                    double tol = 1e-14);

// Left-hand integral over R with the same normalisation, from the oracle.
double limit_integral(LimitKind kind, double alpha, double beta, const RealPolynomial& p,
                      double tol = 1e-12);

}  // namespace bsz

#pragma once

#include <complex>

#include "bszego/poly.hpp"

namespace bsz {

// Two sides of a numerical identity; `scale` is the L1 size of the integrand
// where the right side is zero, otherwise 1.
struct Comparison {
    double lhs = 0.0;
    double rhs = 0.0;
    double scale = 1.0;
    double error() const;
};

struct ComplexComparison {
    Complex lhs;
    Complex rhs;
    double error() const { return std::abs(lhs - rhs); }
};

// S(n, m) = sum_{j=0}^{floor(n/2)} (-1)^j sin(pi (2j+1) / 2n) cos^{m-1}(pi (2j+1) / 2n)
double s_sum(int n, int m);

// lhs: oracle integral over [0, 1], rhs: (pi / 4n) S(n, m); n odd, m odd > 1.
Comparison theta_integral(int n, int m);

// Reciprocal of cos(k asin sqrt((sin th + c)/(1 + c)) + i k asinh sqrt((sin th + c)/(1 - c)))
// against its partial fractions; theta in [0, pi/2], c in [0, 1).
ComplexComparison pf_reciprocal_T(int k, double theta, double c);

// 1 / ((1 - z^2) U_{k-1}(z)) against (1/2k) sum_{j=1}^{2k} (-1)^{j-1} / (z - cos(pi j / k)).
ComplexComparison pf_reciprocal_U(int k, Complex z);

// The same expansion at z = exp(-i theta), theta in (0, pi/2], with the left side in its
// sin(k asin sqrt(sin theta) + i k asinh sqrt(sin theta)) form.
ComplexComparison pf_reciprocal_U_theta(int k, double theta);

struct TsgfErrors {
    double sine = 0.0;     // sine coefficients of the imaginary-part form
    double cosine = 0.0;   // cosine coefficients of the real-part form
    double complex = 0.0;  // exponential coefficients of the reciprocal
    double max() const;
};

// Fourier coefficients at harmonics 3, 5, ..., 2R + 1 against S(n, 2r + 1).
TsgfErrors tsgf_fourier_check(int n, int R);

// lhs: int_0^1 sin(kn asin t) t^{4b} / ((cos(n asin t) + cosh(n asinh t)) t) dt;
// rhs: pi/4 for b = 0, otherwise the direct t-integral as a second evaluation.
Comparison ramanujan_353_finite(int n, int k, int b = 0);

struct QfSymmetry {
    double max_deviation = 0.0;  // max_j |f(j) + f(nu + 1 - j) - 1|
    Complex sum_f;               // sum_j f(j)
    double max_abs_q = 0.0;
};

QfSymmetry q_f_symmetry(int nu, int mu);

struct ProofIdentityErrors {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double max() const;
};

// (a) uses (z, n, u); (b) uses (z, m) with m odd; (c) uses (n, u).
ProofIdentityErrors proof_identities_check(double z, int n, int m, int u);

// (pi^2/8) sum_j (-1)^j (2j+1) exp(-pi^2 (2j+1)^2 a / 8) against the oracle integral
// int_0^inf sin(sqrt x) sinh(sqrt x) / (cos(2 sqrt x) + cosh(2 sqrt x)) sin(a x) dx.
Comparison glaisher_check(double a);

// Improper integrals from the introduction, each against its closed value.
Comparison arctan_identity(double a);            // atan(a) / 2
Comparison vanishing_moment_identity(int k);     // 0, x^{4k-1} moment
Comparison angle_identity(double alpha);         // alpha / 2
Comparison finite_arctan_identity(int n, double a);  // atan(a) / 2, n odd
Comparison even_cosh_identity(int n);            // 0, n even

}  // namespace bsz

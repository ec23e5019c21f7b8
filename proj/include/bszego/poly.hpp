#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace bsz {

using Complex = std::complex<double>;

// Dense polynomial, coefficients in ascending order of powers.
class RealPolynomial {
public:
    RealPolynomial() = default;
    explicit RealPolynomial(std::vector<double> coeffs);

    static RealPolynomial constant(double c);
    static RealPolynomial monomial(int power, double c = 1.0);
    // prod (x - r) over roots, times lead
    static RealPolynomial from_roots(const std::vector<double>& roots, double lead = 1.0);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<double>& coeffs() const { return c_; }
    double operator[](int i) const { return i <= degree() ? c_[i] : 0.0; }
    double leading() const { return c_.back(); }
    double max_abs_coeff() const;

    double operator()(double x) const;
    Complex operator()(Complex z) const;

    RealPolynomial derivative() const;
    // Quotient of division by (x - r); remainder is dropped, see remainder_at.
    RealPolynomial divide_linear(double r, double* remainder = nullptr) const;
    // Drops trailing coefficients with |c| <= tol * max|c|.
    RealPolynomial trimmed(double tol = 0.0) const;

    RealPolynomial operator+(const RealPolynomial& o) const;
    RealPolynomial operator-(const RealPolynomial& o) const;
    RealPolynomial operator*(const RealPolynomial& o) const;
    RealPolynomial operator*(double s) const;

private:
    std::vector<double> c_{0.0};
};

double cheb_T(int n, double x);
double cheb_U(int n, double x);
Complex cheb_T(int n, Complex z);
Complex cheb_U(int n, Complex z);

// Coefficients c_j of g = sum c_j T_j, from samples at the N first-kind nodes
// cos((j+1/2) pi / N).
std::vector<double> chebyshev_coefficients(const std::function<double(double)>& g, int N);

// Monomial form in t of sum c_j T_j(x), x = (2t - lo - hi) / (hi - lo).
RealPolynomial chebyshev_to_monomial(const std::vector<double>& c, double lo, double hi);

// Interpolates g on [lo, hi] by a degree `degree` polynomial; throws
// DegreeExceeded if the Chebyshev tail beyond `degree` is above tail_tol
// relative to the largest coefficient.
RealPolynomial interpolate_on_interval(const std::function<double(double)>& g, double lo,
                                       double hi, int degree, double tail_tol = 1e-9);

// Coefficients of h from samples h(exp(2 pi i k / N)), k = 0..N-1.
RealPolynomial poly_from_circle_samples(const std::vector<Complex>& values, int degree);
// Same, accumulating in extended precision; coefficients are rounded once.
RealPolynomial poly_from_circle_samples(const std::vector<std::complex<long double>>& values,
                                        int degree);

// All complex roots by Aberth-Ehrlich iteration.
std::vector<Complex> poly_roots(const RealPolynomial& p);

}  // namespace bsz

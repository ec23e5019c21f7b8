#include "bszego/trig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bszego/error.hpp"
#include "bszego/oracle.hpp"
#include "bszego/weights.hpp"

namespace bsz {

namespace {

const double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

double sq(double x) { return x * x; }

// sinh(y) / (c + cosh(2y)) for |c| <= 1, y >= 0, without overflow
double sinh_over_cosh2(double y, double c) {
    if (y > 300.0) return std::exp(-y);
    return std::sinh(y) / (c + std::cosh(2.0 * y));
}

// oracle value of int_0^inf f and the L1 size of f
Comparison half_line(const std::function<double(double)>& f, double rhs, bool zero_target) {
    auto g = [&](double x) { return x < 0.0 ? 0.0 : f(x); };
    auto ga = [&](double x) { return std::abs(g(x)); };
    Comparison c;
    c.lhs = oracle::integrate(oracle::IntegrandSpec::exp_tail(g), 1e-12).value;
    c.rhs = rhs;
    if (zero_target) c.scale = oracle::integrate(oracle::IntegrandSpec::exp_tail(ga), 1e-10).value;
    return c;
}

void check_pole(Complex d) {
    if (std::abs(d) < 1e-12) throw Error(ErrorKind::PoleProximity, "denominator below 1e-12");
}

}  // namespace

double Comparison::error() const { return std::abs(lhs - rhs) / scale; }

double TsgfErrors::max() const { return std::max({sine, cosine, complex}); }

double ProofIdentityErrors::max() const { return std::max({a, b, c}); }

double s_sum(int n, int m) {
    if (n < 1 || n % 2 == 0 || m < 1) throw Error(ErrorKind::ParityError, "S(n, m) needs odd n, m >= 1");
    double s = 0.0;
    for (int j = 0; j <= n / 2; ++j) {
        double x = kPi * (2 * j + 1) / (2.0 * n);
        s += (j % 2 == 0 ? 1.0 : -1.0) * std::sin(x) * std::pow(std::cos(x), m - 1);
    }
    return s;
}

Comparison theta_integral(int n, int m) {
    if (n % 2 == 0 || m % 2 == 0 || m <= 1)
        throw Error(ErrorKind::ParityError, "theta_integral needs odd n and odd m > 1");
    // t = sin(phi) removes the 1/sqrt(1 - t^2) endpoint singularity
    auto f = [n, m](double phi) {
        double t = std::sin(phi), r = std::sqrt(std::max(t, 0.0));
        double x = std::asin(std::min(r, 1.0)), y = std::asinh(r);
        return std::sin(n * x) * std::sinh(n * y) / (std::cos(2.0 * n * x) + std::cosh(2.0 * n * y)) *
               std::sin(m * phi);
    };
    Comparison c;
    c.lhs = oracle::integrate(oracle::IntegrandSpec::finite(f, 0.0, 0.5 * kPi)).value;
    c.rhs = kPi / (4.0 * n) * s_sum(n, m);
    return c;
}

ComplexComparison pf_reciprocal_T(int k, double theta, double c) {
    if (k < 1) throw Error(ErrorKind::DomainError, "k must be positive");
    if (!(c >= 0.0 && c < 1.0)) throw Error(ErrorKind::DomainError, "c must lie in [0, 1)");
    if (!(theta >= 0.0 && theta <= 0.5 * kPi))
        throw Error(ErrorKind::DomainError, "theta must lie in [0, pi/2]");
    const double s = std::sin(theta) + c;
    Complex w(std::asin(std::min(1.0, std::sqrt(s / (1.0 + c)))), std::asinh(std::sqrt(s / (1.0 - c))));
    Complex d = std::cos(static_cast<double>(k) * w);
    check_pole(d);
    ComplexComparison out;
    out.lhs = 1.0 / d;
    const double r = std::sqrt(1.0 - c * c);
    const Complex e = std::polar(1.0, -theta);
    for (int j = 0; j < k; ++j) {
        double x = kPi * (2 * j + 1) / (2.0 * k);
        Complex den = e - r * std::cos(x) - kI * c;
        check_pole(den);
        out.rhs += (j % 2 == 0 ? 1.0 : -1.0) * r * std::sin(x) / den;
    }
    out.rhs /= static_cast<double>(k);
    return out;
}

ComplexComparison pf_reciprocal_U(int k, Complex z) {
    if (k < 1) throw Error(ErrorKind::DomainError, "k must be positive");
    for (int j = 1; j <= 2 * k; ++j)
        if (std::abs(z - std::cos(kPi * j / k)) < 1e-8)
            throw Error(ErrorKind::PoleProximity, "z is within 1e-8 of a pole");
    ComplexComparison out;
    out.lhs = 1.0 / ((1.0 - z * z) * cheb_U(k - 1, z));
    for (int j = 1; j <= 2 * k; ++j)
        out.rhs += (j % 2 == 1 ? 1.0 : -1.0) / (z - std::cos(kPi * j / k));
    out.rhs /= 2.0 * k;
    return out;
}

ComplexComparison pf_reciprocal_U_theta(int k, double theta) {
    if (k < 1) throw Error(ErrorKind::DomainError, "k must be positive");
    if (!(theta > 0.0 && theta <= 0.5 * kPi))
        throw Error(ErrorKind::DomainError, "theta must lie in (0, pi/2]");
    const double s = std::sin(theta), r = std::sqrt(s);
    Complex w(std::asin(std::min(r, 1.0)), std::asinh(r));
    Complex d = std::sqrt(2.0 * kI * s) * std::sin(static_cast<double>(k) * w);
    check_pole(d);
    ComplexComparison out;
    out.lhs = std::polar(1.0, 0.5 * theta) / d;
    const Complex e = std::polar(1.0, -theta);
    for (int j = 1; j <= 2 * k; ++j) {
        Complex den = e - std::cos(kPi * j / k);
        check_pole(den);
        out.rhs += (j % 2 == 1 ? 1.0 : -1.0) / den;
    }
    out.rhs /= 2.0 * k;
    return out;
}

TsgfErrors tsgf_fourier_check(int n, int R) {
    if (n % 2 == 0 || n < 1) throw Error(ErrorKind::ParityError, "tsgf check needs odd n");
    if (R < 1 || R > 40) throw Error(ErrorKind::RangeError, "R must lie in 1..40");
    const WeightSpec w = WeightSpec::make(n, n, 1.0, Family::CosPlusCosh);
    // eta / rho and xi / rho at t = sin(theta), continued to t < 0
    auto eta_rho = [&](double th) {
        double t = std::clamp(std::sin(th), -1.0, 1.0);
        return xi_eta_eval(w, t).second / rho_eval(w, t);
    };
    // the real-part form extended oddly about theta = pi/2
    auto xi_rho = [&](double th) {
        double t = std::clamp(std::abs(std::sin(th)), 0.0, 1.0);
        double c = std::cos(th);
        double sgn = c > 0.0 ? 1.0 : (c < 0.0 ? -1.0 : 0.0);
        return sgn * xi_eta_eval(w, t).first / rho_eval(w, t);
    };
    TsgfErrors e;
    for (int r = 1; r <= R; ++r) {
        const int K = 2 * r + 1;
        const double target = s_sum(n, K) / n;
        e.sine = std::max(e.sine, std::abs(oracle::fourier_coeff(eta_rho, K, oracle::FourierKind::Sin).real() - target));
        e.cosine = std::max(e.cosine, std::abs(oracle::fourier_coeff(xi_rho, K, oracle::FourierKind::Cos).real() - target));
    }
    // 1 / T_n(exp(-i theta)) as a power series in exp(i theta): real and imaginary parts
    // are handled through separate sine and cosine passes of the trapezoid rule
    auto re = [n](double th) { return (1.0 / cheb_T(n, std::polar(1.0, -th))).real(); };
    auto im = [n](double th) { return (1.0 / cheb_T(n, std::polar(1.0, -th))).imag(); };
    for (int r = 1; r <= R; ++r) {
        const int K = 2 * r + 1;
        Complex cr = oracle::fourier_coeff(re, K, oracle::FourierKind::Exp);
        Complex ci = oracle::fourier_coeff(im, K, oracle::FourierKind::Exp);
        Complex coeff = cr + kI * ci;
        e.complex = std::max(e.complex, std::abs(coeff - 2.0 * s_sum(n, K) / n));
    }
    return e;
}

Comparison ramanujan_353_finite(int n, int k, int b) {
    if (n < 2 || n % 2 != 0 || k < 1 || k % 2 == 0 || b < 0)
        throw Error(ErrorKind::ParityError, "needs even n >= 2, odd k >= 1, b >= 0");
    const double kn = static_cast<double>(k) * n;
    auto in_t = [=](double t) {
        if (t < 1e-6) return b == 0 ? 0.5 * kn : 0.0;
        double x = std::asin(std::min(t, 1.0));
        return std::sin(kn * x) / ((std::cos(n * x) + std::cosh(n * std::asinh(t))) * t) *
               std::pow(t, 4 * b);
    };
    // t = sin(phi) keeps the integrand smooth at t = 1
    auto in_phi = [=](double phi) { return in_t(std::sin(phi)) * std::cos(phi); };
    Comparison c;
    c.lhs = oracle::integrate(oracle::IntegrandSpec::finite(in_phi, 0.0, 0.5 * kPi)).value;
    if (b == 0) {
        c.rhs = 0.25 * kPi;
    } else {
        c.rhs = oracle::integrate(oracle::IntegrandSpec::finite(in_t, 0.0, 1.0), 1e-10).value;
        auto abs_phi = [&](double phi) { return std::abs(in_phi(phi)); };
        c.scale = oracle::integrate(oracle::IntegrandSpec::finite(abs_phi, 0.0, 0.5 * kPi), 1e-10).value;
    }
    return c;
}

QfSymmetry q_f_symmetry(int nu, int mu) {
    if (nu < 2 || nu % 2 != 0 || mu < 0)
        throw Error(ErrorKind::ParityError, "q_f_symmetry needs even nu >= 2 and mu >= 0");
    std::vector<Complex> f(nu + 1);
    QfSymmetry out;
    for (int j = 1; j <= nu; ++j) {
        double ph = kPi * (2 * j - 1) / (2.0 * nu);
        Complex q = (1.0 - std::sin(ph)) / std::cos(ph) * std::polar(1.0, -ph);
        out.max_abs_q = std::max(out.max_abs_q, std::abs(q));
        Complex tail = 0.0;
        for (int l = 1; l <= mu; ++l) tail += std::pow(q, 2 * nu * l);
        f[j] = (std::cos(ph) - kI) / ((1.0 - q) * std::cos(ph)) * (2.0 + q + (1.0 + q) * tail);
        out.sum_f += f[j];
    }
    for (int j = 1; j <= nu; ++j)
        out.max_deviation = std::max(out.max_deviation, std::abs(f[j] + f[nu + 1 - j] - 1.0));
    return out;
}

ProofIdentityErrors proof_identities_check(double z, int n, int m, int u) {
    if (z == 0.0 || n < 1 || m < 1 || m % 2 == 0)
        throw Error(ErrorKind::DomainError, "needs z != 0, n >= 1, odd m");
    if (std::abs(u) >= n) throw Error(ErrorKind::RangeError, "needs |u| < n");
    ProofIdentityErrors e;
    const double sh2 = sq(std::sinh(z));

    double lhs = std::tanh(z) / std::sinh(2.0 * n * z) * std::cosh(2.0 * u * z);
    double rhs = 0.0;
    for (int i = 1; i <= 2 * n - 1; ++i) {
        double s2 = sq(std::sin(kPi * i / (2.0 * n)));
        rhs += (i % 2 == 1 ? 1.0 : -1.0) * s2 / (sh2 + s2) * std::cos(kPi * i * u / n);
    }
    e.a = std::abs(lhs - rhs / (2.0 * n));

    double sb = 0.0;
    for (int j = 1; j <= (m - 1) / 2; ++j) sb += sh2 / (sq(std::sin(kPi * j / m)) + sh2);
    e.b = std::abs(sb - (m * std::tanh(z) / (2.0 * std::tanh(m * z)) - 0.5));

    double sc = 0.0;
    for (int i = 1; i <= 2 * n - 1; ++i) sc += (i % 2 == 1 ? 1.0 : -1.0) * std::cos(kPi * i * u / n);
    e.c = std::abs(sc - 1.0);
    return e;
}

Comparison glaisher_check(double a) {
    if (!(a > 0.0)) throw Error(ErrorKind::DomainError, "a must be positive");
    double s = 0.0;
    for (int j = 0; j < 200; ++j) {
        double t = (2 * j + 1) * std::exp(-sq(kPi * (2 * j + 1)) * a / 8.0);
        s += (j % 2 == 0 ? 1.0 : -1.0) * t;
        if (t < 1e-300) break;
    }
    auto f = [a](double x) {
        double r = std::sqrt(x);
        return std::sin(r) * sinh_over_cosh2(r, std::cos(2.0 * r)) * std::sin(a * x);
    };
    return half_line(f, sq(kPi) / 8.0 * s, false);
}

Comparison arctan_identity(double a) {
    if (!(a > 0.0)) throw Error(ErrorKind::DomainError, "a must be positive");
    auto f = [a](double x) {
        if (x == 0.0) return 0.0;
        return std::sin(x) * sinh_over_cosh2(x / a, std::cos(2.0 * x)) / x;
    };
    return half_line(f, 0.5 * std::atan(a), false);
}

Comparison vanishing_moment_identity(int k) {
    if (k < 1) throw Error(ErrorKind::DomainError, "k must be positive");
    auto f = [k](double x) { return std::sin(x) * sinh_over_cosh2(x, std::cos(2.0 * x)) * std::pow(x, 4 * k - 1); };
    return half_line(f, 0.0, true);
}

Comparison angle_identity(double alpha) {
    if (!(alpha > 0.0 && alpha < 0.5 * kPi))
        throw Error(ErrorKind::DomainError, "alpha must lie in (0, pi/2)");
    const double sa = std::sin(alpha), ca = std::cos(alpha);
    auto f = [=](double x) {
        if (x < 1e-8) return 0.25 * sa * ca;
        double y = x * ca;
        if (y > 300.0) return 0.0;
        return std::sin(x * sa) * std::sinh(y) / sq(std::cosh(y) + std::cos(x * sa)) / x;
    };
    return half_line(f, 0.5 * alpha, false);
}

Comparison finite_arctan_identity(int n, double a) {
    if (n < 1 || n % 2 == 0) throw Error(ErrorKind::ParityError, "n must be odd");
    if (!(a > 0.0)) throw Error(ErrorKind::DomainError, "a must be positive");
    // t = sin(phi)
    auto f = [=](double phi) {
        double t = std::sin(phi);
        if (t < 1e-8) return n * n * t / (2.0 * a);
        double y = n * std::asinh(t / a);
        return std::sin(n * phi) * std::sinh(y) / (std::cos(2.0 * n * phi) + std::cosh(2.0 * y)) /
               (t * std::sqrt(1.0 + sq(t / a)));
    };
    Comparison c;
    c.lhs = oracle::integrate(oracle::IntegrandSpec::finite(f, 0.0, 0.5 * kPi)).value;
    c.rhs = 0.5 * std::atan(a);
    return c;
}

Comparison even_cosh_identity(int n) {
    if (n < 2 || n % 2 != 0) throw Error(ErrorKind::ParityError, "n must be even");
    auto f = [n](double phi) {
        double t = std::sin(phi), y = n * std::asinh(t);
        return std::cos(n * phi) * std::cosh(y) / (std::cos(2.0 * n * phi) + std::cosh(2.0 * y)) * t /
               std::sqrt(1.0 + t * t);
    };
    auto fa = [&](double phi) { return std::abs(f(phi)); };
    Comparison c;
    c.lhs = oracle::integrate(oracle::IntegrandSpec::finite(f, 0.0, 0.5 * kPi)).value;
    c.rhs = 0.0;
    c.scale = oracle::integrate(oracle::IntegrandSpec::finite(fa, 0.0, 0.5 * kPi), 1e-10).value;
    return c;
}

}  // namespace bsz

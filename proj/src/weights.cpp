#include "bszego/weights.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "bszego/error.hpp"

namespace bsz {

const char* family_name(Family f) {
    switch (f) {
        case Family::CosPlusCosh: return "CosPlusCosh";
        case Family::SquaredCosPlusCosh: return "SquaredCosPlusCosh";
        case Family::CoshMinusCosOverT: return "CoshMinusCosOverT";
        case Family::ProductCosPlusCosh: return "ProductCosPlusCosh";
        case Family::ProductCoshMinusCos: return "ProductCoshMinusCos";
        case Family::MixedPlusMinus: return "MixedPlusMinus";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    for (Family f : {Family::CosPlusCosh, Family::SquaredCosPlusCosh, Family::CoshMinusCosOverT,
                     Family::ProductCosPlusCosh, Family::ProductCoshMinusCos,
                     Family::MixedPlusMinus})
        if (s == family_name(f)) return f;
    throw Error(ErrorKind::InvalidSpec, "unknown family '" + s + "'");
}

const char* measure_factor_name(MeasureFactor f) {
    switch (f) {
        case MeasureFactor::InvSqrtBoth: return "InvSqrtBoth";
        case MeasureFactor::SqrtBoth: return "SqrtBoth";
        case MeasureFactor::SqrtRatio: return "SqrtRatio";
        case MeasureFactor::PlainDt: return "PlainDt";
    }
    return "?";
}

bool WeightSpec::has_m_prime() const {
    return family == Family::ProductCosPlusCosh || family == Family::ProductCoshMinusCos ||
           family == Family::MixedPlusMinus;
}

WeightSpec WeightSpec::make(int n, int m, double a, Family family, MeasureFactor measure,
                            int m_prime) {
    WeightSpec s{n, m, a, family, measure, m_prime};
    if (n < 1 || m < 1) throw Error(ErrorKind::InvalidSpec, "n and m must be positive");
    if (!(a > 0.0) || !std::isfinite(a)) throw Error(ErrorKind::InvalidSpec, "a must be positive");
    if (s.has_m_prime() && m_prime < 1)
        throw Error(ErrorKind::InvalidSpec, "mPrime must be positive for this family");
    return s;
}

double theta_to_t(double a, double theta) { return 0.5 * ((1.0 - a) + (1.0 + a) * std::cos(theta)); }

namespace {

template <class R>
R sin_ratio_r(int n, R t) {
    using std::asin, std::asinh, std::sin, std::sinh, std::sqrt;
    if (t > 0) {
        R u = sqrt(std::min(t, R(1)));
        return sin(n * asin(u)) / u;
    }
    if (t < 0) {
        R u = sqrt(-t);
        return sinh(n * asinh(u)) / u;
    }
    return n;
}

template <class R>
R cos_branch_r(int n, R t) {
    using std::asin, std::asinh, std::cos, std::cosh, std::sqrt;
    if (t >= 0) return cos(n * asin(sqrt(std::min(t, R(1)))));
    return cosh(n * asinh(sqrt(-t)));
}

template <class R>
R sinh_ratio_r(int m, R s) {
    using std::asin, std::asinh, std::sin, std::sinh, std::sqrt;
    if (s > 0) {
        R u = sqrt(s);
        return sinh(m * asinh(u)) / u;
    }
    if (s < 0) {
        R u = sqrt(std::min(-s, R(1)));
        return sin(m * asin(u)) / u;
    }
    return m;
}

template <class R>
R cosh_branch_r(int m, R s) {
    using std::asin, std::asinh, std::cos, std::cosh, std::sqrt;
    if (s >= 0) return cosh(m * asinh(sqrt(s)));
    return cos(m * asin(sqrt(std::min(-s, R(1)))));
}

}  // namespace

double sin_ratio(int n, double t) { return sin_ratio_r(n, t); }
double cos_branch(int n, double t) { return cos_branch_r(n, t); }
double sinh_ratio(int m, double s) { return sinh_ratio_r(m, s); }
double cosh_branch(int m, double s) { return cosh_branch_r(m, s); }

double cheb_T_direct(int n, double x) {
    if (std::abs(x) <= 1.0) return std::cos(n * std::acos(x));
    double v = std::cosh(n * std::acosh(std::abs(x)));
    return (x < 0.0 && n % 2 == 1) ? -v : v;
}

namespace {

void check_domain(const WeightSpec& s, double t) {
    const double slack = 1e-12 * (1.0 + s.a);
    if (!(t >= -s.a - slack && t <= 1.0 + slack))
        throw Error(ErrorKind::DomainError, "t outside [-a, 1]");
}

double plus_part(int n, int m, double a, double t) {
    return cheb_T_direct(n, 1.0 - 2.0 * t) + cheb_T_direct(m, 1.0 + 2.0 * t / a);
}

// (cosh(2m y) - cos(2n x)) / t = 2 (S_n^2 + H_m^2 / a); no cancellation near t = 0
double minus_part_over_t(int n, int m, double a, double t) {
    double S = sin_ratio(n, t), H = sinh_ratio(m, t / a);
    return 2.0 * (S * S + H * H / a);
}

int plus_degree(int n, int m, double a) {
    if (n != m) return std::max(n, m);
    // leading coefficients 2^{2n-1} ((-1)^n + a^{-n})
    double lead = (n % 2 ? -1.0 : 1.0) + std::pow(a, -n);
    return std::abs(lead) > 1e-10 ? n : n - 1;
}

int minus_degree(int n, int m, double a) {
    // degree of (T_m(1+2t/a) - T_n(1-2t)) / t
    if (n != m) return std::max(n, m) - 1;
    double lead = std::pow(a, -n) - (n % 2 ? -1.0 : 1.0);
    return std::abs(lead) > 1e-10 ? n - 1 : n - 2;
}

}  // namespace

double rho_eval(const WeightSpec& s, double t) {
    check_domain(s, t);
    switch (s.family) {
        case Family::CosPlusCosh: return plus_part(s.n, s.m, s.a, t);
        case Family::SquaredCosPlusCosh: {
            double r = plus_part(s.n, s.m, s.a, t);
            return r * r;
        }
        case Family::CoshMinusCosOverT: return minus_part_over_t(s.n, s.m, s.a, t);
        case Family::ProductCosPlusCosh:
            return plus_part(s.n, s.m, s.a, t) * plus_part(s.n, s.m_prime, s.a, t);
        case Family::ProductCoshMinusCos:
            return minus_part_over_t(s.n, s.m, s.a, t) * minus_part_over_t(s.n, s.m_prime, s.a, t);
        case Family::MixedPlusMinus:
            return plus_part(s.n, s.m, s.a, t) * minus_part_over_t(s.n, s.m_prime, s.a, t);
    }
    throw Error(ErrorKind::InvalidSpec, "unknown family");
}

std::pair<double, double> xi_eta_eval(const WeightSpec& s, double t) {
    check_domain(s, t);
    double xi = cos_branch(s.n, t) * cosh_branch(s.m, t / s.a);
    double eta = t / std::sqrt(s.a) * sin_ratio(s.n, t) * sinh_ratio(s.m, t / s.a);
    return {xi, eta};
}

double measure_factor_eval(MeasureFactor mf, double a, double t) {
    switch (mf) {
        case MeasureFactor::InvSqrtBoth: return 1.0;
        case MeasureFactor::SqrtBoth: return (1.0 - t) * (a + t);
        case MeasureFactor::SqrtRatio: return 1.0 - t;
        case MeasureFactor::PlainDt: return std::sqrt(std::max(0.0, (1.0 - t) * (a + t)));
    }
    return 1.0;
}

double weight_theta_density(const WeightSpec& s, double t) {
    return measure_factor_eval(s.measure, s.a, t) / rho_eval(s, t);
}

int rho_degree(const WeightSpec& s) {
    switch (s.family) {
        case Family::CosPlusCosh: return plus_degree(s.n, s.m, s.a);
        case Family::SquaredCosPlusCosh: return 2 * plus_degree(s.n, s.m, s.a);
        case Family::CoshMinusCosOverT: return minus_degree(s.n, s.m, s.a);
        case Family::ProductCosPlusCosh:
            return plus_degree(s.n, s.m, s.a) + plus_degree(s.n, s.m_prime, s.a);
        case Family::ProductCoshMinusCos:
            return minus_degree(s.n, s.m, s.a) + minus_degree(s.n, s.m_prime, s.a);
        case Family::MixedPlusMinus:
            return plus_degree(s.n, s.m, s.a) + minus_degree(s.n, s.m_prime, s.a);
    }
    return 0;
}

Complex SzegoFactor::eval_circle(double theta) const { return h(std::polar(1.0, theta)); }

namespace {

// h(e^{i theta}) from the closed-form sample formula, theta in [0, pi];
// evaluated in extended precision
std::complex<long double> factor_sample(const WeightSpec& s, long double theta) {
    using LD = long double;
    const LD a = s.a;
    const LD t = ((1 - a) + (1 + a) * std::cos(theta)) / 2;
    const LD sq2 = std::numbers::sqrt2_v<LD>;
    const LD half_pi = std::numbers::pi_v<LD> / 2;
    const LD ra = std::sqrt(a);
    const LD S = sin_ratio_r(s.n, t), C = cos_branch_r(s.n, t);
    const LD H = sinh_ratio_r(s.m, t / a), Ch = cosh_branch_r(s.m, t / a);
    if (s.family == Family::CosPlusCosh) {
        auto phase = std::polar(LD(1), -half_pi * s.n + (s.n + s.m) * theta / 2);
        return phase * sq2 * std::complex<LD>(C * Ch, t / ra * S * H);
    }
    auto phase = std::polar(LD(1), -half_pi * (s.n - 1) + (s.n + s.m - 1) * theta / 2);
    return phase * sq2 * std::complex<LD>(S * Ch, -C * H / ra);
}

}  // namespace

void validate_factor(SzegoFactor& f) {
    const WeightSpec& s = f.spec;
    if (f.h.degree() != rho_degree(s))
        throw Error(ErrorKind::FactorizationResidual, "deg h differs from deg rho");
    if (!(f.h[0] > 0.0)) throw Error(ErrorKind::FactorizationResidual, "h(0) is not positive");

    constexpr int G = 512;
    double worst = 0.0, rho_max = 0.0;
    for (int j = 0; j < G; ++j) {
        double th = 2.0 * std::numbers::pi * j / G;
        double r = rho_eval(s, theta_to_t(s.a, th));
        double hv = std::norm(f.eval_circle(th));
        worst = std::max(worst, std::abs(hv - r));
        rho_max = std::max(rho_max, r);
    }
    f.max_factorization_residual = worst / rho_max;
    if (f.max_factorization_residual > 1e-9)
        throw Error(ErrorKind::FactorizationResidual,
                    "|h|^2 - rho residual " + std::to_string(f.max_factorization_residual));

    if (f.h.degree() > 0) {
        for (const Complex& z : poly_roots(f.h))
            if (std::abs(z) < 1.0 - 1e-8)
                throw Error(ErrorKind::RootInDisk, "root of h inside the unit disk");
    }
}

SzegoFactor build_szego_factor(const WeightSpec& s) {
    if (s.family != Family::CosPlusCosh && s.family != Family::CoshMinusCosOverT)
        throw Error(ErrorKind::InvalidSpec, "no Szego factor for this family");
    if (s.n + s.m > 64) throw Error(ErrorKind::InvalidSpec, "n + m above 64");
    const int deg = rho_degree(s);
    const int N = std::max(8, static_cast<int>(std::bit_ceil(static_cast<unsigned>(2 * (deg + 1)))));
    std::vector<std::complex<long double>> v(N);
    for (int k = 0; k <= N / 2; ++k)
        v[k] = factor_sample(s, 2 * std::numbers::pi_v<long double> * k / N);
    for (int k = N / 2 + 1; k < N; ++k) v[k] = std::conj(v[N - k]);

    RealPolynomial full = poly_from_circle_samples(v, N - 1);
    double big = full.max_abs_coeff(), tail = 0.0;
    for (int j = deg + 1; j < N; ++j) tail = std::max(tail, std::abs(full[j]));
    if (tail > 1e-9 * big)
        throw Error(ErrorKind::FactorizationResidual, "factor has coefficients above deg rho");
    std::vector<double> c(full.coeffs().begin(), full.coeffs().begin() + deg + 1);

    SzegoFactor f{s, RealPolynomial(std::move(c)), 0.0};
    validate_factor(f);
    return f;
}

SzegoFactor squared_factor(const SzegoFactor& base) {
    if (base.spec.family != Family::CosPlusCosh)
        throw Error(ErrorKind::InvalidSpec, "squared factor needs a CosPlusCosh base");
    SzegoFactor f{base.spec, base.h * base.h, 0.0};
    f.spec.family = Family::SquaredCosPlusCosh;
    validate_factor(f);
    return f;
}

}  // namespace bsz

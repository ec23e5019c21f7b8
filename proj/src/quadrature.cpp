#include "bszego/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "bszego/error.hpp"
#include "bszego/oracle.hpp"

namespace bsz {

namespace {

const double kPi = std::numbers::pi;

double sq(double x) { return x * x; }

void require_positive(int n, int m, double a) {
    if (n < 1 || m < 1 || !(a > 0.0))
        throw Error(ErrorKind::InvalidSpec, "need n, m >= 1 and a > 0");
}

// tanh(alpha / 2n) {tanh(m alpha / 2n)}^{(-1)^j}, the summand shared by the
// generating-function forms; zero when alpha = 0 and j is even
double tanh_pair(double al, int n, int m, int j) {
    double t1 = std::tanh(al / (2.0 * n));
    double t2 = std::tanh(m * al / (2.0 * n));
    if (j % 2 == 0) return t1 * t2;
    if (al == 0.0) return 1.0 / m;
    return t1 / t2;
}

// cos(sqrt x) and cosh(c sqrt x), continued to x < 0
double cos_sqrt(double x) { return x >= 0.0 ? std::cos(std::sqrt(x)) : std::cosh(std::sqrt(-x)); }
double cosh_sqrt(double c, double x) {
    return x >= 0.0 ? std::cosh(c * std::sqrt(x)) : std::cos(c * std::sqrt(-x));
}

// x / (cosh(c sqrt x) - cos(sqrt x)) written without cancellation
double x_over_cosh_minus_cos(double c, double x) {
    if (x == 0.0) return 2.0 / (c * c + 1.0);
    double s = std::sqrt(std::abs(x));
    double d = x > 0.0 ? sq(std::sinh(0.5 * c * s)) + sq(std::sin(0.5 * s))
                       : sq(std::sin(0.5 * c * s)) + sq(std::sinh(0.5 * s));
    return s * s / (2.0 * d);
}

}  // namespace

AlphaBeta alpha_beta(double z, int n, int m, double a) {
    AlphaBeta r;
    r.z = z;
    r.alpha = 2.0 * n * std::asinh(std::sin(kPi * z / (2.0 * n)) / std::sqrt(a));
    r.beta = 2.0 * m * std::asinh(std::sqrt(a) * std::sin(kPi * z / (2.0 * m)));
    return r;
}

QuadratureRule rule_cos_plus_cosh(int n, int m, double a) {
    require_positive(n, m, a);
    if (n % 2 == 0 || m % 2 == 0)
        throw Error(ErrorKind::ParityError, "rule_cos_plus_cosh needs odd n and m");
    QuadratureRule r;
    r.spec = WeightSpec::make(n, m, a, Family::CosPlusCosh, MeasureFactor::InvSqrtBoth);
    r.exact_degree = m + n - 1;
    r.nodes.push_back(0.0);
    r.weights.push_back(kPi / (2.0 * m * n));
    for (int i = 1; i <= (n - 1) / 2; ++i) {
        double al = alpha_beta(2 * i, n, m, a).alpha;
        r.nodes.push_back(sq(std::sin(kPi * i / n)));
        r.weights.push_back(2.0 * kPi / n * std::tanh(al / (2.0 * n)) / std::sinh(double(m) / n * al));
    }
    for (int j = 1; j <= (m - 1) / 2; ++j) {
        double be = alpha_beta(2 * j, n, m, a).beta;
        r.nodes.push_back(-a * sq(std::sin(kPi * j / m)));
        r.weights.push_back(2.0 * kPi / m * std::tanh(be / (2.0 * m)) / std::sinh(double(n) / m * be));
    }
    return r;
}

QuadratureRule rule_squared(int n, int m, double a) {
    require_positive(n, m, a);
    QuadratureRule r;
    r.spec = WeightSpec::make(n, m, a, Family::SquaredCosPlusCosh, MeasureFactor::SqrtBoth);
    r.exact_degree = 2 * m + 2 * n - 3;
    const double f = kPi * a / (2.0 * m * n);
    r.nodes.push_back(0.0);
    r.weights.push_back(f / 4.0);
    for (int i = 1; i < n; ++i) {
        double al = alpha_beta(i, n, m, a).alpha;
        double sgn = i % 2 == 0 ? 1.0 : -1.0;
        double mr = double(m) / n * al;
        r.nodes.push_back(sq(std::sin(kPi * i / (2.0 * n))));
        r.weights.push_back(f * m * std::sinh(al / n) / std::sinh(mr) *
                            sq(std::cos(kPi * i / (2.0 * n))) / (std::cosh(mr) + sgn));
    }
    for (int j = 1; j < m; ++j) {
        double be = alpha_beta(j, n, m, a).beta;
        double sgn = j % 2 == 0 ? 1.0 : -1.0;
        double nr = double(n) / m * be;
        r.nodes.push_back(-a * sq(std::sin(kPi * j / (2.0 * m))));
        r.weights.push_back(f * n * std::sinh(be / m) / std::sinh(nr) *
                            sq(std::cos(kPi * j / (2.0 * m))) / (std::cosh(nr) + sgn));
    }
    return r;
}

QuadratureRule rule_cosh_minus_cos(int n, int m, double a) {
    require_positive(n, m, a);
    if ((n + m) % 2 == 0)
        throw Error(ErrorKind::ParityError, "rule_cosh_minus_cos needs n and m of opposite parity");
    if (n % 2 == 0) {
        // t -> -t/a maps the even/odd case onto the odd/even rule for (m, n, 1/a)
        QuadratureRule r = rule_cosh_minus_cos(m, n, 1.0 / a);
        for (double& x : r.nodes) x *= -a;
        for (double& w : r.weights) w = -w;
        r.spec = WeightSpec::make(n, m, a, Family::CoshMinusCosOverT);
        return r;
    }
    QuadratureRule r;
    r.spec = WeightSpec::make(n, m, a, Family::CoshMinusCosOverT);
    r.exact_degree = m + n - 1;
    r.constraint = RuleConstraint::RequiresPZeroAtOrigin;
    for (int i = 1; i <= (n - 1) / 2; ++i) {
        double al = alpha_beta(2 * i, n, m, a).alpha;
        r.nodes.push_back(sq(std::sin(kPi * i / n)));
        r.weights.push_back(2.0 * kPi / n * std::tanh(al / (2.0 * n)) / std::sinh(double(m) / n * al));
    }
    for (int j = 1; j <= m / 2; ++j) {
        double be = alpha_beta(2 * j - 1, n, m, a).beta;
        r.nodes.push_back(-a * sq(std::sin(kPi * (2 * j - 1) / (2.0 * m))));
        r.weights.push_back(-2.0 * kPi / m * std::tanh(be / (2.0 * m)) /
                            std::sinh(double(n) / m * be));
    }
    return r;
}

QuadratureRule weights_from_moments(const std::vector<double>& nodes, const WeightSpec& spec,
                                    MeasureFactor mf) {
    const int k = static_cast<int>(nodes.size());
    if (k == 0 || k > 24)
        throw Error(ErrorKind::IllConditioned, "weights_from_moments takes 1..24 nodes");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < i; ++j)
            if (nodes[i] == nodes[j]) throw Error(ErrorKind::IllConditioned, "repeated node");

    WeightSpec w = spec;
    w.measure = mf;
    const double a = spec.a;
    auto to_x = [a](double t) { return (2.0 * t + a - 1.0) / (1.0 + a); };

    // moments of T_j(x(t)) against the weight, and the Chebyshev-Vandermonde matrix
    Eigen::VectorXd mom(k);
    for (int j = 0; j < k; ++j) {
        auto f = [&, j](double t) { return cheb_T(j, to_x(t)) * weight_theta_density(w, t); };
        mom(j) = oracle::integrate(oracle::IntegrandSpec::theta(f, a), 1e-12).value;
    }
    Eigen::MatrixXd V(k, k);
    for (int j = 0; j < k; ++j)
        for (int s = 0; s < k; ++s) V(j, s) = cheb_T(j, to_x(nodes[s]));

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(V);
    const auto& sv = svd.singularValues();
    if (sv(k - 1) == 0.0 || sv(0) / sv(k - 1) > 1e12)
        throw Error(ErrorKind::IllConditioned, "moment system is ill conditioned");
    Eigen::VectorXd wts = V.colPivHouseholderQr().solve(mom);
    double res = (V * wts - mom).norm() / std::max(1.0, mom.norm());
    if (!(res <= 1e-7))
        throw Error(ErrorKind::IllConditioned, "moment residual " + std::to_string(res));

    QuadratureRule r;
    r.spec = w;
    r.nodes = nodes;
    r.weights.assign(wts.data(), wts.data() + k);
    r.exact_degree = k - 1;
    return r;
}

double apply_rule(const QuadratureRule& rule, const RealPolynomial& p0) {
    RealPolynomial p = p0.trimmed();
    if (p.degree() > rule.exact_degree)
        throw Error(ErrorKind::DegreeExceeded, "polynomial degree " + std::to_string(p.degree()) +
                                                   " above rule degree " +
                                                   std::to_string(rule.exact_degree));
    if (rule.constraint == RuleConstraint::RequiresPZeroAtOrigin &&
        std::abs(p[0]) > 1e-12 * std::max(1.0, p.max_abs_coeff()))
        throw Error(ErrorKind::ConstraintViolated, "rule needs p(0) = 0");
    double s = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * p(rule.nodes[i]);
    return s;
}

double sum_form(int n, int m, double a, int u) {
    require_positive(n, m, a);
    if (std::abs(u) >= n) throw Error(ErrorKind::RangeError, "sum_form needs |u| < n");
    double s = 0.0;
    for (int j = 1; j <= 2 * n; ++j) {
        double al = alpha_beta(j, n, m, a).alpha;
        double sgn = j % 2 == 1 ? 1.0 : -1.0;
        s += sgn * tanh_pair(al, n, m, j) * std::cos(kPi * j * u / n);
    }
    return kPi / (2.0 * n) * s;
}

double sum_form_beta(int n, int m, double a, int u) {
    require_positive(n, m, a);
    if (std::abs(u) >= m) throw Error(ErrorKind::RangeError, "sum_form_beta needs |u| < m");
    double s = 0.0;
    for (int j = 1; j <= 2 * m; ++j) {
        double be = alpha_beta(j, n, m, a).beta;
        double sgn = j % 2 == 1 ? 1.0 : -1.0;
        s += sgn * tanh_pair(be, m, n, j) * std::cosh(u * be / m);
    }
    return kPi / (2.0 * m) * s;
}

double sum_form_poly(int n, int m, double a, const RealPolynomial& p0) {
    require_positive(n, m, a);
    RealPolynomial p = p0.trimmed();
    if (p.degree() >= n) throw Error(ErrorKind::DegreeExceeded, "sum_form_poly needs deg p < n");
    double s = 0.0;
    for (int j = 1; j <= 2 * n; ++j) {
        double al = alpha_beta(j, n, m, a).alpha;
        double sgn = j % 2 == 1 ? 1.0 : -1.0;
        s += sgn * tanh_pair(al, n, m, j) * p(sq(std::sin(kPi * j / (2.0 * n))));
    }
    return kPi / (2.0 * n) * s;
}

double sum_form_odd(int n, int m, double a, int u) {
    require_positive(n, m, a);
    if (u % 2 == 0 || std::abs(u) >= 2 * n - 2)
        throw Error(ErrorKind::RangeError, "sum_form_odd needs odd u with |u| < 2n - 2");
    double s = 0.0;
    for (int j = 1; j <= 2 * n - 1; ++j) {
        double al = alpha_beta(j, n, m, a).alpha;
        double ct = 1.0 / std::tanh(m * al / (2.0 * n));
        double sgn = j % 2 == 0 ? 1.0 : -1.0;
        s += sgn * sq(std::sin(kPi * j / (2.0 * n))) / std::cosh(al / (2.0 * n)) *
             (j % 2 == 0 ? ct : 1.0 / ct) * std::sin(kPi * j * u / (2.0 * n));
    }
    return kPi / (2.0 * n * std::sqrt(a)) * s;
}

double sum_form_odd_beta(int n, int m, double a, int u) {
    require_positive(n, m, a);
    if (u % 2 == 0 || std::abs(u) >= 2 * m - 2)
        throw Error(ErrorKind::RangeError, "sum_form_odd_beta needs odd u with |u| < 2m - 2");
    double s = 0.0;
    for (int j = 1; j <= 2 * m - 1; ++j) {
        double be = alpha_beta(j, n, m, a).beta;
        double ct = 1.0 / std::tanh(n * be / (2.0 * m));
        double sgn = j % 2 == 0 ? 1.0 : -1.0;
        s += sgn * sq(std::sin(kPi * j / (2.0 * m))) / std::cosh(be / (2.0 * m)) *
             (j % 2 == 0 ? ct : 1.0 / ct) * std::sinh(be * u / (2.0 * m));
    }
    return kPi * a / (2.0 * m) * s;
}

CorollaryValue corollary_eval(Corollary which, int n, int m, double a) {
    if (n < 1) throw Error(ErrorKind::InvalidSpec, "need n >= 1");
    CorollaryValue out;
    switch (which) {
        case Corollary::A: {
            if (!(a > 0.0)) throw Error(ErrorKind::InvalidSpec, "need a > 0");
            out.closed_form = kPi / 4.0;
            auto f = [n, a](double t) {
                return (1.0 - t) * (a + t) / (a + 2.0 * t + a * cheb_T(n, 1.0 - 2.0 * t));
            };
            out.oracle_value = oracle::integrate(oracle::IntegrandSpec::theta(f, a)).value;
            break;
        }
        case Corollary::B: {
            double q = std::pow(std::numbers::sqrt2 + 1.0, 2 * n);
            out.closed_form = kPi / std::sqrt(8.0) * (q + 1.0) / (q - 1.0);
            auto f = [n](double t) { return 1.0 / (1.0 + 2.0 * t + cheb_T(n, 1.0 - 2.0 * t)); };
            out.oracle_value = oracle::integrate(oracle::IntegrandSpec::theta(f, 1.0)).value;
            break;
        }
        case Corollary::C: {
            if (m < 1 || (n + m) % 2 != 0)
                throw Error(ErrorKind::ParityError, "corollary C needs n and m of equal parity");
            const int N = n + m;
            double s = 0.0;
            for (int j = -N; j <= N; ++j) {
                if (2 * std::abs(j) >= N) continue;
                double c = std::cos(2.0 * kPi * j / N);
                s += (1.0 + c) / (2.0 - c + std::cos(2.0 * kPi * m * j / N));
            }
            out.closed_form = kPi / (4.0 * N) * s;
            auto f = [n, m](double t) {
                double x = 1.0 - 2.0 * t;
                return (1.0 - t * t) /
                       ((1.0 + 2.0 * t + cheb_T(n, x)) * (1.0 + 2.0 * t + cheb_T(m, x)));
            };
            out.oracle_value = oracle::integrate(oracle::IntegrandSpec::theta(f, 1.0)).value;
            break;
        }
    }
    return out;
}

double limit_series(LimitKind kind, double al, double be, const RealPolynomial& p, double tol) {
    if (!(al > 0.0) || (!(be > 0.0) && kind != LimitKind::CoshMinusCosX &&
                        kind != LimitKind::CoshMinusCosXSwapped))
        throw Error(ErrorKind::DomainError, "limit_series needs alpha, beta > 0");
    const double pi2 = kPi * kPi;
    const double sab = al + be, dab = al - be;
    auto term = [&](int j) -> double {
        const double jj = j;
        const bool even = j % 2 == 0;
        const double sgn = even ? 1.0 : -1.0;
        switch (kind) {
            case LimitKind::TwoCoshProduct: {
                double h = kPi * sab * jj / 2.0;
                double v = 2.0 * pi2 * jj / std::sinh(h) * p(pi2 * jj * jj) /
                           (std::cosh(h) + sgn * std::cosh(kPi * dab * jj / 2.0));
                double g = 2.0 * kPi * jj / sab;
                v += 8.0 * pi2 / sq(sab) * jj / std::sinh(g) * p(-sq(g)) /
                     (std::cosh(g) + std::cos(2.0 * kPi * al * jj / sab));
                return v;
            }
            case LimitKind::CoshMinusCosX:
            case LimitKind::CoshMinusCosXSwapped: {
                const bool pos_even = kind == LimitKind::CoshMinusCosX;
                double j3 = jj * jj * jj;
                if (even == pos_even) return j3 / std::sinh(kPi * al * jj) * p(pi2 * jj * jj);
                return j3 / std::sinh(kPi * jj / al) * p(-pi2 * jj * jj / sq(al)) / std::pow(al, 4);
            }
            case LimitKind::ProductCoshMinusCosX2: {
                double j5 = std::pow(jj, 5);
                double h = kPi * sab * jj / 2.0;
                double v = j5 / std::sinh(h) * p(pi2 * jj * jj) /
                           (std::cosh(h) - sgn * std::cosh(kPi * dab * jj / 2.0));
                double g = 2.0 * kPi * jj / sab;
                v += 64.0 / std::pow(sab, 6) * j5 / std::sinh(g) * p(-sq(g)) /
                     (std::cosh(g) - std::cos(2.0 * kPi * al * jj / sab));
                return v;
            }
            case LimitKind::MixedX: {
                double j3 = jj * jj * jj;
                double h = kPi * sab * jj / 2.0;
                double v = j3 / std::cosh(h) * p(pi2 * jj * jj) /
                           (std::sinh(h) - sgn * std::sinh(kPi * dab * jj / 2.0));
                if (!even) {
                    double g = kPi * jj / sab;
                    v += 2.0 / std::pow(sab, 4) * j3 / std::sinh(g) * p(-sq(g)) /
                         (std::cosh(g) + std::cos(kPi * al * jj / sab));
                }
                return v;
            }
        }
        return 0.0;
    };

    double sum = kind == LimitKind::TwoCoshProduct ? kPi * p(0.0) / sab : 0.0;
    int small = 0;
    double prev = INFINITY;
    for (int j = 1; j <= 10000; ++j) {
        double t = term(j);
        if (!std::isfinite(t)) t = 0.0;  // sinh overflow: the term is below any tolerance
        sum += t;
        bool tiny = std::abs(t) <= tol * std::max(std::abs(sum), 1e-300);
        // exponential-decay guard: only count terms past the polynomial growth phase
        small = (tiny && std::abs(t) <= prev) ? small + 1 : 0;
        prev = std::abs(t);
        if (small >= 5) return sum;
    }
    throw Error(ErrorKind::SlowConvergence, "limit series needs more than 1e4 terms", sum);
}

double limit_integral(LimitKind kind, double al, double be, const RealPolynomial& p, double tol) {
    std::function<double(double)> f;
    double scale = 1.0;
    switch (kind) {
        case LimitKind::TwoCoshProduct:
            f = [=](double x) {
                double c = cos_sqrt(x);
                return p(x) / ((c + cosh_sqrt(al, x)) * (c + cosh_sqrt(be, x)));
            };
            break;
        case LimitKind::CoshMinusCosX:
        case LimitKind::CoshMinusCosXSwapped:
            f = [=](double x) { return x_over_cosh_minus_cos(al, x) * p(x); };
            scale = 1.0 / (4.0 * std::pow(kPi, 4));
            break;
        case LimitKind::ProductCoshMinusCosX2:
            f = [=](double x) {
                return x_over_cosh_minus_cos(al, x) * x_over_cosh_minus_cos(be, x) * p(x);
            };
            scale = 1.0 / (2.0 * std::pow(kPi, 6));
            break;
        case LimitKind::MixedX:
            f = [=](double x) {
                return x_over_cosh_minus_cos(be, x) * p(x) / (cosh_sqrt(al, x) + cos_sqrt(x));
            };
            scale = 1.0 / (2.0 * std::pow(kPi, 4));
            break;
    }
    return scale * oracle::integrate(oracle::IntegrandSpec::exp_tail(f), tol).value;
}

}  // namespace bsz

#include "bszego/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "bszego/error.hpp"

namespace bsz {

namespace {

const double kPi = std::numbers::pi;

double sq(double x) { return x * x; }

OrthoPoly finish(const WeightSpec& w, RealPolynomial p, std::optional<std::vector<double>> roots,
                 bool normalized = true) {
    if (p.leading() < 0.0) p = p * -1.0;
    if (roots) {
        double tol = 1e-9 * p.max_abs_coeff();
        for (double r : *roots)
            if (std::abs(p(r)) > tol)
                throw Error(ErrorKind::InvalidSpec, "closed-form root check failed");
    }
    OrthoPoly out;
    out.degree = p.degree();
    out.leading_coeff = p.leading();
    out.poly = std::move(p);
    out.weight = w;
    out.known_roots = std::move(roots);
    out.normalized = normalized;
    return out;
}

std::vector<double> sin2_nodes(int count, double denom, double scale, bool odd_multiples) {
    std::vector<double> r;
    for (int i = 1; i <= count; ++i) {
        double num = odd_multiples ? (2 * i - 1) : i;
        r.push_back(scale * sq(std::sin(kPi * num / denom)));
    }
    return r;
}

void append(std::vector<double>& a, const std::vector<double>& b) { a.insert(a.end(), b.begin(), b.end()); }

[[noreturn]] void parity_error(const WeightSpec& s, const char* need) {
    throw Error(ErrorKind::ParityError,
                std::string(family_name(s.family)) + "/" + measure_factor_name(s.measure) +
                    " with n=" + std::to_string(s.n) + ", m=" + std::to_string(s.m) + " needs " + need);
}

}  // namespace

OrthoPoly szego_orthonormal(const SzegoFactor& factor, int k, MeasureFactor mf) {
    const WeightSpec& fs = factor.spec;
    const double a = fs.a;
    const int l = factor.h.degree();
    bool ok = false;
    switch (mf) {
        case MeasureFactor::InvSqrtBoth: ok = l < 2 * k; break;
        case MeasureFactor::SqrtBoth: ok = l < 2 * k + 2; break;
        case MeasureFactor::SqrtRatio: ok = l < 2 * k + 1; break;
        case MeasureFactor::PlainDt:
            throw Error(ErrorKind::InvalidSpec, "no orthonormal recipe for the plain dt measure");
    }
    if (!ok || k < 0)
        throw Error(ErrorKind::DegreeThreshold,
                    "deg rho = " + std::to_string(l) + " too large for k = " + std::to_string(k));

    const double c_inv = std::sqrt(2.0 / kPi);
    const double c_sqrt = std::sqrt(2.0 / kPi) * 2.0 / (1.0 + a);
    const double c_ratio = std::sqrt(2.0 / (1.0 + a) / kPi);
    auto g = [&](double t) {
        double th = std::acos(std::clamp((2.0 * t - 1.0 + a) / (1.0 + a), -1.0, 1.0));
        Complex hc = std::conj(factor.eval_circle(th));
        switch (mf) {
            case MeasureFactor::InvSqrtBoth: return c_inv * (std::polar(1.0, k * th) * hc).real();
            case MeasureFactor::SqrtBoth:
                return c_sqrt * (std::polar(1.0, (k + 1) * th) * hc).imag() / std::sin(th);
            default:
                return c_ratio * (std::polar(1.0, (k + 0.5) * th) * hc).imag() / std::sin(0.5 * th);
        }
    };
    WeightSpec w = fs;
    w.measure = mf;
    return finish(w, interpolate_on_interval(g, -a, 1.0, k), std::nullopt);
}

OrthoPoly explicit_family(const WeightSpec& s) {
    const int n = s.n, m = s.m;
    const double a = s.a, ra = std::sqrt(a);
    const double c = 2.0 / std::sqrt(kPi);
    const bool n_odd = n % 2 == 1, m_odd = m % 2 == 1;
    std::function<double(double)> g;
    std::vector<double> roots;
    int deg = 0;
    bool normalized = true;

    auto S = [](int k, double t) { return sin_ratio(k, t); };
    auto C = [](int k, double t) { return cos_branch(k, t); };
    auto H = [a](int k, double t) { return sinh_ratio(k, t / a); };
    auto Ch = [a](int k, double t) { return cosh_branch(k, t / a); };
    auto root_both = [](double t, double a_) { return std::sqrt((1.0 - t) * (a_ + t)); };

    switch (s.family) {
        case Family::CosPlusCosh:
            if (s.measure == MeasureFactor::InvSqrtBoth && n_odd && m_odd) {
                deg = (m + n) / 2;
                g = [=](double t) { return c * t / ra * S(n, t) * H(m, t); };
                roots = {0.0};
                append(roots, sin2_nodes((n - 1) / 2, n, 1.0, false));
                append(roots, sin2_nodes((m - 1) / 2, m, -a, false));
            } else if (s.measure == MeasureFactor::InvSqrtBoth && !n_odd && !m_odd) {
                deg = (m + n) / 2;
                g = [=](double t) { return c * C(n, t) * Ch(m, t); };
                roots = sin2_nodes(n / 2, 2 * n, 1.0, true);
                append(roots, sin2_nodes(m / 2, 2 * m, -a, true));
            } else if (s.measure == MeasureFactor::SqrtBoth && !n_odd && !m_odd) {
                deg = (m + n - 2) / 2;
                g = [=](double t) { return c * t / ra * S(n, t) * H(m, t) / root_both(t, a); };
                roots = {0.0};
                append(roots, sin2_nodes(n / 2 - 1, n, 1.0, false));
                append(roots, sin2_nodes(m / 2 - 1, m, -a, false));
            } else if (s.measure == MeasureFactor::SqrtRatio && !n_odd && m_odd) {
                deg = (m + n - 1) / 2;
                g = [=](double t) { return c * t / ra * S(n, t) * H(m, t) / std::sqrt(1.0 - t); };
                roots = {0.0};
                append(roots, sin2_nodes(n / 2 - 1, n, 1.0, false));
                append(roots, sin2_nodes((m - 1) / 2, m, -a, false));
            } else {
                parity_error(s, "odd/odd or even/even (InvSqrtBoth), even/even (SqrtBoth), "
                                "even n and odd m (SqrtRatio)");
            }
            break;
        case Family::SquaredCosPlusCosh: {
            if (s.measure != MeasureFactor::SqrtBoth) parity_error(s, "the SqrtBoth measure");
            deg = m + n - 1;
            const double c2 = std::sqrt(2.0 / kPi);
            g = [=](double t) { return c2 * t / ra * S(2 * n, t) * H(2 * m, t) / root_both(t, a); };
            roots = {0.0};
            append(roots, sin2_nodes(n - 1, 2 * n, 1.0, false));
            append(roots, sin2_nodes(m - 1, 2 * m, -a, false));
            break;
        }
        case Family::CoshMinusCosOverT:
            if (s.measure != MeasureFactor::InvSqrtBoth) parity_error(s, "the InvSqrtBoth measure");
            deg = (m + n - 1) / 2;
            if (n_odd && !m_odd) {
                g = [=](double t) { return c * S(n, t) * Ch(m, t); };
                roots = sin2_nodes((n - 1) / 2, n, 1.0, false);
                append(roots, sin2_nodes(m / 2, 2 * m, -a, true));
            } else if (!n_odd && m_odd) {
                g = [=](double t) { return c * C(n, t) * H(m, t) / ra; };
                roots = sin2_nodes(n / 2, 2 * n, 1.0, true);
                append(roots, sin2_nodes((m - 1) / 2, m, -a, false));
            } else {
                parity_error(s, "n and m of opposite parity");
            }
            break;
        case Family::ProductCosPlusCosh:
        case Family::ProductCoshMinusCos:
        case Family::MixedPlusMinus: {
            const int M = m + s.m_prime;
            if (M % 2 != 0) parity_error(s, "m + mPrime even");
            // the mixed polynomial is orthogonal for sqrt((1-t)/(a+t)) / rho
            const MeasureFactor want = s.family == Family::MixedPlusMinus ? MeasureFactor::SqrtRatio
                                                                          : MeasureFactor::SqrtBoth;
            if (s.measure != want) parity_error(s, s.family == Family::MixedPlusMinus
                                                       ? "the SqrtRatio measure"
                                                       : "the SqrtBoth measure");
            normalized = false;
            const int K = M / 2;
            // sin(2n x) = 2 sqrt(t) S_n C_n,  sinh(M y) = 2 sqrt(t/a) H_K Ch_K
            if (s.family == Family::MixedPlusMinus) {
                deg = n - 1 + K;
                g = [=](double t) { return 2.0 * S(n, t) * C(n, t) * Ch(M, t) / std::sqrt(1.0 - t); };
                roots = sin2_nodes(n - 1, 2 * n, 1.0, false);
                append(roots, sin2_nodes(K, 2 * M, -a, true));
            } else {
                const bool minus = s.family == Family::ProductCoshMinusCos;
                deg = n + K - (minus ? 2 : 1);
                const double c3 = minus ? std::sqrt(2.0 / kPi) : 1.0;
                g = [=](double t) {
                    double v = 4.0 / ra * S(n, t) * C(n, t) * H(K, t) * Ch(K, t) / root_both(t, a);
                    return c3 * (minus ? v : v * t);
                };
                if (!minus) roots = {0.0};
                append(roots, sin2_nodes(n - 1, 2 * n, 1.0, false));
                append(roots, sin2_nodes(K - 1, M, -a, false));
            }
            break;
        }
    }
    WeightSpec w = s;
    return finish(w, interpolate_on_interval(g, -a, 1.0, deg), roots, normalized);
}

OrthoPoly constant_orthonormal(const WeightSpec& spec, double mass) {
    if (!(mass > 0.0)) throw Error(ErrorKind::DomainError, "mass must be positive");
    return finish(spec, RealPolynomial::constant(1.0 / std::sqrt(mass)), std::nullopt);
}

double kernel_sum(const std::vector<OrthoPoly>& polys, double t, double u) {
    double s = 0.0;
    for (size_t j = 0; j < polys.size(); ++j) {
        if (polys[j].degree != static_cast<int>(j))
            throw Error(ErrorKind::InvalidSpec, "kernel_sum needs degrees 0..k in order");
        s += polys[j](t) * polys[j](u);
    }
    return s;
}

RealPolynomial kernel_polynomial(const OrthoPoly& pk, const OrthoPoly& pk1, double u) {
    if (pk1.degree != pk.degree + 1)
        throw Error(ErrorKind::InvalidSpec, "Christoffel-Darboux needs degrees k and k+1");
    RealPolynomial num = pk1.poly * pk(u) - pk.poly * pk1(u);
    return num.divide_linear(u) * (pk.leading_coeff / pk1.leading_coeff);
}

double kernel_christoffel_darboux(const OrthoPoly& pk, const OrthoPoly& pk1, double t, double u) {
    return kernel_polynomial(pk, pk1, u)(t);
}

double leading_ratio_check(const WeightSpec& spec) {
    if (spec.family != Family::CosPlusCosh || spec.n % 2 == 0 || spec.m % 2 == 0)
        throw Error(ErrorKind::ParityError, "leading ratio check needs odd n, m and CosPlusCosh");
    WeightSpec w = spec;
    w.measure = MeasureFactor::InvSqrtBoth;
    OrthoPoly pk = explicit_family(w);
    OrthoPoly pk1 = szego_orthonormal(build_szego_factor(w), pk.degree + 1, MeasureFactor::InvSqrtBoth);
    return pk1.leading_coeff / pk.leading_coeff - 4.0 / (1.0 + spec.a);
}

}  // namespace bsz

#include "bszego/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "bszego/error.hpp"

namespace bsz {

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(0.0);
}

RealPolynomial RealPolynomial::constant(double c) { return RealPolynomial({c}); }

RealPolynomial RealPolynomial::monomial(int power, double c) {
    std::vector<double> v(power + 1, 0.0);
    v[power] = c;
    return RealPolynomial(std::move(v));
}

RealPolynomial RealPolynomial::from_roots(const std::vector<double>& roots, double lead) {
    RealPolynomial p = constant(lead);
    for (double r : roots) p = p * RealPolynomial({-r, 1.0});
    return p;
}

double RealPolynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double c : c_) m = std::max(m, std::abs(c));
    return m;
}

double RealPolynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Complex RealPolynomial::operator()(Complex z) const {
    Complex acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

RealPolynomial RealPolynomial::derivative() const {
    if (degree() == 0) return constant(0.0);
    std::vector<double> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<double>(i);
    return RealPolynomial(std::move(d));
}

RealPolynomial RealPolynomial::divide_linear(double r, double* remainder) const {
    int n = degree();
    if (n == 0) {
        if (remainder) *remainder = c_[0];
        return constant(0.0);
    }
    std::vector<double> q(n);
    double acc = c_[n];
    for (int i = n - 1; i >= 0; --i) {
        q[i] = acc;
        acc = c_[i] + acc * r;
    }
    if (remainder) *remainder = acc;
    return RealPolynomial(std::move(q));
}

RealPolynomial RealPolynomial::trimmed(double tol) const {
    double cut = tol * max_abs_coeff();
    std::vector<double> v = c_;
    while (v.size() > 1 && std::abs(v.back()) <= cut) v.pop_back();
    return RealPolynomial(std::move(v));
}

RealPolynomial RealPolynomial::operator+(const RealPolynomial& o) const {
    std::vector<double> v(std::max(c_.size(), o.c_.size()), 0.0);
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return RealPolynomial(std::move(v));
}

RealPolynomial RealPolynomial::operator-(const RealPolynomial& o) const { return *this + o * -1.0; }

RealPolynomial RealPolynomial::operator*(const RealPolynomial& o) const {
    std::vector<double> v(c_.size() + o.c_.size() - 1, 0.0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return RealPolynomial(std::move(v));
}

RealPolynomial RealPolynomial::operator*(double s) const {
    std::vector<double> v = c_;
    for (double& c : v) c *= s;
    return RealPolynomial(std::move(v));
}

template <class T>
static T cheb_rec(int n, T x, T first) {
    if (n < 0) throw Error(ErrorKind::DomainError, "negative Chebyshev index");
    if (n == 0) return T(1.0);
    T prev = T(1.0), cur = first;
    for (int k = 1; k < n; ++k) {
        T next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double cheb_T(int n, double x) {
    if (n >= 0 && std::abs(x) <= 1.0) return std::cos(n * std::acos(x));
    return cheb_rec(n, x, x);
}
double cheb_U(int n, double x) { return cheb_rec(n, x, 2.0 * x); }
Complex cheb_T(int n, Complex z) { return cheb_rec(n, z, z); }
Complex cheb_U(int n, Complex z) { return cheb_rec(n, z, 2.0 * z); }

std::vector<double> chebyshev_coefficients(const std::function<double(double)>& g, int N) {
    const double pi = std::numbers::pi;
    std::vector<double> f(N), c(N, 0.0);
    for (int j = 0; j < N; ++j) f[j] = g(std::cos((j + 0.5) * pi / N));
    for (int k = 0; k < N; ++k) {
        double s = 0.0;
        for (int j = 0; j < N; ++j) s += f[j] * std::cos(k * (j + 0.5) * pi / N);
        c[k] = (k == 0 ? 1.0 : 2.0) * s / N;
    }
    return c;
}

RealPolynomial chebyshev_to_monomial(const std::vector<double>& c, double lo, double hi) {
    RealPolynomial x({-(lo + hi) / (hi - lo), 2.0 / (hi - lo)});
    RealPolynomial prev = RealPolynomial::constant(1.0), cur = x;
    RealPolynomial out = RealPolynomial::constant(c.empty() ? 0.0 : c[0]);
    for (size_t k = 1; k < c.size(); ++k) {
        out = out + cur * c[k];
        RealPolynomial next = x * cur * 2.0 - prev;
        prev = cur;
        cur = next;
    }
    return out;
}

RealPolynomial interpolate_on_interval(const std::function<double(double)>& g, double lo,
                                       double hi, int degree, double tail_tol) {
    int N = degree + 4;
    auto c = chebyshev_coefficients(
        [&](double x) { return g(0.5 * (lo + hi) + 0.5 * (hi - lo) * x); }, N);
    double big = 0.0, tail = 0.0;
    for (int k = 0; k < N; ++k) {
        big = std::max(big, std::abs(c[k]));
        if (k > degree) tail = std::max(tail, std::abs(c[k]));
    }
    if (tail > tail_tol * big)
        throw Error(ErrorKind::DegreeExceeded, "interpolant has degree above " + std::to_string(degree));
    c.resize(degree + 1);
    return chebyshev_to_monomial(c, lo, hi);
}

namespace {

template <class R>
RealPolynomial from_circle_samples(const std::vector<std::complex<R>>& values, int degree) {
    using std::abs;
    const int N = static_cast<int>(values.size());
    if (N <= degree || degree < 0)
        throw Error(ErrorKind::DomainError, "need more than `degree` samples");
    R vmax = 0;
    for (auto& v : values) vmax = std::max(vmax, abs(v));
    for (int k = 0; k < N; ++k) {
        auto mirror = std::conj(values[(N - k) % N]);
        if (abs(values[k] - mirror) > R(1e-9) * vmax)
            throw Error(ErrorKind::SymmetryViolation, "samples are not conjugate symmetric");
    }
    std::vector<std::complex<R>> tw(N);
    for (int j = 0; j < N; ++j) tw[j] = std::polar(R(1), -2 * std::numbers::pi_v<R> * j / N);
    std::vector<double> c(degree + 1);
    for (int j = 0; j <= degree; ++j) {
        std::complex<R> s = 0;
        for (int k = 0; k < N; ++k) s += values[k] * tw[(static_cast<long>(j) * k) % N];
        s /= static_cast<R>(N);
        if (abs(s.imag()) > R(1e-9) * std::max(vmax, R(1e-300)))
            throw Error(ErrorKind::SymmetryViolation, "imaginary coefficient residue");
        c[j] = static_cast<double>(s.real());
    }
    return RealPolynomial(std::move(c));
}

}  // namespace

RealPolynomial poly_from_circle_samples(const std::vector<Complex>& values, int degree) {
    return from_circle_samples(values, degree);
}

RealPolynomial poly_from_circle_samples(const std::vector<std::complex<long double>>& values,
                                        int degree) {
    return from_circle_samples(values, degree);
}

std::vector<Complex> poly_roots(const RealPolynomial& p0) {
    using LC = std::complex<long double>;
    RealPolynomial p = p0.trimmed();
    std::vector<Complex> roots;
    std::vector<double> c0 = p.coeffs();
    size_t zeros = 0;
    while (zeros + 1 < c0.size() && c0[zeros] == 0.0) ++zeros;
    for (size_t i = 0; i < zeros; ++i) roots.emplace_back(0.0, 0.0);
    c0.erase(c0.begin(), c0.begin() + zeros);
    const int d = static_cast<int>(c0.size()) - 1;
    if (d <= 0) return roots;
    if (d == 1) {
        roots.emplace_back(-c0[0] / c0[1], 0.0);
        return roots;
    }

    // iterate in extended precision on the exact double coefficients
    std::vector<long double> c(c0.begin(), c0.end());
    const long double lead = c.back();
    for (long double& v : c) v /= lead;
    auto eval = [&](LC z, LC& dp) {
        LC pv = c[d];
        dp = 0.0L;
        for (int i = d - 1; i >= 0; --i) {
            dp = dp * z + pv;
            pv = pv * z + c[i];
        }
        return pv;
    };

    // start from the companion-matrix eigenvalues
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -static_cast<double>(c[i]);
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    std::vector<LC> z(d);
    if (es.info() == Eigen::Success) {
        for (int k = 0; k < d; ++k) z[k] = LC(es.eigenvalues()[k].real(), es.eigenvalues()[k].imag());
    } else {
        const long double r0 = std::pow(std::abs(c[0]), 1.0L / d);
        for (int k = 0; k < d; ++k)
            z[k] = std::polar(r0, 2.0L * std::numbers::pi_v<long double> * k / d + 0.4L);
    }
    // Aberth needs distinct starting points
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < k; ++j)
            if (z[k] == z[j]) z[k] += LC(1e-10L * (1 + std::abs(z[k])), 1e-10L * (k + 1));

    const long double tol = 1e-17L;
    std::vector<char> conv(d, 0);
    std::vector<long double> last(d, std::numeric_limits<long double>::infinity());
    int open = d;
    for (int it = 0; it < 500 && open > 0; ++it) {
        for (int k = 0; k < d; ++k) {
            if (conv[k]) continue;
            LC dp;
            LC pv = eval(z[k], dp);
            if (pv == LC(0.0L)) {
                conv[k] = 1;
                --open;
                continue;
            }
            LC ratio = pv / dp;
            LC s = 0.0L;
            for (int j = 0; j < d; ++j)
                if (j != k) s += 1.0L / (z[k] - z[j]);
            LC w = ratio / (1.0L - ratio * s);
            z[k] -= w;
            const long double step = std::abs(w), mag = std::abs(z[k]);
            // stop at the noise floor: small steps that no longer shrink
            const bool stalled = step <= 1e-6L * mag && step >= 0.5L * last[k];
            last[k] = step;
            if (step <= tol * mag || stalled) {
                conv[k] = 1;
                --open;
            }
        }
    }
    double cmax = 0.0;
    for (double v : c0) cmax = std::max(cmax, std::abs(v / c0.back()));
    for (int k = 0; k < d; ++k) {
        LC dp;
        long double res = std::abs(eval(z[k], dp));
        double scale = cmax * std::pow(std::max(1.0, static_cast<double>(std::abs(z[k]))), d);
        if (!std::isfinite(static_cast<double>(std::abs(z[k]))) || res > 1e-8L * scale)
            throw Error(ErrorKind::NonConvergence, "Aberth-Ehrlich iteration did not converge");
        roots.emplace_back(static_cast<double>(z[k].real()), static_cast<double>(z[k].imag()));
    }
    return roots;
}

}  // namespace bsz

#include "bszego/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bszego/error.hpp"

namespace bsz::oracle {

namespace {

constexpr int kMaxPanels = 20000;

struct Panel {
    double lo, hi, value, err, l1;
    bool operator<(const Panel& o) const { return err < o.err; }
};

template <class F>
Panel gk15(const F& f, double lo, double hi) {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    static const auto& kx = gauss_kronrod<double, 15>::abscissa();
    static const auto& kw = gauss_kronrod<double, 15>::weights();
    static const auto& gw = gauss<double, 7>::weights();

    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double fc = f(mid);
    double k = kw[0] * fc, g = gw[0] * fc, l1 = kw[0] * std::abs(fc);
    for (size_t i = 1; i < kx.size(); ++i) {
        double f1 = f(mid - half * kx[i]), f2 = f(mid + half * kx[i]);
        k += kw[i] * (f1 + f2);
        l1 += kw[i] * (std::abs(f1) + std::abs(f2));
        if (i % 2 == 0) g += gw[i / 2] * (f1 + f2);
    }
    return {lo, hi, k * half, std::abs(k - g) * half, l1 * std::abs(half)};
}

// Global adaptive bisection on the panel with the largest error.
template <class F>
IntegralResult adaptive(const F& f, double lo, double hi, double tol, double* l1_out = nullptr) {
    std::priority_queue<Panel> heap;
    Panel first = gk15(f, lo, hi);
    heap.push(first);
    double value = first.value, err = first.err, l1 = first.l1;
    const double eps = std::numeric_limits<double>::epsilon();
    int panels = 1;
    auto done = [&] { return err <= tol * (1.0 + std::abs(value)) || err <= 50.0 * eps * l1; };
    while (!done()) {
        if (panels >= kMaxPanels || !std::isfinite(value)) {
            throw Error(ErrorKind::NoConvergence,
                        "adaptive quadrature exhausted its panel budget", value);
        }
        Panel p = heap.top();
        heap.pop();
        double mid = 0.5 * (p.lo + p.hi);
        Panel left = gk15(f, p.lo, mid), right = gk15(f, mid, p.hi);
        value += left.value + right.value - p.value;
        err += left.err + right.err - p.err;
        l1 += left.l1 + right.l1 - p.l1;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    // re-sum in panel order so the result does not depend on update history
    std::vector<Panel> all;
    all.reserve(heap.size());
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
    value = err = l1 = 0.0;
    for (auto& p : all) {
        value += p.value;
        err += p.err;
        l1 += p.l1;
    }
    if (l1_out) *l1_out = l1;
    return {value, err};
}

// int_0^inf f over doubling panels until two consecutive panels are negligible.
template <class F>
IntegralResult half_line(const F& f, double tol) {
    IntegralResult total;
    double lo = 0.0, width = 1.0;
    int quiet = 0;
    while (quiet < 2) {
        if (lo > 1e9) throw Error(ErrorKind::NoConvergence, "tail does not decay", total.value);
        double l1 = 0.0;
        IntegralResult r = adaptive(f, lo, lo + width, tol, &l1);
        total.value += r.value;
        total.err_est += r.err_est;
        quiet = (l1 < 0.1 * tol * (1.0 + std::abs(total.value))) ? quiet + 1 : 0;
        lo += width;
        width *= 2.0;
    }
    return total;
}

}  // namespace

IntegrandSpec IntegrandSpec::theta(std::function<double(double)> f, double a) {
    IntegrandSpec s;
    s.evaluator = std::move(f);
    s.kind = IntervalKind::ThetaSubstituted;
    s.a = a;
    return s;
}

IntegrandSpec IntegrandSpec::finite(std::function<double(double)> f, double lo, double hi) {
    IntegrandSpec s;
    s.evaluator = std::move(f);
    s.kind = IntervalKind::FiniteDirect;
    s.lo = lo;
    s.hi = hi;
    return s;
}

IntegrandSpec IntegrandSpec::exp_tail(std::function<double(double)> f) {
    IntegrandSpec s;
    s.evaluator = std::move(f);
    s.kind = IntervalKind::RealLineExpTail;
    return s;
}

IntegrandSpec IntegrandSpec::rational(std::function<double(double)> f) {
    IntegrandSpec s;
    s.evaluator = std::move(f);
    s.kind = IntervalKind::RealLineRational;
    return s;
}

IntegrandSpec& IntegrandSpec::guard(double center, std::function<double(double)> series,
                                    double radius) {
    guards.push_back({center, radius, std::move(series)});
    return *this;
}

double IntegrandSpec::operator()(double x) const {
    for (const auto& g : guards)
        if (std::abs(x - g.center) < g.radius) return g.series(x);
    return evaluator(x);
}

IntegralResult integrate(const IntegrandSpec& spec, double tol) {
    if (!(tol >= 1e-12)) throw Error(ErrorKind::DomainError, "oracle tolerance below 1e-12");
    const double pi = std::numbers::pi;
    switch (spec.kind) {
        case IntervalKind::ThetaSubstituted: {
            const double a = spec.a;
            auto g = [&](double th) { return spec(0.5 * ((1.0 - a) + (1.0 + a) * std::cos(th))); };
            return adaptive(g, 0.0, pi, tol);
        }
        case IntervalKind::FiniteDirect:
            return adaptive([&](double x) { return spec(x); }, spec.lo, spec.hi, tol);
        case IntervalKind::RealLineExpTail: {
            IntegralResult r = half_line([&](double x) { return spec(x); }, tol);
            IntegralResult l = half_line([&](double x) { return spec(-x); }, tol);
            return {r.value + l.value, r.err_est + l.err_est};
        }
        case IntervalKind::RealLineRational: {
            auto g = [&](double s) {
                double d = 1.0 - s * s;
                double x = s / d;
                double w = (1.0 + s * s) / (d * d);
                return (spec(x) + spec(-x)) * w;
            };
            return adaptive(g, 0.0, 1.0, tol);
        }
    }
    throw Error(ErrorKind::InvalidSpec, "unknown interval kind");
}

Complex fourier_coeff(const std::function<double(double)>& g, int harmonic, FourierKind kind) {
    if (harmonic < 0) throw Error(ErrorKind::DomainError, "negative harmonic");
    constexpr int N = 4096;
    const double h = 2.0 * std::numbers::pi / N;
    double c = 0.0, s = 0.0;
    for (int j = 0; j < N; ++j) {
        double th = j * h;
        double v = g(th);
        // (harmonic * j) mod N keeps the phase exact
        double ph = h * static_cast<double>((static_cast<long>(harmonic) * j) % N);
        c += v * std::cos(ph);
        s += v * std::sin(ph);
    }
    switch (kind) {
        case FourierKind::Cos: return harmonic == 0 ? c / N : 2.0 * c / N;
        case FourierKind::Sin: return 2.0 * s / N;
        case FourierKind::Exp: return Complex(c / N, -s / N);
    }
    return {};
}

double improper_integral(const std::function<double(double)>& f, Decay decay, double tol) {
    IntegrandSpec s = decay == Decay::Exponential ? IntegrandSpec::exp_tail(f)
                                                  : IntegrandSpec::rational(f);
    return integrate(s, tol).value;
}

}  // namespace bsz::oracle

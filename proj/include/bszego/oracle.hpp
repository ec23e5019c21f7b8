#pragma once

#include <functional>
#include <vector>

#include "bszego/poly.hpp"

namespace bsz::oracle {

enum class IntervalKind {
    // int_{-a}^{1} f(t) dt / sqrt((1-t)(a+t)), integrated in theta with
    // t = ((1-a) + (1+a) cos theta) / 2
    ThetaSubstituted,
    FiniteDirect,
    // int over R of an integrand decaying at least like exp(-c sqrt|x|)
    RealLineExpTail,
    // int over R of an integrand decaying like |x|^-2, via x = s / (1 - s^2)
    RealLineRational,
};

struct SingularityGuard {
    double center = 0.0;
    double radius = 1e-6;
    std::function<double(double)> series;
};

struct IntegrandSpec {
    std::function<double(double)> evaluator;
    IntervalKind kind = IntervalKind::FiniteDirect;
    double a = 1.0;
    double lo = 0.0;
    double hi = 1.0;
    std::vector<SingularityGuard> guards;

    static IntegrandSpec theta(std::function<double(double)> f, double a);
    static IntegrandSpec finite(std::function<double(double)> f, double lo, double hi);
    static IntegrandSpec exp_tail(std::function<double(double)> f);
    static IntegrandSpec rational(std::function<double(double)> f);

    IntegrandSpec& guard(double center, std::function<double(double)> series,
                         double radius = 1e-6);
    // evaluator with guards applied
    double operator()(double x) const;
};

struct IntegralResult {
    double value = 0.0;
    double err_est = 0.0;
};

IntegralResult integrate(const IntegrandSpec& spec, double tol = 1e-12);

enum class FourierKind { Cos, Sin, Exp };

// Coefficient of g over [0, 2 pi] by the periodic trapezoid rule on 4096 points:
// Cos/Sin give (1/pi) int g cos/sin(k theta), with the k = 0 Cos coefficient
// being the mean; Exp gives (1/2pi) int g exp(-i k theta).
Complex fourier_coeff(const std::function<double(double)>& g, int harmonic, FourierKind kind);

enum class Decay { Exponential, RationalOrder2 };

double improper_integral(const std::function<double(double)>& f, Decay decay, double tol = 1e-12);

}  // namespace bsz::oracle

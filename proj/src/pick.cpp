#include "bszego/pick.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "bszego/error.hpp"
#include "bszego/oracle.hpp"
#include "bszego/quadrature.hpp"
#include "bszego/weights.hpp"

namespace bsz {

namespace {

const double kPi = std::numbers::pi;

WeightSpec example_spec(int n, int m) { return WeightSpec::make(n, m, 1.0, Family::CosPlusCosh); }

double base_moment(const WeightSpec& spec, const std::function<double(double)>& p) {
    auto f = [&](double t) { return p(t) * weight_theta_density(spec, t); };
    return oracle::integrate(oracle::IntegrandSpec::theta(f, spec.a), 1e-12).value;
}

Complex denominator(const MatchedMeasure& meas, double x, Complex phi) {
    const double pk = meas.p_k(x), pk1 = meas.p_km1(x);
    return meas.form == MeasureForm::Measure2 ? phi * pk - pk1 : pk + phi * pk1;
}

}  // namespace

PickFunction PickFunction::make(double beta, Complex gamma, std::vector<PickTerm> terms) {
    if (!(beta >= 0.0)) throw Error(ErrorKind::InvalidSpec, "beta must be >= 0");
    if (!(gamma.imag() > 0.0)) throw Error(ErrorKind::InvalidSpec, "Im gamma must be > 0");
    for (const auto& t : terms) {
        if (!(t.c >= 0.0)) throw Error(ErrorKind::InvalidSpec, "pole weights must be >= 0");
        if (!(t.z.imag() < 0.0)) throw Error(ErrorKind::InvalidSpec, "poles must lie in Im z < 0");
    }
    PickFunction p;
    p.beta = beta;
    p.gamma = gamma;
    p.terms = std::move(terms);
    return p;
}

Complex pick_eval(const PickFunction& phi, double x) {
    Complex v = phi.beta * x + phi.gamma;
    for (const auto& t : phi.terms) v -= t.c / (x - t.z);
    return v;
}

const char* measure_form_name(MeasureForm f) {
    return f == MeasureForm::Measure2 ? "measure2" : "measure5";
}

MatchedMeasure example_measure(int n, int m, const PickFunction& phi, MeasureForm form) {
    if (n % 2 == 0 || m % 2 == 0) throw Error(ErrorKind::ParityError, "example measure needs odd n and m");
    const WeightSpec spec = example_spec(n, m);
    MatchedMeasure meas;
    meas.phi = phi;
    meas.k = (n + m) / 2;
    meas.form = form;
    meas.p_k = explicit_family(spec);
    if (meas.k == 1) {
        double mass = 0.0;
        for (double w : rule_cos_plus_cosh(n, m, 1.0).weights) mass += w;
        meas.p_km1 = constant_orthonormal(spec, mass);
    } else {
        meas.p_km1 = szego_orthonormal(build_szego_factor(spec), meas.k - 1, MeasureFactor::InvSqrtBoth);
    }
    meas.kappa_ratio = meas.p_km1.leading_coeff / meas.p_k.leading_coeff;
    return meas;
}

double density(const MatchedMeasure& meas, double x) {
    const Complex phi = pick_eval(meas.phi, x);
    return phi.imag() / kPi / std::norm(denominator(meas, x, phi));
}

double MomentPair::rel_error() const { return std::abs(lhs - rhs) / scale; }

MomentPair moment_match_check(const MatchedMeasure& meas, int j) {
    if (j < 0 || j > 2 * meas.k - 2)
        throw Error(ErrorKind::RangeError, "moment index must lie in 0..2k-2");
    const WeightSpec spec = example_spec(meas.p_k.weight.n, meas.p_k.weight.m);
    MomentPair out;
    out.lhs = oracle::integrate(oracle::IntegrandSpec::rational(
                                    [&](double x) { return std::pow(x, j) * density(meas, x); }),
                                1e-12)
                  .value;
    out.rhs = meas.kappa_ratio * base_moment(spec, [j](double t) { return std::pow(t, j); });
    out.scale = meas.kappa_ratio * base_moment(spec, [j](double t) { return std::pow(std::abs(t), j); });
    return out;
}

double boundary_deviation(const MatchedMeasure& meas) {
    const int j = 2 * meas.k - 1;
    const WeightSpec spec = example_spec(meas.p_k.weight.n, meas.p_k.weight.m);
    double lhs = oracle::integrate(oracle::IntegrandSpec::rational(
                                       [&](double x) { return std::pow(x, j) * density(meas, x); }),
                                   1e-12)
                     .value;
    double rhs = meas.kappa_ratio * base_moment(spec, [j](double t) { return std::pow(t, j); });
    double scale = meas.kappa_ratio * base_moment(spec, [j](double t) { return std::pow(std::abs(t), j); });
    return std::abs(lhs - rhs) / scale;
}

double SharpnessSample::fraction() const { return samples == 0 ? 0.0 : static_cast<double>(deviating) / samples; }

SharpnessSample boundary_sharpness(int n, int m, MeasureForm form, int samples, std::uint64_t seed,
                                   double threshold) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.2, 3.0), cw(0.1, 2.0);
    std::uniform_int_distribution<int> poles(0, 2);
    SharpnessSample out;
    for (int s = 0; s < samples; ++s) {
        Complex gamma(re(rng), im(rng));
        std::vector<PickTerm> terms(poles(rng));
        for (auto& t : terms) {
            t.c = cw(rng);
            t.z = Complex(re(rng), -im(rng));
        }
        MatchedMeasure meas = example_measure(n, m, PickFunction::make(0.0, gamma, terms), form);
        ++out.samples;
        if (boundary_deviation(meas) > threshold) ++out.deviating;
    }
    return out;
}

double integrals_form_residual(int n, int m, const PickFunction& phi, double x) {
    if (!(x >= -1.0 && x <= 1.0)) throw Error(ErrorKind::DomainError, "x must lie in [-1, 1]");
    if (n + m < 4)
        throw Error(ErrorKind::DegreeThreshold, "the xi, eta form of p_{k-1} is not orthonormal for k = 1");
    const WeightSpec spec = example_spec(n, m);
    MatchedMeasure meas = example_measure(n, m, phi, MeasureForm::Measure2);
    const auto [xi, eta] = xi_eta_eval(spec, x);
    const Complex f = pick_eval(phi, x);
    double lhs = std::norm(std::sqrt(1.0 - x * x) * xi - (f - x) * eta);
    double rhs = 0.25 * kPi * std::norm(denominator(meas, x, f));
    return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
}

}  // namespace bsz

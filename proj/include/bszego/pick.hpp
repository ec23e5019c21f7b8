#pragma once

#include <cstdint>
#include <vector>

#include "bszego/orthopoly.hpp"
#include "bszego/poly.hpp"

namespace bsz {

struct PickTerm {
    double c = 0.0;  // >= 0
    Complex z;       // Im z < 0
};

// phi(x) = beta x + gamma - sum c_r / (x - z_r)
struct PickFunction {
    double beta = 0.0;
    Complex gamma{0.0, 1.0};
    std::vector<PickTerm> terms;

    // Throws InvalidSpec unless beta >= 0, Im gamma > 0, c_r >= 0, Im z_r < 0.
    static PickFunction make(double beta, Complex gamma, std::vector<PickTerm> terms = {});
};

Complex pick_eval(const PickFunction& phi, double x);

enum class MeasureForm { Measure2, Measure5 };

const char* measure_form_name(MeasureForm f);

struct MatchedMeasure {
    PickFunction phi;
    int k = 1;
    OrthoPoly p_k;
    OrthoPoly p_km1;
    MeasureForm form = MeasureForm::Measure2;
    double kappa_ratio = 1.0;  // kappa_{k-1} / kappa_k
};

// Pair (p_k, p_{k-1}) for the a = 1 cos + cosh weight with odd n, m and
// k = (n + m) / 2.
MatchedMeasure example_measure(int n, int m, const PickFunction& phi, MeasureForm form);

// Im phi / pi over |phi p_k - p_{k-1}|^2 (Measure2) or |p_k + phi p_{k-1}|^2 (Measure5).
double density(const MatchedMeasure& meas, double x);

struct MomentPair {
    double lhs = 0.0;  // int_R x^j density dx
    double rhs = 0.0;  // kappa ratio times the j-th moment of the base measure
    double scale = 1.0;  // kappa ratio times int |t|^j dmu
    double rel_error() const;
};

// j <= 2k - 2, RangeError otherwise.
MomentPair moment_match_check(const MatchedMeasure& meas, int j);

// |moment 2k-1 mismatch| / (kappa ratio int |t|^{2k-1} dmu); the real-line side
// is a symmetric principal value.
double boundary_deviation(const MatchedMeasure& meas);

struct SharpnessSample {
    int samples = 0;
    int deviating = 0;  // boundary deviation above the threshold
    double fraction() const;
};

// Random phi with beta = 0, gamma in the upper half-plane and up to two poles.
SharpnessSample boundary_sharpness(int n, int m, MeasureForm form, int samples, std::uint64_t seed,
                                   double threshold = 1e-4);

// |sqrt(1-x^2) xi - (phi - x) eta|^2 against (pi/4) |phi p_k - p_{k-1}|^2 on [-1, 1],
// relative difference. DegreeThreshold for k = 1, where the xi, eta form gives the
// unnormalised constant 2 / sqrt(pi) in place of p_0.
double integrals_form_residual(int n, int m, const PickFunction& phi, double x);

}  // namespace bsz

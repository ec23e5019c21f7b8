#pragma once

#include <optional>
#include <vector>

#include "bszego/poly.hpp"
#include "bszego/weights.hpp"

namespace bsz {

struct OrthoPoly {
    int degree = 0;
    RealPolynomial poly;
    double leading_coeff = 1.0;
    WeightSpec weight;
    std::optional<std::vector<double>> known_roots;
    // false for the product and mixed families, whose closed forms carry no
    // normalising constant
    bool normalized = true;

    double operator()(double t) const { return poly(t); }
};

// Orthonormal polynomial of degree k for the factor's weight with the given
// measure factor. Throws DegreeThreshold below the admissible degree.
OrthoPoly szego_orthonormal(const SzegoFactor& factor, int k, MeasureFactor mf);

// Closed-form polynomial with known roots; ParityError for combinations
// without one.
OrthoPoly explicit_family(const WeightSpec& spec);

// Degree-0 orthonormal polynomial 1/sqrt(mass).
OrthoPoly constant_orthonormal(const WeightSpec& spec, double mass);

// sum_{j=0}^{k} p_j(t) p_j(u) over a list with degrees 0..k
double kernel_sum(const std::vector<OrthoPoly>& polys, double t, double u);

// K_k(., u) from the pair (p_k, p_{k+1}), by exact division of the
// Christoffel-Darboux numerator by (t - u); also valid at t = u.
RealPolynomial kernel_polynomial(const OrthoPoly& pk, const OrthoPoly& pk1, double u);
double kernel_christoffel_darboux(const OrthoPoly& pk, const OrthoPoly& pk1, double t, double u);

// kappa_{k+1} / kappa_k - 4 / (1 + a) for odd n, m, with k = (n + m) / 2
double leading_ratio_check(const WeightSpec& spec);

}  // namespace bsz

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bdet {

// One detection problem: noise level, smoothness, Besov radius, separation
// radius and target size. Validated on construction.
struct ProblemSpec {
    double eps;   // noise level, > 0
    double r;     // smoothness exponent, > 0
    double p0;    // Besov radius, > 0
    double rho;   // separation radius, > 0, < p0
    double alpha; // type I error target, in (0,1)

    ProblemSpec(double eps_, double r_, double p0_, double rho_, double alpha_);
};

// Finitely supported coefficient sequence theta_1..theta_J; entries beyond
// the horizon are identically zero.
struct CoefficientVector {
    std::vector<double> coeffs;

    CoefficientVector() = default;
    explicit CoefficientVector(std::vector<double> c) : coeffs(std::move(c)) {}

    std::size_t horizon() const { return coeffs.size(); }
    double at(std::size_t j) const { return (j >= 1 && j <= coeffs.size()) ? coeffs[j - 1] : 0.0; }
    double squared_norm() const;
};

struct Observation {
    CoefficientVector y;
    double eps;
};

// y_j = theta_j + eps * xi_j with iid standard normal xi keyed by
// (seed, trial, coordinate); bit-identical replay for equal inputs.
// horizon = 0 samples at theta's own horizon.
Observation sample_observation(const CoefficientVector& theta, double eps,
                               std::uint64_t seed, std::uint64_t trial,
                               std::size_t horizon = 0);

} // namespace bdet

#pragma once

#include <cstdint>
#include <vector>

#include "bdet/besov.hpp"
#include "bdet/extremal.hpp"
#include "bdet/model.hpp"

namespace bdet {

// Centered independent Gaussian prior with per-coordinate variances.
struct GaussianPrior {
    std::vector<double> variances;

    std::size_t horizon() const { return variances.size(); }
};

GaussianPrior prior_from_weights(const ExtremalWeights& w); // variances kappa_j^2
GaussianPrior prior_from_delta(const DeltaWeights& dw);     // variances kappa_j^2(delta)

// Independent centered Gaussians with the given variances; deterministic in
// (seed, trial) and drawn on a stream disjoint from observation noise.
CoefficientVector sample_prior(const GaussianPrior& prior, std::uint64_t seed,
                               std::uint64_t trial);

// Exact log marginal-likelihood ratio of N(0, eps^2 + kappa_j^2) against
// N(0, eps^2), per coordinate:
//   logBF = 1/2 sum [ y_j^2 kappa_j^2 / (eps^2 (eps^2 + kappa_j^2))
//                     - log(1 + kappa_j^2/eps^2) ].
double log_bayes_factor(const GaussianPrior& prior, double eps, const CoefficientVector& y);

// The additive constant linking the Bayes factor to the gamma statistic:
// logBF = T/2 - 0.5 sum log(1 + kappa_j^2/eps^2).
double log_bayes_constant(const GaussianPrior& prior, double eps);

struct PriorMoments {
    double mean;            // sum of variances
    double variance;        // 2 sum of squared variances
    double chebyshev_lower; // lower bound on P(||eta||^2 > rho), 0 when mean <= rho
};
PriorMoments prior_norm_moments(const GaussianPrior& prior, double rho);

struct ConditionalDraw {
    CoefficientVector theta;
    std::uint64_t attempts; // attempts consumed including the accepted one
};

// Rejection sampling from the prior conditioned on membership of q. Throws
// numeric_error reporting the observed acceptance rate when max_attempts is
// exhausted. Attempt k draws on stream kPrior + k.
ConditionalDraw sample_conditional(const GaussianPrior& prior, const AlternativeSet& q,
                                   std::uint64_t seed, std::uint64_t trial = 0,
                                   std::uint64_t max_attempts = 1000);

} // namespace bdet

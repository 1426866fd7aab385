#include "bdet/priors.hpp"

#include <cmath>
#include <string>

#include "bdet/errors.hpp"
#include "bdet/rng.hpp"

namespace bdet {

GaussianPrior prior_from_weights(const ExtremalWeights& w)
{
    return GaussianPrior{w.weights};
}

GaussianPrior prior_from_delta(const DeltaWeights& dw)
{
    return GaussianPrior{dw.weights};
}

namespace {

CoefficientVector draw(const GaussianPrior& prior, std::uint64_t seed, std::uint64_t trial,
                       std::uint64_t stream)
{
    const CounterRng rng(seed, trial, stream);
    CoefficientVector theta;
    theta.coeffs.resize(prior.horizon());
    for (std::size_t j = 1; j <= prior.horizon(); ++j) {
        const double v = prior.variances[j - 1];
        theta.coeffs[j - 1] = (v > 0.0) ? std::sqrt(v) * rng.normal(j) : 0.0;
    }
    return theta;
}

} // namespace

CoefficientVector sample_prior(const GaussianPrior& prior, std::uint64_t seed,
                               std::uint64_t trial)
{
    return draw(prior, seed, trial, CounterRng::kPrior);
}

double log_bayes_factor(const GaussianPrior& prior, double eps, const CoefficientVector& y)
{
    const double e2 = eps * eps;
    double lbf = 0.0;
    const std::size_t n = std::min(prior.horizon(), y.horizon());
    for (std::size_t j = 0; j < n; ++j) {
        const double k2 = prior.variances[j];
        if (k2 <= 0.0)
            continue;
        const double yj = y.coeffs[j];
        lbf += 0.5 * (yj * yj * k2 / (e2 * (e2 + k2)) - std::log1p(k2 / e2));
    }
    return lbf;
}

double log_bayes_constant(const GaussianPrior& prior, double eps)
{
    const double e2 = eps * eps;
    double s = 0.0;
    for (double k2 : prior.variances)
        if (k2 > 0.0)
            s += std::log1p(k2 / e2);
    return 0.5 * s;
}

PriorMoments prior_norm_moments(const GaussianPrior& prior, double rho)
{
    PriorMoments m{0.0, 0.0, 0.0};
    for (double v : prior.variances) {
        m.mean += v;
        m.variance += 2.0 * v * v;
    }
    if (m.mean > rho && m.variance > 0.0) {
        const double gap = m.mean - rho;
        m.chebyshev_lower = std::max(0.0, 1.0 - m.variance / (gap * gap));
    }
    return m;
}

ConditionalDraw sample_conditional(const GaussianPrior& prior, const AlternativeSet& q,
                                   std::uint64_t seed, std::uint64_t trial,
                                   std::uint64_t max_attempts)
{
    for (std::uint64_t k = 0; k < max_attempts; ++k) {
        CoefficientVector theta = draw(prior, seed, trial, CounterRng::kPrior + k);
        if (is_in_q(theta, q))
            return {std::move(theta), k + 1};
    }
    throw numeric_error("sample_conditional: no accepted draw in " +
                        std::to_string(max_attempts) +
                        " attempts (observed acceptance rate < " +
                        std::to_string(1.0 / static_cast<double>(max_attempts)) + ")");
}

} // namespace bdet

#include "bdet/model.hpp"

#include <stdexcept>

#include "bdet/rng.hpp"

namespace bdet {

ProblemSpec::ProblemSpec(double eps_, double r_, double p0_, double rho_, double alpha_)
    : eps(eps_), r(r_), p0(p0_), rho(rho_), alpha(alpha_)
{
    if (!(eps > 0.0))
        throw std::domain_error("ProblemSpec: eps must be > 0");
    if (!(r > 0.0))
        throw std::domain_error("ProblemSpec: r must be > 0");
    if (!(p0 > 0.0))
        throw std::domain_error("ProblemSpec: p0 must be > 0");
    if (!(rho > 0.0))
        throw std::domain_error("ProblemSpec: rho must be > 0");
    if (!(rho < p0))
        throw std::domain_error("ProblemSpec: rho must be < p0, otherwise the alternative set is empty");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("ProblemSpec: alpha must lie in (0,1)");
}

double CoefficientVector::squared_norm() const
{
    double s = 0.0;
    for (double c : coeffs)
        s += c * c;
    return s;
}

Observation sample_observation(const CoefficientVector& theta, double eps,
                               std::uint64_t seed, std::uint64_t trial,
                               std::size_t horizon)
{
    if (!(eps > 0.0))
        throw std::domain_error("sample_observation: eps must be > 0");
    const std::size_t n = (horizon == 0) ? theta.horizon() : horizon;
    const CounterRng rng(seed, trial, CounterRng::kNoise);
    Observation obs;
    obs.eps = eps;
    obs.y.coeffs.resize(n);
    for (std::size_t j = 1; j <= n; ++j)
        obs.y.coeffs[j - 1] = theta.at(j) + eps * rng.normal(j);
    return obs;
}

} // namespace bdet

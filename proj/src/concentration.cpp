#include "bdet/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bdet/rng.hpp"

namespace bdet {

double DiagCovariance::trace() const
{
    double s = 0.0;
    for (double d : diag)
        s += d;
    return s;
}

double DiagCovariance::trace_sq() const
{
    double s = 0.0;
    for (double d : diag)
        s += d * d;
    return s;
}

double DiagCovariance::opnorm() const
{
    double m = 0.0;
    for (double d : diag)
        m = std::max(m, d);
    return m;
}

double hkz_threshold(const DiagCovariance& cov, double t)
{
    if (!(t >= 0.0))
        throw std::domain_error("hkz_threshold: t must be >= 0");
    return cov.trace() + 2.0 * std::sqrt(cov.trace_sq() * t) + 2.0 * cov.opnorm() * t;
}

TailCheck empirical_tail_check(const DiagCovariance& cov, double t,
                               std::uint64_t n_trials, std::uint64_t seed)
{
    if (n_trials < 1000)
        throw std::domain_error("empirical_tail_check: n_trials must be >= 1000");
    const double threshold = hkz_threshold(cov, t);
    std::uint64_t exceed = 0;
    for (std::uint64_t trial = 0; trial < n_trials; ++trial) {
        const CounterRng rng(seed, trial, CounterRng::kNoise);
        double q = 0.0;
        for (std::size_t j = 1; j <= cov.diag.size(); ++j) {
            const double z = rng.normal(j);
            q += cov.diag[j - 1] * z * z;
        }
        if (q > threshold)
            ++exceed;
    }
    TailCheck out;
    out.empirical_rate = static_cast<double>(exceed) / static_cast<double>(n_trials);
    out.bound = std::exp(-t);
    out.sigma3 =
        3.0 * std::sqrt(std::max(out.bound * (1.0 - out.bound), 1e-12) /
                        static_cast<double>(n_trials));
    out.pass = out.empirical_rate <= out.bound + out.sigma3;
    return out;
}

double hkz_t_for_threshold(const DiagCovariance& cov, double limit)
{
    const double m = cov.trace();
    const double s = cov.trace_sq();
    const double L = cov.opnorm();
    if (m >= limit)
        return 0.0;
    if (L <= 0.0)
        return std::numeric_limits<double>::infinity();
    // 2 L x^2 + 2 sqrt(s) x + (m - limit) = 0 for x = sqrt(t), positive root.
    const double x = (-std::sqrt(s) + std::sqrt(s + 2.0 * L * (limit - m))) / (2.0 * L);
    return x * x;
}

ViolationBound besov_violation_bound(const DeltaWeights& dw, const BesovBall& ball,
                                     double delta1)
{
    if (!(delta1 > 0.0 && delta1 < 1.0))
        throw std::domain_error("besov_violation_bound: delta1 must lie in (0,1)");
    const std::size_t n = dw.weights.size();
    ViolationBound out;
    out.per_i.resize(n);

    // Blocks share the suffix structure; per-i work is independent.
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t ii = 1; ii <= static_cast<std::int64_t>(n); ++ii) {
        const std::size_t i = static_cast<std::size_t>(ii);
        const double scale = std::pow(static_cast<double>(i), 2.0 * ball.r);
        double tr = 0.0;
        double tr2 = 0.0;
        double op = 0.0;
        for (std::size_t j = i; j <= n; ++j) {
            const double d = scale * dw.weights[j - 1];
            tr += d;
            tr2 += d * d;
            op = std::max(op, d);
        }
        ViolationTerm term;
        term.i = i;
        term.trace = tr;
        term.trace_sq = tr2;
        term.opnorm = op;
        if (tr >= ball.p0) {
            term.t_star = 0.0;
            term.bound = 1.0;
        } else if (op <= 0.0) {
            term.t_star = std::numeric_limits<double>::infinity();
            term.bound = 0.0;
        } else {
            const double x =
                (-std::sqrt(tr2) + std::sqrt(tr2 + 2.0 * op * (ball.p0 - tr))) / (2.0 * op);
            term.t_star = x * x;
            term.bound = std::exp(-term.t_star);
        }
        out.per_i[i - 1] = term;
    }

    double total = 0.0;
    for (const ViolationTerm& term : out.per_i)
        total += term.bound;
    out.total = std::min(1.0, total);
    return out;
}

} // namespace bdet

#include "bdet/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "bdet/errors.hpp"
#include "bdet/rng.hpp"

namespace bdet::mc {

Experiment Experiment::type1()
{
    Experiment e;
    e.kind = Kind::type1;
    return e;
}

Experiment Experiment::type2(CoefficientVector theta)
{
    Experiment e;
    e.kind = Kind::type2_at;
    e.theta = std::move(theta);
    return e;
}

Experiment Experiment::bayes(GaussianPrior prior, bool conditional,
                             std::optional<AlternativeSet> q)
{
    Experiment e;
    e.kind = Kind::bayes_power;
    e.prior = std::move(prior);
    e.conditional = conditional;
    e.q = std::move(q);
    if (e.conditional && !e.q)
        throw std::invalid_argument("Experiment::bayes: conditional sampling needs q");
    return e;
}

Experiment Experiment::member(GaussianPrior prior, AlternativeSet q)
{
    Experiment e;
    e.kind = Kind::membership;
    e.prior = std::move(prior);
    e.q = q;
    return e;
}

namespace {

const char* kind_name(Kind k)
{
    switch (k) {
    case Kind::type1: return "type1";
    case Kind::type2_at: return "type2_at";
    case Kind::bayes_power: return "bayes_power";
    case Kind::membership: return "membership";
    }
    return "?";
}

// One trial; pure function of (exp, test, spec, seed, trial).
bool trial_event(const Experiment& exp, const TestSpec& test, const ProblemSpec& spec,
                 std::uint64_t seed, std::uint64_t trial)
{
    const std::size_t horizon = test.stat_weights.size();
    switch (exp.kind) {
    case Kind::type1: {
        const CoefficientVector zero;
        const Observation y = sample_observation(zero, spec.eps, seed, trial, horizon);
        return standardize_and_decide(statistic(test, y), test).reject;
    }
    case Kind::type2_at: {
        const Observation y =
            sample_observation(exp.theta, spec.eps, seed, trial,
                               std::max(horizon, exp.theta.horizon()));
        return !standardize_and_decide(statistic(test, y), test).reject;
    }
    case Kind::bayes_power: {
        CoefficientVector theta;
        if (exp.conditional)
            theta = sample_conditional(exp.prior, *exp.q, seed, trial, exp.max_attempts).theta;
        else
            theta = sample_prior(exp.prior, seed, trial);
        const Observation y = sample_observation(theta, spec.eps, seed, trial,
                                                 std::max(horizon, theta.horizon()));
        return !standardize_and_decide(statistic(test, y), test).reject;
    }
    case Kind::membership: {
        const CoefficientVector theta = sample_prior(exp.prior, seed, trial);
        return is_in_q(theta, *exp.q);
    }
    }
    return false;
}

std::string describe(const Experiment& exp, const TestSpec& test, const ProblemSpec& spec,
                     std::uint64_t n_trials, std::uint64_t seed)
{
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s|eps=%.17g|r=%.17g|p0=%.17g|rho=%.17g|alpha=%.17g"
                                    "|family=%d|xa=%.17g|n=%llu|seed=%llu",
                  kind_name(exp.kind), spec.eps, spec.r, spec.p0, spec.rho, spec.alpha,
                  static_cast<int>(test.family), test.x_alpha,
                  static_cast<unsigned long long>(n_trials),
                  static_cast<unsigned long long>(seed));
    return buf;
}

MCReport finish_report(const Experiment& exp, const TestSpec& test, const ProblemSpec& spec,
                       std::uint64_t n_trials, std::uint64_t seed, std::uint64_t count)
{
    MCReport rep;
    rep.n_trials = n_trials;
    rep.rejections = count;
    rep.rate = static_cast<double>(count) / static_cast<double>(n_trials);
    const WilsonInterval ci = wilson_interval(count, n_trials);
    rep.ci_lo = ci.lo;
    rep.ci_hi = ci.hi;
    rep.seed = seed;
    rep.kind = kind_name(exp.kind);
    rep.spec_hash = spec_hash(describe(exp, test, spec, n_trials, seed));
    return rep;
}

} // namespace

MCReport run_serial(const Experiment& exp, const TestSpec& test, const ProblemSpec& spec,
                    std::uint64_t n_trials, std::uint64_t seed)
{
    if (n_trials < 100)
        throw std::domain_error("mc::run: n_trials must be >= 100");
    std::uint64_t count = 0;
    for (std::uint64_t trial = 0; trial < n_trials; ++trial)
        count += trial_event(exp, test, spec, seed, trial) ? 1 : 0;
    return finish_report(exp, test, spec, n_trials, seed, count);
}

MCReport run(const Experiment& exp, const TestSpec& test, const ProblemSpec& spec,
             std::uint64_t n_trials, std::uint64_t seed, RunOptions opt)
{
    if (opt.threads == 1)
        return run_serial(exp, test, spec, n_trials, seed);
    if (n_trials < 100)
        throw std::domain_error("mc::run: n_trials must be >= 100");
    std::uint64_t count = 0;
#if defined(_OPENMP)
    const std::int64_t n = static_cast<std::int64_t>(n_trials);
#pragma omp parallel for schedule(static) reduction(+ : count) \
    num_threads(opt.threads > 0 ? opt.threads : omp_get_max_threads())
    for (std::int64_t trial = 0; trial < n; ++trial)
        count += trial_event(exp, test, spec, seed, static_cast<std::uint64_t>(trial)) ? 1 : 0;
#else
    for (std::uint64_t trial = 0; trial < n_trials; ++trial)
        count += trial_event(exp, test, spec, seed, trial) ? 1 : 0;
#endif
    return finish_report(exp, test, spec, n_trials, seed, count);
}

std::vector<double> null_standardized(const TestSpec& test, const ProblemSpec& spec,
                                      std::uint64_t n, std::uint64_t seed, RunOptions opt)
{
    std::vector<double> out(n);
    const std::size_t horizon = test.stat_weights.size();
    const CoefficientVector zero;
#if defined(_OPENMP)
    const std::int64_t nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) \
    num_threads(opt.threads > 0 ? opt.threads : omp_get_max_threads())
    for (std::int64_t trial = 0; trial < nn; ++trial) {
        const Observation y =
            sample_observation(zero, spec.eps, seed, static_cast<std::uint64_t>(trial), horizon);
        out[static_cast<std::size_t>(trial)] =
            standardize_and_decide(statistic(test, y), test).standardized;
    }
#else
    (void)opt;
    for (std::uint64_t trial = 0; trial < n; ++trial) {
        const Observation y = sample_observation(zero, spec.eps, seed, trial, horizon);
        out[trial] = standardize_and_decide(statistic(test, y), test).standardized;
    }
#endif
    return out;
}

double calibrate_threshold(const TestSpec& test, const ProblemSpec& spec, double alpha,
                           std::uint64_t n_cal, std::uint64_t seed, RunOptions opt)
{
    if (n_cal < 1000)
        throw std::domain_error("calibrate_threshold: n_cal must be >= 1000");
    const double resolvable = std::min(alpha, 1.0 - alpha) * static_cast<double>(n_cal);
    if (resolvable < 1.0)
        throw std::domain_error(
            "calibrate_threshold: alpha below the quantile resolution 1/n_cal of this "
            "calibration sample; increase n_cal");
    std::vector<double> r = null_standardized(test, spec, n_cal, seed, opt);
    std::sort(r.begin(), r.end());
    // Empirical (1-alpha) quantile: smallest order statistic with at most an
    // alpha fraction strictly above it.
    const std::size_t idx = static_cast<std::size_t>(
        std::ceil((1.0 - alpha) * static_cast<double>(n_cal))) - 1;
    return r[std::min(idx, r.size() - 1)];
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t n)
{
    const double z = 1.959963984540054;
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(successes) / nn;
    const double z2n = z * z / nn;
    const double denom = 1.0 + z2n;
    const double mid = (p + 0.5 * z2n) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nn + 0.25 * z2n / nn) / denom;
    WilsonInterval ci{std::max(0.0, mid - half), std::min(1.0, mid + half)};
    if (successes == 0)
        ci.lo = 0.0;
    if (successes == n)
        ci.hi = 1.0;
    return ci;
}

std::string spec_hash(const std::string& descriptor)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : descriptor) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace bdet::mc

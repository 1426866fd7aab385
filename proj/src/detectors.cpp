#include "bdet/detectors.hpp"

#include <cmath>
#include <stdexcept>

#include "bdet/chisq_tail.hpp"
#include "bdet/errors.hpp"

namespace bdet {

std::vector<double> gamma_weights(std::span<const double> kappa_sq, double eps)
{
    const double e2 = eps * eps;
    std::vector<double> g(kappa_sq.size());
    for (std::size_t j = 0; j < kappa_sq.size(); ++j)
        g[j] = kappa_sq[j] / (e2 + kappa_sq[j]);
    return g;
}

namespace {

TestSpec finish(TestSpec t, double null_mean, double null_var, const ProblemSpec& spec,
                Calibration calibration)
{
    t.center = null_mean;
    t.scale = std::sqrt(null_var);
    t.alpha = spec.alpha;
    t.x_alpha = gauss_quantile(spec.alpha);
    t.calibration = calibration;
    return t;
}

} // namespace

TestSpec make_plain_test(const ExtremalWeights& w, const ProblemSpec& spec,
                         Centering centering, Calibration calibration)
{
    TestSpec t;
    t.family = WeightFamily::plain_kappa;
    t.eps = spec.eps;
    const double e4 = std::pow(spec.eps, 4.0);
    t.stat_weights.resize(w.weights.size());
    double sum_k2 = 0.0;
    double sum_k4 = 0.0;
    for (std::size_t j = 0; j < w.weights.size(); ++j) {
        t.stat_weights[j] = w.weights[j] / e4;
        sum_k2 += w.weights[j];
        sum_k4 += w.weights[j] * w.weights[j];
    }
    const double e2 = spec.eps * spec.eps;
    const double null_mean = sum_k2 / e2;
    const double null_var = 2.0 * sum_k4 / e4;
    t = finish(std::move(t), null_mean, null_var, spec, calibration);
    if (centering == Centering::rho)
        t.center = spec.rho / e2;
    return t;
}

TestSpec make_gamma_test(const ExtremalWeights& w, const ProblemSpec& spec,
                         Calibration calibration)
{
    TestSpec t;
    t.family = WeightFamily::gamma;
    t.eps = spec.eps;
    const double e2 = spec.eps * spec.eps;
    const std::vector<double> g = gamma_weights(w.weights, spec.eps);
    t.stat_weights.resize(g.size());
    double sum_g2 = 0.0;
    double sum_g4 = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        t.stat_weights[j] = g[j] / e2;
        sum_g2 += g[j];
        sum_g4 += g[j] * g[j];
    }
    // E0 T = eps^{-2} sum gamma^2 E y^2 = sum gamma^2; Var0 T = 2 sum gamma^4.
    return finish(std::move(t), sum_g2, 2.0 * sum_g4, spec, calibration);
}

TestSpec make_gamma_delta_test(const DeltaWeights& dw, const ProblemSpec& spec,
                               Calibration calibration)
{
    TestSpec t;
    t.family = WeightFamily::gamma_delta;
    t.eps = spec.eps;
    const double e2 = spec.eps * spec.eps;
    const std::vector<double> g = gamma_weights(dw.weights, spec.eps);
    t.stat_weights.resize(g.size());
    double sum_g2 = 0.0;
    double sum_g4 = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        t.stat_weights[j] = g[j] / e2;
        sum_g2 += g[j];
        sum_g4 += g[j] * g[j];
    }
    return finish(std::move(t), sum_g2, 2.0 * sum_g4, spec, calibration);
}

double statistic(const TestSpec& test, const Observation& y)
{
    if (y.y.horizon() < test.stat_weights.size())
        throw std::invalid_argument("statistic: observation horizon below weight horizon");
    double s = 0.0;
    for (std::size_t j = 0; j < test.stat_weights.size(); ++j) {
        const double yj = y.y.coeffs[j];
        s += test.stat_weights[j] * yj * yj;
    }
    return s;
}

Decision standardize_and_decide(double t_value, const TestSpec& test)
{
    const double r = (t_value - test.center) / test.scale;
    return {r, r > test.x_alpha};
}

double predicted_type2(double a_eps, double alpha)
{
    if (!(a_eps >= 0.0))
        throw std::domain_error("predicted_type2: a_eps must be >= 0");
    return gauss_cdf(gauss_quantile(alpha) - std::sqrt(0.5 * a_eps));
}

double noncentrality(const ExtremalWeights& w, double eps, const CoefficientVector& theta)
{
    const double e4 = std::pow(eps, 4.0);
    double s = 0.0;
    const std::size_t n = std::min(w.weights.size(), theta.horizon());
    for (std::size_t j = 0; j < n; ++j)
        s += w.weights[j] * theta.coeffs[j] * theta.coeffs[j];
    return s / e4;
}

double mean_shift(const TestSpec& test, const CoefficientVector& theta)
{
    double s = 0.0;
    const std::size_t n = std::min(test.stat_weights.size(), theta.horizon());
    for (std::size_t j = 0; j < n; ++j)
        s += test.stat_weights[j] * theta.coeffs[j] * theta.coeffs[j];
    return s;
}

std::vector<double> null_weights(const TestSpec& test)
{
    const double e2 = test.eps * test.eps;
    std::vector<double> w(test.stat_weights.size());
    for (std::size_t j = 0; j < w.size(); ++j)
        w[j] = test.stat_weights[j] * e2;
    return w;
}

double exact_null_size(const TestSpec& test, double x)
{
    const std::vector<double> w = null_weights(test);
    return weighted_chisq_tail(w, test.center + x * test.scale);
}

double calibrate_exact_tail(const TestSpec& test, double alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("calibrate_exact_tail: alpha must lie in (0,1)");
    double lo = -6.0;
    double hi = 6.0;
    while (exact_null_size(test, hi) > alpha) {
        hi *= 2.0;
        if (hi > 1e6)
            throw numeric_error("calibrate_exact_tail: threshold bracket failed");
    }
    while (exact_null_size(test, lo) < alpha) {
        lo *= 2.0;
        if (lo < -1e6)
            throw numeric_error("calibrate_exact_tail: threshold bracket failed");
    }
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        (exact_null_size(test, mid) > alpha ? lo : hi) = mid;
        if (hi - lo < 1e-10)
            break;
    }
    return 0.5 * (lo + hi);
}

} // namespace bdet

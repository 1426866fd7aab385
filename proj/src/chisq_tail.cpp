#include "bdet/chisq_tail.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bdet/errors.hpp"

namespace bdet {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Integrand {
    const std::vector<double>& w;
    double x;

    // sin(theta(u)) / (u rho(u)) with
    //   theta(u) = 0.5 sum atan(w u) - 0.5 x u
    //   rho(u)   = prod (1 + w^2 u^2)^{1/4}
    double operator()(double u) const
    {
        if (u < 1e-300)
            return 0.5 * (std::accumulate(w.begin(), w.end(), 0.0) - x);
        double theta = -0.5 * x * u;
        double log_rho = 0.0;
        for (double wj : w) {
            const double t = wj * u;
            theta += 0.5 * std::atan(t);
            log_rho += 0.25 * std::log1p(t * t);
            if (log_rho > 745.0)
                return 0.0; // envelope underflows
        }
        return std::sin(theta) * std::exp(-log_rho) / u;
    }

    // 1/(u rho(u)), the decreasing envelope.
    double envelope(double u) const
    {
        double log_rho = 0.0;
        for (double wj : w) {
            const double t = wj * u;
            log_rho += 0.25 * std::log1p(t * t);
            if (log_rho > 745.0)
                return 0.0;
        }
        return std::exp(-log_rho) / u;
    }
};

double adaptive_simpson(const Integrand& f, double a, double b,
                        double fa, double fm, double fb, double tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1);
}

// ln of the envelope-only truncation bound at U: for u >= U,
// 1/(u rho(u)) <= u^{-1-m/2} prod_{i in S} w_i^{-1/2} for any subset S of m
// weights, so the remaining integral is below [pi (m/2) prod (w_i U)^{1/2}]^{-1}.
double log_envelope_bound(const std::vector<double>& sorted_desc, double U)
{
    double acc = 0.0;
    std::size_t m = 0;
    for (double wi : sorted_desc) {
        const double lw = std::log(wi * U);
        if (m > 0 && lw <= 0.0)
            break;
        acc += lw;
        ++m;
    }
    return -std::log(kPi * 0.5 * static_cast<double>(m)) - 0.5 * acc;
}

// Oscillation-aware truncation bound: beyond U the phase derivative satisfies
// |theta'| >= D = x/2 - 0.5 sum w/(1 + w^2 U^2); once D > x/4, grouping the
// integral into half-periods gives an alternating series with decreasing
// terms, so |tail| <= 2 envelope(U) / D (one extra factor 2 of safety).
double oscillation_bound(const Integrand& g, const std::vector<double>& w, double x,
                         double U)
{
    double drift = 0.0;
    for (double wj : w)
        drift += 0.5 * wj / (1.0 + wj * wj * U * U);
    const double D = 0.5 * x - drift;
    if (!(D > 0.25 * x))
        return std::numeric_limits<double>::infinity();
    return (1.0 / kPi) * 4.0 * g.envelope(U) / D;
}

} // namespace

double weighted_chisq_tail(std::span<const double> weights, double x, double abs_tol)
{
    std::vector<double> w;
    w.reserve(weights.size());
    for (double v : weights) {
        if (v < 0.0)
            throw std::domain_error("weighted_chisq_tail: weights must be nonnegative");
        if (v > 0.0)
            w.push_back(v);
    }
    if (w.empty())
        return (x <= 0.0) ? 1.0 : 0.0;
    if (x <= 0.0)
        return 1.0; // the form is positive almost surely

    std::vector<double> sorted = w;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const Integrand g{w, x};

    const double trunc_tol = 0.25 * abs_tol;
    double U = 2.0 / sorted[0];
    int doublings = 0;
    for (;;) {
        const double b1 = std::exp(log_envelope_bound(sorted, U));
        const double b2 = oscillation_bound(g, w, x, U);
        if (std::min(b1, b2) <= trunc_tol)
            break;
        U *= 2.0;
        if (++doublings > 200)
            throw numeric_error("weighted_chisq_tail: truncation bound not reached");
    }

    // Panels roughly one half-oscillation of theta(u) wide; adaptive Simpson
    // inside each panel carries a proportional share of the error budget.
    const double sum_w = std::accumulate(w.begin(), w.end(), 0.0);
    const double freq = 0.5 * std::max(x, sum_w);
    const std::size_t n_seg =
        std::max<std::size_t>(16, static_cast<std::size_t>(U * freq / kPi) * 2);
    if (n_seg > 4000000)
        throw numeric_error("weighted_chisq_tail: inversion integral too oscillatory");
    const double quad_tol = 0.5 * abs_tol;

    double integral = 0.0;
    double a = 0.0;
    double fa = g(a);
    for (std::size_t s = 1; s <= n_seg; ++s) {
        const double b = U * static_cast<double>(s) / static_cast<double>(n_seg);
        const double fb = g(b);
        const double fm = g(0.5 * (a + b));
        integral += adaptive_simpson(g, a, b, fa, fm, fb, quad_tol * (b - a) / U, 16);
        a = b;
        fa = fb;
    }

    const double p = 0.5 + integral / kPi;
    return std::clamp(p, 0.0, 1.0);
}

} // namespace bdet

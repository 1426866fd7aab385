#include "bdet/besov.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bdet/errors.hpp"

namespace bdet {

BesovBall::BesovBall(double r_, double p0_) : r(r_), p0(p0_)
{
    if (!(r > 0.0))
        throw std::domain_error("BesovBall: r must be > 0");
    if (!(p0 > 0.0))
        throw std::domain_error("BesovBall: p0 must be > 0");
}

AlternativeSet::AlternativeSet(double rho_, BesovBall ball_) : rho(rho_), ball(ball_)
{
    if (!(rho >= 0.0))
        throw std::domain_error("AlternativeSet: rho must be >= 0");
}

SeminormResult seminorm_sup_at(const CoefficientVector& theta, double r)
{
    const std::size_t n = theta.horizon();
    SeminormResult best{0.0, 1};
    double tail = 0.0;
    // Backward pass: tail_k = sum_{j>=k} theta_j^2. Walking from the top also
    // keeps every candidate k^{2r} * tail_k available without a second array.
    std::vector<double> tails(n + 1, 0.0);
    for (std::size_t k = n; k >= 1; --k) {
        tail += theta.coeffs[k - 1] * theta.coeffs[k - 1];
        tails[k - 1] = tail;
    }
    for (std::size_t k = 1; k <= n; ++k) {
        const double v = std::pow(static_cast<double>(k), 2.0 * r) * tails[k - 1];
        if (v > best.value) {
            best.value = v;
            best.argmax_k = k;
        }
    }
    return best;
}

double seminorm_sup(const CoefficientVector& theta, double r)
{
    return seminorm_sup_at(theta, r).value;
}

bool is_in_ball(const CoefficientVector& theta, const BesovBall& ball)
{
    return seminorm_sup(theta, ball.r) <= ball.p0;
}

bool is_in_q(const CoefficientVector& theta, const AlternativeSet& q)
{
    return theta.squared_norm() >= q.rho && is_in_ball(theta, q.ball);
}

USequence to_u(const CoefficientVector& theta, double r)
{
    const std::size_t n = theta.horizon();
    USequence out;
    out.u.assign(n + 1, 0.0);
    double tail = 0.0;
    for (std::size_t k = n; k >= 1; --k) {
        tail += theta.coeffs[k - 1] * theta.coeffs[k - 1];
        out.u[k - 1] = std::pow(static_cast<double>(k), 2.0 * r) * tail;
    }
    return out;
}

std::vector<double> from_u(const USequence& useq, double r)
{
    const std::size_t n = useq.u.empty() ? 0 : useq.u.size() - 1;
    std::vector<double> theta_sq(n, 0.0);
    for (std::size_t j = 1; j <= n; ++j) {
        const double a = useq.u[j - 1] * std::pow(static_cast<double>(j), -2.0 * r);
        const double b = useq.u[j] * std::pow(static_cast<double>(j + 1), -2.0 * r);
        const double d = a - b;
        // Tolerate rounding; a genuinely decreasing-infeasible u is an error.
        const double slack = 1e-12 * std::max(1.0, std::fabs(a));
        if (d < -slack)
            throw infeasibility_error("from_u: negative coefficient difference at index " +
                                      std::to_string(j));
        theta_sq[j - 1] = (d > 0.0) ? d : 0.0;
    }
    return theta_sq;
}

} // namespace bdet

#include "bdet/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bdet/errors.hpp"

namespace bdet {

namespace {

void check_solvable(double r, double p0, double rho)
{
    if (!(r > 0.0) || !(p0 > 0.0) || !(rho > 0.0))
        throw std::domain_error("solve_weight_equations: r, p0, rho must be > 0");
    // k <= 1 makes the flat part of the profile empty.
    if (rho >= p0 * (2.0 * r + 1.0) / (2.0 * r))
        throw infeasibility_error(
            "solve_weight_equations: rho >= p0 (2r+1)/(2r) gives k_eps <= 1 (degenerate problem)");
}

// Tail sum_{j>J} j^{-s} as midpoint integral (J+1/2)^{1-s}/(s-1) with the
// Euler-Maclaurin style certified error bound s((s+1) J^{-s-2} + J^{-s-1})/24.
struct TailEstimate {
    double value;
    double err;
};

TailEstimate power_tail(double J, double s)
{
    TailEstimate t;
    t.value = std::pow(J + 0.5, 1.0 - s) / (s - 1.0);
    t.err = s * ((s + 1.0) * std::pow(J, -s - 2.0) + std::pow(J, -s - 1.0)) / 24.0;
    return t;
}

} // namespace

WeightSolution solve_weight_equations(double r, double p0, double rho)
{
    check_solvable(r, p0, rho);
    const double k = std::pow(p0 * (2.0 * r + 1.0) / (2.0 * r * rho), 1.0 / (2.0 * r));
    const double kappa_sq = p0 / (2.0 * r) * std::pow(k, -2.0 * r - 1.0);
    return {k, kappa_sq};
}

WeightSolution solve_weight_equations(const ProblemSpec& spec)
{
    return solve_weight_equations(spec.r, spec.p0, spec.rho);
}

WeightSolution solve_weight_equations_bisect(double r, double p0, double rho)
{
    check_solvable(r, p0, rho);
    const auto f = [&](double k) {
        return p0 * std::pow(k, -2.0 * r) * (2.0 * r + 1.0) / (2.0 * r) - rho;
    };
    double lo = 1.0;
    double hi = 2.0;
    while (f(hi) > 0.0) {
        hi *= 2.0;
        if (hi > 1e200)
            throw numeric_error("solve_weight_equations_bisect: bracket expansion failed");
    }
    for (int it = 0; it < 200 && (hi - lo) > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    const double k = 0.5 * (lo + hi);
    const double kappa_sq = p0 / (2.0 * r) * std::pow(k, -2.0 * r - 1.0);
    return {k, kappa_sq};
}

EquationResiduals weight_equation_residuals(double r, double p0, double rho,
                                            const WeightSolution& sol)
{
    const double lhs_flat = 2.0 * r * std::pow(sol.k_eps, 2.0 * r + 1.0) * sol.kappa_sq;
    const double lhs_norm =
        sol.k_eps * sol.kappa_sq + std::pow(sol.k_eps, -2.0 * r) * p0;
    return {std::fabs(lhs_flat - p0) / p0, std::fabs(lhs_norm - rho) / rho};
}

ExtremalWeights build_weights(const ProblemSpec& spec, std::size_t j_max, double tail_tol)
{
    const WeightSolution sol = solve_weight_equations(spec);
    const double r = spec.r;
    const double s2 = 2.0 * r + 1.0; // exponent of the kappa^2 tail
    const double s4 = 4.0 * r + 2.0; // exponent of the kappa^4 tail
    const double tail_coef = spec.p0 / (2.0 * r);

    const std::size_t j_floor =
        static_cast<std::size_t>(std::ceil(std::max(64.0 * sol.k_eps, sol.k_eps + 1.0)));
    std::size_t J = (j_max == 0) ? std::max<std::size_t>(j_floor, 16) : j_max;
    if (static_cast<double>(J) < sol.k_eps)
        throw std::domain_error("build_weights: j_max below k_eps");

    const bool fixed_j = (j_max != 0);
    for (;;) {
        ExtremalWeights w;
        w.k_eps = sol.k_eps;
        w.kappa_sq = sol.kappa_sq;
        w.j_max = J;
        w.eps = spec.eps;
        w.weights.resize(J);
        double s_fin = 0.0;
        double s2_fin = 0.0;
        for (std::size_t j = 1; j <= J; ++j) {
            const double tail_branch = tail_coef * std::pow(static_cast<double>(j), -s2);
            const double kj = std::min(sol.kappa_sq, tail_branch);
            w.weights[j - 1] = kj;
            s_fin += kj;
            s2_fin += kj * kj;
        }
        const TailEstimate t2 = power_tail(static_cast<double>(J), s2);
        const TailEstimate t4 = power_tail(static_cast<double>(J), s4);
        w.sum_w_finite = s_fin;
        w.sum_w2_finite = s2_fin;
        w.sum_w = s_fin + tail_coef * t2.value;
        w.sum_w2 = s2_fin + tail_coef * tail_coef * t4.value;
        w.tail_rel_err = std::max(tail_coef * t2.err / w.sum_w,
                                  tail_coef * tail_coef * t4.err / w.sum_w2);
        w.a_eps = w.sum_w2 / std::pow(spec.eps, 4.0);
        if (w.tail_rel_err <= tail_tol)
            return w;
        if (fixed_j)
            throw numeric_error("build_weights: tail bound " + std::to_string(w.tail_rel_err) +
                                " above tolerance at j_max " + std::to_string(J) +
                                "; supply a larger j_max");
        J *= 2;
        if (J > (std::size_t{1} << 31))
            throw numeric_error("build_weights: j_max exploded before reaching tail tolerance");
    }
}

double eps_for_target_a(const ExtremalWeights& w, double a_target)
{
    if (!(a_target > 0.0))
        throw std::domain_error("eps_for_target_a: target must be > 0");
    return std::pow(w.sum_w2 / a_target, 0.25);
}

double a_leading_order_sum(double r, double p0, double k_eps)
{
    const double c = p0 / (2.0 * r);
    return c * c * std::pow(k_eps, -4.0 * r - 1.0) * (4.0 * r + 2.0) / (4.0 * r + 1.0);
}

ClosedFormA a_eps_closed_form(double r, double p0, double rate_R)
{
    if (!(r > 0.0) || !(p0 > 0.0) || !(rate_R > 0.0))
        throw std::domain_error("a_eps_closed_form: r, p0, R must be > 0");
    const double base_p = p0 / (2.0 * r);
    const double base_r = rate_R / (2.0 * r + 1.0);
    const double common = (4.0 * r + 2.0) / (4.0 * r + 1.0);
    ClosedFormA out;
    out.nominal = std::pow(base_p, 1.0 / (2.0 * r)) * common *
                std::pow(base_r, (4.0 * r - 1.0) / (2.0 * r));
    out.rederived = std::pow(base_p, -1.0 / (2.0 * r)) * common *
                    std::pow(base_r, (4.0 * r + 1.0) / (2.0 * r));
    return out;
}

DeltaWeights perturb(const ProblemSpec& spec, double delta)
{
    if (!(delta > 0.0 && delta < 1.0))
        throw std::domain_error("perturb: delta must lie in (0,1)");
    const WeightSolution base = solve_weight_equations(spec);
    const double p0d = spec.p0 * (1.0 - delta);
    const double rhod = spec.rho * (1.0 + delta);
    const WeightSolution sol = solve_weight_equations(spec.r, p0d, rhod);

    DeltaWeights dw;
    dw.delta = delta;
    dw.cutoff = base.k_eps / delta;
    dw.k_eps_delta = sol.k_eps;
    dw.kappa_sq_delta = sol.kappa_sq;
    dw.eps = spec.eps;

    const std::size_t J = static_cast<std::size_t>(std::floor(dw.cutoff));
    const double tail_coef = p0d / (2.0 * spec.r);
    const double s2 = 2.0 * spec.r + 1.0;
    dw.weights.resize(J);
    dw.sum_w = 0.0;
    dw.sum_w2 = 0.0;
    for (std::size_t j = 1; j <= J; ++j) {
        const double kj =
            std::min(sol.kappa_sq, tail_coef * std::pow(static_cast<double>(j), -s2));
        dw.weights[j - 1] = kj;
        dw.sum_w += kj;
        dw.sum_w2 += kj * kj;
    }
    dw.a_eps_delta = dw.sum_w2 / std::pow(spec.eps, 4.0);
    return dw;
}

LeastFavorable least_favorable(const ProblemSpec& spec, const ExtremalWeights& w,
                               LfVariant variant, std::size_t horizon)
{
    const std::size_t J = (horizon == 0) ? w.j_max : horizon;
    if (static_cast<double>(J) < w.k_eps)
        throw std::domain_error("least_favorable: horizon below k_eps");

    std::vector<double> theta_sq(J, 0.0);
    if (variant == LfVariant::nominal) {
        const double tail_coef = spec.p0 / (2.0 * spec.r);
        const double s2 = 2.0 * spec.r + 1.0;
        for (std::size_t j = 1; j <= J; ++j)
            theta_sq[j - 1] = (j <= w.weights.size())
                                  ? w.weights[j - 1]
                                  : std::min(w.kappa_sq,
                                             tail_coef * std::pow(static_cast<double>(j), -s2));
    } else {
        // Tail from u_j = P0: theta_j^2 = P0 (j^{-2r} - (j+1)^{-2r}) for
        // j >= ceil(k_eps), telescoping to P0 (jt^{-2r} - (J+1)^{-2r}); the
        // truncation remainder is absorbed by the flat part, which keeps
        // every tail u_j strictly inside the ball.
        const double tr = -2.0 * spec.r;
        const std::size_t jt = static_cast<std::size_t>(std::ceil(w.k_eps));
        double tail_mass = 0.0;
        for (std::size_t j = jt; j <= J; ++j) {
            theta_sq[j - 1] = spec.p0 * (std::pow(static_cast<double>(j), tr) -
                                         std::pow(static_cast<double>(j + 1), tr));
            tail_mass += theta_sq[j - 1];
        }
        const double flat_total = spec.rho - tail_mass;
        const std::size_t m = jt - 1;
        if (flat_total < 0.0)
            throw infeasibility_error("least_favorable: tail mass already exceeds rho");
        if (m == 0 && flat_total > 0.0)
            throw infeasibility_error("least_favorable: no flat indices below k_eps to absorb mass");
        for (std::size_t j = 1; j <= m; ++j)
            theta_sq[j - 1] = flat_total / static_cast<double>(m);
    }

    LeastFavorable lf;
    lf.theta.coeffs.resize(J);
    for (std::size_t j = 0; j < J; ++j)
        lf.theta.coeffs[j] = std::sqrt(theta_sq[j]);
    lf.norm_sq = lf.theta.squared_norm();
    lf.seminorm = seminorm_sup(lf.theta, spec.r);
    lf.in_ball = lf.seminorm <= spec.p0 * (1.0 + 1e-12);
    lf.in_q = lf.in_ball && lf.norm_sq >= spec.rho * (1.0 - 1e-12);
    return lf;
}

NoncentralityMin minimize_noncentrality(const AlternativeSet& q,
                                        std::span<const double> stat_weights,
                                        std::size_t horizon)
{
    const double r = q.ball.r;
    const double p0 = q.ball.p0;
    const double rho = q.rho;
    const std::size_t J = std::min(horizon, stat_weights.size());
    if (J == 0)
        throw std::domain_error("minimize_noncentrality: empty weight vector");
    if (rho > p0)
        throw infeasibility_error("minimize_noncentrality: rho exceeds the u_1 <= P0 bound");

    // Objective in u-space: sum_j c_j u_j with
    //   c_1 = w_1,  c_j = (w_j - w_{j-1}) j^{-2r} for j >= 2.
    std::vector<double> c(J, 0.0);
    c[0] = stat_weights[0];
    for (std::size_t j = 2; j <= J; ++j)
        c[j - 1] = (stat_weights[j - 1] - stat_weights[j - 2]) *
                   std::pow(static_cast<double>(j), -2.0 * r);

    // ratio_up[j-1] = ((j+1)/j)^{2r} bounds u_{j+1} <= u_j * ratio_up[j-1].
    std::vector<double> ratio_up(J, 0.0);
    for (std::size_t j = 1; j <= J; ++j)
        ratio_up[j - 1] =
            std::pow(static_cast<double>(j + 1) / static_cast<double>(j), 2.0 * r);

    // Greedy feasible start: push every u_j to its chain maximum.
    std::vector<double> u(J + 1, 0.0);
    u[0] = rho;
    for (std::size_t j = 2; j <= J; ++j)
        u[j - 1] = std::min(p0, u[j - 2] * ratio_up[j - 2]);
    u[J] = 0.0;

    // Projected coordinate descent on the chain polytope; each coordinate
    // jumps to whichever feasible endpoint its (linear) coefficient prefers.
    for (int sweep = 0; sweep < 400; ++sweep) {
        double moved = 0.0;
        for (std::size_t j = 2; j <= J; ++j) {
            const double lo = u[j] / ratio_up[j - 1];
            const double hi = std::min(p0, u[j - 2] * ratio_up[j - 2]);
            const double target = (c[j - 1] > 0.0) ? lo : hi;
            moved += std::fabs(u[j - 1] - target);
            u[j - 1] = target;
        }
        if (moved < 1e-15 * std::max(1.0, rho))
            break;
    }

    NoncentralityMin out;
    out.theta_sq.assign(J, 0.0);
    out.value = 0.0;
    for (std::size_t j = 1; j <= J; ++j) {
        const double a = u[j - 1] * std::pow(static_cast<double>(j), -2.0 * r);
        const double b = u[j] * std::pow(static_cast<double>(j + 1), -2.0 * r);
        out.theta_sq[j - 1] = std::max(0.0, a - b);
        out.value += stat_weights[j - 1] * out.theta_sq[j - 1];
    }
    return out;
}

} // namespace bdet

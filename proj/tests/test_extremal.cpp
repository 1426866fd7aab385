#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "bdet/besov.hpp"
#include "bdet/errors.hpp"
#include "bdet/extremal.hpp"
#include "bdet/rng.hpp"
#include "test_instances.hpp"

using namespace bdet;
using namespace bdet_test;

namespace {

// Brute-force profile sums to a far horizon in extended precision.
struct BruteSums {
    double sum_w;
    double sum_w2;
};

BruteSums brute_force_sums(double r, double p0, double rho, std::size_t far)
{
    const WeightSolution sol = solve_weight_equations(r, p0, rho);
    const double coef = p0 / (2.0 * r);
    const double expo = -(2.0 * r + 1.0);
    long double s = 0.0L;
    long double s2 = 0.0L;
    for (std::size_t j = far; j >= 1; --j) { // small terms first
        const double tail = coef * std::pow(static_cast<double>(j), expo);
        const long double kj = std::min(sol.kappa_sq, tail);
        s += kj;
        s2 += kj * kj;
    }
    return {static_cast<double>(s), static_cast<double>(s2)};
}

} // namespace

TEST_CASE("closed-form solutions at the canonical instances")
{
    const WeightSolution s1 = solve_weight_equations(1.0, 1.0, 0.015);
    CHECK(s1.k_eps == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(s1.kappa_sq == doctest::Approx(5e-4).epsilon(1e-12));

    const WeightSolution s2 = solve_weight_equations(1.0, 1.0, 3.0 / 3200.0);
    CHECK(s2.k_eps == doctest::Approx(40.0).epsilon(1e-12));
    CHECK(s2.kappa_sq == doctest::Approx(0.5 / (40.0 * 40.0 * 40.0)).epsilon(1e-12));

    const WeightSolution sh = solve_weight_equations(0.5, 1.0, 0.01);
    CHECK(sh.k_eps == doctest::Approx(200.0).epsilon(1e-12));
    CHECK(sh.kappa_sq == doctest::Approx(2.5e-5).epsilon(1e-12));
}

TEST_CASE("equation residuals and bisection agreement over a parameter sweep")
{
    const CounterRng rng(77, 0, 0);
    for (std::uint64_t i = 0; i < 100; ++i) {
        const double r = 0.3 + 2.7 * rng.uniform(3 * i);
        const double p0 = 0.1 + 9.9 * rng.uniform(3 * i + 1);
        const double rho = p0 * std::pow(10.0, -4.0 + 3.0 * rng.uniform(3 * i + 2));
        const WeightSolution closed = solve_weight_equations(r, p0, rho);
        const EquationResiduals res = weight_equation_residuals(r, p0, rho, closed);
        CHECK(res.eq_flat < 1e-10);
        CHECK(res.eq_norm < 1e-10);

        const WeightSolution bis = solve_weight_equations_bisect(r, p0, rho);
        CHECK(std::fabs(bis.k_eps - closed.k_eps) <= 1e-10 * closed.k_eps);

        // Continuity of the two kappa^2 routes: via eq (flat) and via eq (norm).
        const double via_norm = (rho - p0 * std::pow(closed.k_eps, -2.0 * r)) / closed.k_eps;
        CHECK(std::fabs(via_norm - closed.kappa_sq) <= 1e-12 * closed.kappa_sq);
    }
}

TEST_CASE("degenerate problems are rejected")
{
    CHECK_THROWS_AS((void)solve_weight_equations(1.0, 1.0, 1.6), infeasibility_error);
    // rho just below the k=1 boundary still solves
    CHECK_NOTHROW((void)solve_weight_equations(1.0, 1.0, 1.49));
}

TEST_CASE("homogeneity: (P0, rho) -> (c P0, c rho)")
{
    const WeightSolution a = solve_weight_equations(0.7, 1.3, 0.01);
    const WeightSolution b = solve_weight_equations(0.7, 4.0 * 1.3, 4.0 * 0.01);
    CHECK(b.k_eps == doctest::Approx(a.k_eps).epsilon(1e-13));
    CHECK(b.kappa_sq == doctest::Approx(4.0 * a.kappa_sq).epsilon(1e-13));
}

TEST_CASE("weight profile at CS1")
{
    const ExtremalWeights w = build_weights(cs1());
    REQUIRE(w.j_max >= 640);
    for (std::size_t j = 1; j <= 10; ++j)
        CHECK(w.weights[j - 1] == doctest::Approx(5e-4).epsilon(1e-13));
    CHECK(w.weights[10] == doctest::Approx(0.5 / 1331.0).epsilon(1e-13));
    // Branch crossing is exact at j = k_eps = 10.
    CHECK(0.5 * std::pow(10.0, -3.0) == doctest::Approx(w.kappa_sq).epsilon(1e-14));
    // Monotone non-increasing.
    for (std::size_t j = 1; j < w.j_max; ++j)
        CHECK(w.weights[j] <= w.weights[j - 1] + 1e-18);
}

TEST_CASE("profile sums against the brute-force oracle")
{
    const ExtremalWeights w1 = build_weights(cs1());
    const BruteSums b1 = brute_force_sums(1.0, 1.0, 0.015, 10000000);
    CHECK(w1.sum_w == doctest::Approx(b1.sum_w).epsilon(1e-9));
    CHECK(w1.sum_w2 == doctest::Approx(b1.sum_w2).epsilon(1e-9));
    CHECK(w1.sum_w == doctest::Approx(7.26e-3).epsilon(1e-3));  // quantifies sum != rho
    CHECK(w1.sum_w2 == doctest::Approx(2.8874e-6).epsilon(1e-4));
    CHECK(w1.tail_rel_err <= 1e-8);

    // r = 1/2: sum kappa^2 converges like 1/J, so the brute horizon leaves a
    // ~1e-5 relative deficit; the oracle bound accounts for it.
    const ExtremalWeights wh = build_weights(half_case());
    const BruteSums bh = brute_force_sums(0.5, 1.0, 0.01, 10000000);
    CHECK(wh.sum_w >= bh.sum_w);
    CHECK(wh.sum_w == doctest::Approx(bh.sum_w).epsilon(2e-5));
    CHECK(wh.sum_w2 == doctest::Approx(bh.sum_w2).epsilon(1e-9));
}

TEST_CASE("explicit j_max below k_eps or with unreachable tolerance")
{
    CHECK_THROWS_AS((void)build_weights(cs1(), 5), std::domain_error);
    CHECK_THROWS_AS((void)build_weights(cs1(), 12, 1e-14), numeric_error);
}

TEST_CASE("closed-form A: rederivation matches the leading-order sum identically")
{
    for (double r : {0.5, 1.0, 1.7}) {
        for (double eps : {0.1, 0.01}) {
            const double p0 = 1.3;
            const double rho = 0.9 * std::pow(eps, 8.0 * r / (4.0 * r + 1.0));
            const double R = 0.9;
            const WeightSolution sol = solve_weight_equations(r, p0, rho);
            const ClosedFormA cf = a_eps_closed_form(r, p0, R);
            const double lead = a_leading_order_sum(r, p0, sol.k_eps) / std::pow(eps, 4.0);
            CHECK(cf.rederived == doctest::Approx(lead).epsilon(1e-10));
        }
    }
}

TEST_CASE("closed-form A against summation at CS1 and CS2 scale")
{
    // rho = R eps^{8r/(4r+1)}; pick eps = 0.1 and read off R.
    for (double rho : {0.015, 3.0 / 3200.0}) {
        const double eps = 0.1;
        const double R = rho * std::pow(eps, -8.0 / 5.0);
        const ProblemSpec spec(eps, 1.0, 1.0, rho, 0.05);
        const ExtremalWeights w = build_weights(spec);
        const ClosedFormA cf = a_eps_closed_form(1.0, 1.0, R);
        const double gap = std::fabs(cf.rederived - w.a_eps) / w.a_eps;
        CHECK(gap < 0.5 / w.k_eps);
        // The nominal formula deviates; report, do not assert.
        MESSAGE("k=", w.k_eps, " rederived/sum-1=", cf.rederived / w.a_eps - 1.0,
                " nominal/sum=", cf.nominal / w.a_eps);
    }
}

TEST_CASE("delta perturbation")
{
    const ProblemSpec spec = cs1();

    SUBCASE("continuity as delta -> 0")
    {
        const DeltaWeights dw = perturb(spec, 1e-6);
        CHECK(std::fabs(dw.k_eps_delta - 10.0) / 10.0 < 1e-4);
        CHECK(std::fabs(dw.kappa_sq_delta - 5e-4) / 5e-4 < 1e-4);
    }

    SUBCASE("support ends at the cutoff")
    {
        const DeltaWeights dw = perturb(spec, 0.2);
        CHECK(dw.cutoff == doctest::Approx(50.0).epsilon(1e-12));
        CHECK(dw.weights.size() == 50);
        for (double v : dw.weights)
            CHECK(v > 0.0);
    }

    SUBCASE("A ratio approaches 1 monotonically (both directions)")
    {
        const ExtremalWeights w = build_weights(spec);
        double prev_fwd = 1e9;
        double prev_inv = 1e9;
        for (double d : {0.4, 0.2, 0.1, 0.05}) {
            const DeltaWeights dw = perturb(spec, d);
            const double fwd = std::fabs(dw.sum_w2 / w.sum_w2 - 1.0);
            const double inv = std::fabs(w.sum_w2 / dw.sum_w2 - 1.0);
            CHECK(fwd < prev_fwd);
            CHECK(inv < prev_inv);
            prev_fwd = fwd;
            prev_inv = inv;
        }
    }

    CHECK_THROWS_AS((void)perturb(spec, 0.0), std::domain_error);
    CHECK_THROWS_AS((void)perturb(spec, 1.0), std::domain_error);
}

TEST_CASE("least favorable candidates at CS1")
{
    const ProblemSpec spec = cs1();
    const ExtremalWeights w = build_weights(spec);

    const LeastFavorable lc = least_favorable(spec, w, LfVariant::consistent);
    CHECK(std::fabs(lc.norm_sq - spec.rho) < 1e-10);
    CHECK(lc.seminorm <= spec.p0 + 1e-10);
    CHECK(lc.in_q);
    CHECK(is_in_q(lc.theta, AlternativeSet(spec.rho * (1.0 - 1e-12), BesovBall(spec.r, spec.p0))));

    const LeastFavorable lp = least_favorable(spec, w, LfVariant::nominal);
    CHECK(lp.norm_sq == doctest::Approx(w.sum_w_finite).epsilon(1e-12));
    CHECK(lp.norm_sq < spec.rho); // the documented gap: sum kappa^2 != rho at r=1
    CHECK_FALSE(lp.in_q);
    CHECK(lp.in_ball);
}

TEST_CASE("least favorable tails nearly agree at r = 1/2")
{
    const ProblemSpec spec = half_case();
    const ExtremalWeights w = build_weights(spec);
    const LeastFavorable lp = least_favorable(spec, w, LfVariant::nominal);
    const LeastFavorable lc = least_favorable(spec, w, LfVariant::consistent);
    for (std::size_t j = 1000; j <= 1010; ++j) {
        const double a = lp.theta.coeffs[j - 1] * lp.theta.coeffs[j - 1];
        const double b = lc.theta.coeffs[j - 1] * lc.theta.coeffs[j - 1];
        CHECK(a / b == doctest::Approx(1.0).epsilon(2e-3));
    }
}

TEST_CASE("noncentrality minimizer on tiny instances")
{
    SUBCASE("equal weights reduce to the sphere value")
    {
        const AlternativeSet q(1.0, BesovBall(1.0, 1e6));
        const std::vector<double> w{1.0, 1.0};
        const NoncentralityMin m = minimize_noncentrality(q, w, 2);
        CHECK(m.value == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(m.theta_sq[0] + m.theta_sq[1] == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("kappa^2 = (2,1), r=1, P0=2, rho=1: capped tail")
    {
        const AlternativeSet q(1.0, BesovBall(1.0, 2.0));
        const std::vector<double> w{2.0, 1.0};
        const NoncentralityMin m = minimize_noncentrality(q, w, 2);
        CHECK(m.value == doctest::Approx(1.5).epsilon(1e-12));
        CHECK(m.theta_sq[1] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(m.theta_sq[0] == doctest::Approx(0.5).epsilon(1e-12));

        // Brute-force grid oracle at 1e-3 resolution over the feasible segment.
        double best = 1e300;
        for (int i = 0; i <= 1000; ++i) {
            const double t2 = 0.5 * static_cast<double>(i) / 1000.0; // u2 = 4 t2 <= 2
            const double t1 = 1.0 - t2;
            best = std::min(best, 2.0 * t1 + t2);
        }
        CHECK(std::fabs(m.value - best) <= 1e-3);
    }

    SUBCASE("infeasible rho")
    {
        const AlternativeSet q(3.0, BesovBall(1.0, 2.0));
        const std::vector<double> w{1.0, 1.0};
        CHECK_THROWS_AS((void)minimize_noncentrality(q, w, 2), infeasibility_error);
    }
}

TEST_CASE("noncentrality minimizer matches a J=3 brute-force grid")
{
    const CounterRng rng(4242, 0, 0);
    for (std::uint64_t rep = 0; rep < 8; ++rep) {
        const double r = 0.4 + 1.6 * rng.uniform(5 * rep);
        double w1 = 1.0 + rng.uniform(5 * rep + 1);
        double w2 = w1 * (0.3 + 0.7 * rng.uniform(5 * rep + 2));
        double w3 = w2 * (0.3 + 0.7 * rng.uniform(5 * rep + 3));
        const double p0 = 1.0;
        const double rho = 0.2 + 0.5 * rng.uniform(5 * rep + 4);
        const AlternativeSet q(rho, BesovBall(r, p0));
        const std::vector<double> w{w1, w2, w3};
        const NoncentralityMin m = minimize_noncentrality(q, w, 3);

        // feasibility of the returned point
        CoefficientVector theta;
        theta.coeffs = {std::sqrt(m.theta_sq[0]), std::sqrt(m.theta_sq[1]),
                        std::sqrt(m.theta_sq[2])};
        CHECK(std::fabs(theta.squared_norm() - rho) < 1e-9);
        CHECK(seminorm_sup(theta, r) <= p0 * (1.0 + 1e-9));

        // grid oracle
        const double c2 = std::pow(2.0, 2.0 * r);
        const double c3 = std::pow(3.0, 2.0 * r);
        double best = 1e300;
        const int n = 700;
        for (int i = 0; i <= n; ++i) {
            const double t1 = rho * i / n;
            for (int j = 0; i + j <= n; ++j) {
                const double t2 = rho * j / n;
                const double t3 = rho - t1 - t2;
                if (t3 < -1e-15)
                    continue;
                if (c2 * (t2 + t3) > p0 || c3 * t3 > p0)
                    continue;
                best = std::min(best, w1 * t1 + w2 * t2 + w3 * std::max(0.0, t3));
            }
        }
        CHECK(m.value <= best + 1e-9);
        CHECK(m.value >= best - (w1 + w2 + w3) * rho * 3.0 / n - 1e-12);
    }
}

TEST_CASE("CS1 minimizer at horizon 200 dominates the feasible candidates")
{
    const ProblemSpec spec = cs1();
    const ExtremalWeights w = build_weights(spec);
    const AlternativeSet q(spec.rho, BesovBall(spec.r, spec.p0));
    const NoncentralityMin m = minimize_noncentrality(q, w.weights, 200);

    const LeastFavorable lc = least_favorable(spec, w, LfVariant::consistent, 200);
    double candidate = 0.0;
    for (std::size_t j = 0; j < 200; ++j)
        candidate += w.weights[j] * lc.theta.coeffs[j] * lc.theta.coeffs[j];
    CHECK(m.value <= candidate + 1e-15);

    // Feasibility via the besov module.
    CoefficientVector theta;
    theta.coeffs.resize(200);
    for (std::size_t j = 0; j < 200; ++j)
        theta.coeffs[j] = std::sqrt(m.theta_sq[j]);
    CHECK(std::fabs(theta.squared_norm() - spec.rho) < 1e-9);
    CHECK(seminorm_sup(theta, spec.r) <= spec.p0 * (1.0 + 1e-9));

    MESSAGE("CS1 J=200: optimizer value / sum kappa^4 = ", m.value / w.sum_w2);
}

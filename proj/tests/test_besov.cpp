#include "doctest.h"

#include <cmath>
#include <vector>

#include "bdet/besov.hpp"
#include "bdet/errors.hpp"
#include "bdet/rng.hpp"

using namespace bdet;

namespace {

CoefficientVector basis(std::size_t j, std::size_t horizon, double v = 1.0)
{
    CoefficientVector theta;
    theta.coeffs.assign(horizon, 0.0);
    theta.coeffs[j - 1] = v;
    return theta;
}

} // namespace

TEST_CASE("seminorm on basis vectors")
{
    CHECK(seminorm_sup(basis(1, 1), 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    const SeminormResult s2 = seminorm_sup_at(basis(2, 2), 1.0);
    CHECK(s2.value == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(s2.argmax_k == 2);
}

TEST_CASE("seminorm of the j^-2 sequence, r = 1")
{
    // theta_j = j^-2 up to 200; oracle = forward partial sum of j^-4.
    CoefficientVector theta;
    theta.coeffs.resize(200);
    long double oracle = 0.0L;
    for (std::size_t j = 1; j <= 200; ++j) {
        theta.coeffs[j - 1] = std::pow(static_cast<double>(j), -2.0);
        oracle += powl(static_cast<long double>(j), -4.0L);
    }
    const SeminormResult s = seminorm_sup_at(theta, 1.0);
    CHECK(s.value == doctest::Approx(static_cast<double>(oracle)).epsilon(1e-12));
    CHECK(s.value == doctest::Approx(1.0823).epsilon(1e-4));
    CHECK(s.argmax_k == 1);
}

TEST_CASE("membership decisions")
{
    const BesovBall ball(1.0, 4.0);
    const AlternativeSet q(1.0, ball);

    CoefficientVector zero;
    zero.coeffs.assign(3, 0.0);
    CHECK(is_in_ball(zero, ball));
    CHECK_FALSE(is_in_q(zero, q));

    // e2: seminorm 4 <= 4 and norm 1 >= 1, both on the boundary.
    const CoefficientVector e2 = basis(2, 2);
    CHECK(is_in_ball(e2, ball));
    CHECK(is_in_q(e2, q));

    // Slightly above the boundary falls out.
    const CoefficientVector e2big = basis(2, 2, 1.0 + 1e-9);
    CHECK_FALSE(is_in_ball(e2big, ball));
}

TEST_CASE("u change of variables")
{
    const USequence u1 = to_u(basis(1, 1), 1.0);
    REQUIRE(u1.u.size() == 2);
    CHECK(u1.u[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(u1.u[1] == 0.0);

    // Flat u_k = P0: tail profile P0 (j^-2 - (j+1)^-2), last entry P0 J^-2.
    const double p0 = 3.0;
    const std::size_t J = 12;
    USequence flat;
    flat.u.assign(J + 1, p0);
    flat.u[J] = 0.0;
    const std::vector<double> theta_sq = from_u(flat, 1.0);
    for (std::size_t j = 1; j < J; ++j) {
        const double expect = p0 * (std::pow(j, -2.0) - std::pow(j + 1.0, -2.0));
        CHECK(theta_sq[j - 1] == doctest::Approx(expect).epsilon(1e-13));
    }
    CHECK(theta_sq[J - 1] == doctest::Approx(p0 / static_cast<double>(J * J)).epsilon(1e-13));
}

TEST_CASE("round trip through u space on random vectors")
{
    const CounterRng rng(314, 0, 0);
    for (std::uint64_t rep = 0; rep < 25; ++rep) {
        CoefficientVector theta;
        theta.coeffs.resize(50);
        for (std::size_t j = 0; j < 50; ++j)
            theta.coeffs[j] = std::fabs(CounterRng(314, rep, 0).normal(j + 1));
        const double rr = 0.3 + 2.0 * rng.uniform(rep);

        const USequence u = to_u(theta, rr);
        const std::vector<double> sq = from_u(u, rr);
        REQUIRE(sq.size() == 50);
        for (std::size_t j = 0; j < 50; ++j)
            CHECK(std::fabs(sq[j] - theta.coeffs[j] * theta.coeffs[j]) < 1e-12);

        const USequence u2 = to_u(CoefficientVector{[&] {
                                      std::vector<double> c(50);
                                      for (std::size_t j = 0; j < 50; ++j)
                                          c[j] = std::sqrt(sq[j]);
                                      return c;
                                  }()},
                                  rr);
        for (std::size_t k = 0; k < u.u.size(); ++k)
            CHECK(std::fabs(u2.u[k] - u.u[k]) < 1e-12 * std::max(1.0, u.u[k]));
    }
}

TEST_CASE("seminorm scaling and domination properties")
{
    CoefficientVector theta;
    theta.coeffs = {0.5, 0.25, 0.125, 0.0625, 0.03125};
    const double r = 0.8;
    const double base = seminorm_sup(theta, r);

    CoefficientVector scaled = theta;
    for (double& v : scaled.coeffs)
        v *= 3.0;
    CHECK(seminorm_sup(scaled, r) == doctest::Approx(9.0 * base).epsilon(1e-13));

    // The sup dominates every individual k term.
    double tail = 0.0;
    for (std::size_t k = theta.horizon(); k >= 1; --k) {
        tail += theta.coeffs[k - 1] * theta.coeffs[k - 1];
        CHECK(base >= std::pow(static_cast<double>(k), 2.0 * r) * tail - 1e-15);
    }

    // Appending zeros leaves u unchanged on the original range.
    CoefficientVector padded = theta;
    padded.coeffs.resize(9, 0.0);
    const USequence ua = to_u(theta, r);
    const USequence ub = to_u(padded, r);
    for (std::size_t k = 0; k < ua.u.size() - 1; ++k)
        CHECK(ub.u[k] == doctest::Approx(ua.u[k]).epsilon(1e-14));
}

TEST_CASE("from_u rejects infeasible sequences naming the first bad index")
{
    USequence bad;
    bad.u = {0.0, 1.0, 0.0}; // theta_1^2 = 0 - 1 * 2^{-2r} < 0
    try {
        (void)from_u(bad, 1.0);
        FAIL("expected infeasibility_error");
    } catch (const infeasibility_error& e) {
        CHECK(std::string(e.what()).find("index 1") != std::string::npos);
    }
}

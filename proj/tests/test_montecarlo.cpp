#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bdet/chisq_tail.hpp"
#include "bdet/montecarlo.hpp"
#include "test_instances.hpp"

using namespace bdet;
using namespace bdet_test;
namespace mcx = bdet::mc;

namespace {

// Minimal one-coordinate detector: T = Z^2 under the null at eps = 1.
TestSpec tiny_test(double x_alpha)
{
    TestSpec t;
    t.eps = 1.0;
    t.stat_weights = {1.0};
    t.center = 1.0;
    t.scale = std::sqrt(2.0);
    t.x_alpha = x_alpha;
    t.alpha = 0.05;
    return t;
}

ProblemSpec tiny_spec()
{
    return ProblemSpec(1.0, 1.0, 1.0, 0.5, 0.05);
}

} // namespace

TEST_CASE("a sunken threshold rejects every trial")
{
    const mcx::MCReport rep = mcx::run(mcx::Experiment::type1(), tiny_test(-1e6),
                                       tiny_spec(), 500, 3);
    CHECK(rep.rejections == 500);
    CHECK(rep.rate == 1.0);
}

TEST_CASE("replay determinism and serial/parallel equality")
{
    const ProblemSpec spec = cs1();
    const ExtremalWeights w = build_weights(spec);
    const TestSpec test = make_plain_test(w, spec);

    const mcx::MCReport a = mcx::run(mcx::Experiment::type1(), test, spec, 1000, 99);
    const mcx::MCReport b = mcx::run(mcx::Experiment::type1(), test, spec, 1000, 99);
    CHECK(a.rejections == b.rejections);
    CHECK(a.spec_hash == b.spec_hash);

    const mcx::MCReport s = mcx::run_serial(mcx::Experiment::type1(), test, spec, 1000, 99);
    CHECK(a.rejections == s.rejections);
    CHECK(a.rate == s.rate);

    mcx::RunOptions four;
    four.threads = 4;
    const mcx::MCReport p4 = mcx::run(mcx::Experiment::type1(), test, spec, 1000, 99, four);
    CHECK(p4.rejections == s.rejections);

    const mcx::MCReport other = mcx::run(mcx::Experiment::type1(), test, spec, 1000, 100);
    CHECK(other.spec_hash != a.spec_hash);
}

TEST_CASE("null standardized values replay across thread counts")
{
    const ProblemSpec spec = cs1();
    const ExtremalWeights w = build_weights(spec);
    const TestSpec test = make_plain_test(w, spec);
    const std::vector<double> one = mcx::null_standardized(test, spec, 256, 5);
    mcx::RunOptions four;
    four.threads = 4;
    const std::vector<double> many = mcx::null_standardized(test, spec, 256, 5, four);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i)
        CHECK(one[i] == many[i]);
}

TEST_CASE("type-1 rerun at the MC-calibrated threshold hits alpha")
{
    const ProblemSpec spec = cs1();
    const ExtremalWeights w = build_weights(spec);
    TestSpec test = make_plain_test(w, spec, Centering::exact, Calibration::mc_calibrated);

    const double x = mcx::calibrate_threshold(test, spec, 0.05, 4000, 21);
    test.x_alpha = x;
    const mcx::MCReport rep = mcx::run(mcx::Experiment::type1(), test, spec, 4000, 22);
    const double sigma3 = 3.0 * std::sqrt(0.05 * 0.95 / 4000.0);
    CHECK(std::fabs(rep.rate - 0.05) <= sigma3);
}

TEST_CASE("median-level calibration lands near zero")
{
    const ProblemSpec spec = cs1();
    const ExtremalWeights w = build_weights(spec);
    const TestSpec test = make_plain_test(w, spec);
    const double x = mcx::calibrate_threshold(test, spec, 0.5, 4000, 31);
    CHECK(std::fabs(x) < 0.3); // skewed-right null: median slightly below 0
}

TEST_CASE("calibrated thresholds drift towards the normal quantile as k grows")
{
    const double za = gauss_quantile(0.05);

    const ProblemSpec s1 = cs1();
    const TestSpec t1 = make_plain_test(build_weights(s1), s1);
    const double x1 = mcx::calibrate_threshold(t1, s1, 0.05, 8000, 41);

    const ProblemSpec s2 = cs2();
    const TestSpec t2 = make_plain_test(build_weights(s2), s2);
    const double x2 = mcx::calibrate_threshold(t2, s2, 0.05, 8000, 41);

    CHECK(std::fabs(x2 - za) < std::fabs(x1 - za));
}

TEST_CASE("degenerate calibration levels are rejected with a resolution error")
{
    const ProblemSpec spec = tiny_spec();
    const TestSpec test = tiny_test(1.0);
    CHECK_THROWS_AS((void)mcx::calibrate_threshold(test, spec, 1e-5, 1000, 1),
                    std::domain_error);
    CHECK_THROWS_AS((void)mcx::calibrate_threshold(test, spec, 0.05, 100, 1),
                    std::domain_error);
}

TEST_CASE("wilson interval basics")
{
    const mcx::WilsonInterval all = mcx::wilson_interval(100, 100);
    CHECK(all.hi == 1.0);
    CHECK(all.lo > 0.95);
    const mcx::WilsonInterval none = mcx::wilson_interval(0, 100);
    CHECK(none.lo == 0.0);
    CHECK(none.hi < 0.05);
    const mcx::WilsonInterval mid = mcx::wilson_interval(50, 100);
    CHECK(mid.lo < 0.5);
    CHECK(mid.hi > 0.5);
}

TEST_CASE("wilson coverage smoke test on a known tail")
{
    // True rejection rate of the tiny detector at x0 = 0.5:
    // p = P(Z^2 > 1 + 0.5 sqrt(2)).
    const TestSpec test = tiny_test(0.5);
    const ProblemSpec spec = tiny_spec();
    const double p_true =
        weighted_chisq_tail(std::vector<double>{1.0}, test.center + 0.5 * test.scale);
    int covered = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const mcx::MCReport rep = mcx::run(mcx::Experiment::type1(), test, spec, 500, seed);
        if (rep.ci_lo <= p_true && p_true <= rep.ci_hi)
            ++covered;
    }
    CHECK(covered >= 88);
}

TEST_CASE("membership and bayes-power kinds")
{
    const ProblemSpec spec = half_case();
    const DeltaWeights dw = perturb(spec, 0.3);
    const GaussianPrior prior = prior_from_delta(dw);
    const AlternativeSet q(spec.rho, BesovBall(spec.r, spec.p0));

    const mcx::MCReport mem = mcx::run(mcx::Experiment::member(prior, q),
                                       tiny_test(1.0), spec, 1000, 55);
    CHECK(mem.rate > 0.8); // the self-consistent r = 1/2 regime

    // Bayes power under the unconditional prior behaves like a rate.
    const ExtremalWeights w = build_weights(spec);
    const TestSpec test = make_plain_test(w, spec);
    const mcx::MCReport bp = mcx::run(mcx::Experiment::bayes(prior), test, spec, 200, 56);
    CHECK(bp.rate >= 0.0);
    CHECK(bp.rate <= 1.0);
    CHECK(bp.kind == "bayes_power");
}

TEST_CASE("experiment guards")
{
    GaussianPrior p;
    p.variances = {1.0};
    CHECK_THROWS_AS((void)mcx::Experiment::bayes(p, true), std::invalid_argument);
    CHECK_THROWS_AS((void)mcx::run(mcx::Experiment::type1(), tiny_test(1.0), tiny_spec(),
                                   50, 1),
                    std::domain_error);
}

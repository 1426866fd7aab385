#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bdet/besov.hpp"
#include "bdet/detectors.hpp"
#include "bdet/model.hpp"
#include "bdet/priors.hpp"

namespace bdet::mc {

enum class Kind { type1, type2_at, bayes_power, membership };

// One experiment: how theta is produced per trial and what gets counted.
//   type1       theta = 0,     count rejections
//   type2_at    theta fixed,   count acceptances
//   bayes_power theta ~ prior (optionally conditioned on q), count acceptances
//   membership  theta ~ prior, count draws landing in q (no test involved)
struct Experiment {
    Kind kind = Kind::type1;
    CoefficientVector theta;           // type2_at
    GaussianPrior prior;               // bayes_power / membership
    bool conditional = false;          // bayes_power: condition the prior on q
    std::optional<AlternativeSet> q;   // membership / conditional
    std::uint64_t max_attempts = 1000; // conditional rejection-sampling budget

    static Experiment type1();
    static Experiment type2(CoefficientVector theta);
    static Experiment bayes(GaussianPrior prior, bool conditional = false,
                            std::optional<AlternativeSet> q = std::nullopt);
    static Experiment member(GaussianPrior prior, AlternativeSet q);
};

struct MCReport {
    std::uint64_t n_trials = 0;
    std::uint64_t rejections = 0; // the kind's counted event
    double rate = 0.0;
    double ci_lo = 0.0; // Wilson 95%
    double ci_hi = 0.0;
    std::uint64_t seed = 0;
    std::string kind;
    std::string spec_hash;
};

struct RunOptions {
    int threads = 0; // 0 = library default, 1 = serial reference path
};

// Deterministic in (experiment, test, spec, n_trials, seed) and independent
// of the thread count: trials are keyed by a counter-based generator and the
// aggregation is a commutative count.
MCReport run(const Experiment& exp, const TestSpec& test, const ProblemSpec& spec,
             std::uint64_t n_trials, std::uint64_t seed, RunOptions opt = {});

// Serial reference implementation with identical semantics; the parallel
// kernel is validated against it.
MCReport run_serial(const Experiment& exp, const TestSpec& test, const ProblemSpec& spec,
                    std::uint64_t n_trials, std::uint64_t seed);

// Standardized null statistics R_1..R_n (order = trial index).
std::vector<double> null_standardized(const TestSpec& test, const ProblemSpec& spec,
                                      std::uint64_t n, std::uint64_t seed,
                                      RunOptions opt = {});

// Empirical (1 - alpha) null quantile of R. Requires n_cal >= 1000 and
// alpha resolvable at this sample size (n_cal * min(alpha, 1-alpha) >= 1).
double calibrate_threshold(const TestSpec& test, const ProblemSpec& spec, double alpha,
                           std::uint64_t n_cal, std::uint64_t seed, RunOptions opt = {});

struct WilsonInterval {
    double lo;
    double hi;
};
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t n);

// FNV-1a hash of an experiment descriptor, for self-describing outputs.
std::string spec_hash(const std::string& descriptor);

} // namespace bdet::mc

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bdet/besov.hpp"
#include "bdet/extremal.hpp"

namespace bdet {

// Diagonal covariance of a Gaussian quadratic form ||A xi||^2 = sum d_j Z_j^2.
struct DiagCovariance {
    std::vector<double> diag;

    double trace() const;
    double trace_sq() const; // tr(Sigma^2) = sum d_j^2
    double opnorm() const;   // max d_j
};

// tr(Sigma) + 2 sqrt(tr(Sigma^2) t) + 2 ||Sigma|| t; the quadratic form
// exceeds this with probability at most e^{-t}.
double hkz_threshold(const DiagCovariance& cov, double t);

struct TailCheck {
    double empirical_rate;
    double bound;  // e^{-t}
    double sigma3; // 3 binomial standard errors at the bound
    bool pass;     // empirical_rate <= bound + sigma3
};
TailCheck empirical_tail_check(const DiagCovariance& cov, double t,
                               std::uint64_t n_trials, std::uint64_t seed);

// Largest t with hkz_threshold(cov, t) <= limit (quadratic in sqrt(t) solved
// in closed form); +inf when the form is degenerate below the limit, 0 when
// the mean already exceeds it.
double hkz_t_for_threshold(const DiagCovariance& cov, double limit);

struct ViolationTerm {
    std::size_t i;
    double trace;
    double trace_sq;
    double opnorm;
    double t_star;
    double bound; // min(1, e^{-t_star})
};

struct ViolationBound {
    double total; // sum of per-i bounds, capped at 1
    std::vector<ViolationTerm> per_i;
};

// Union bound on P(prior draw violates the Besov ball): for each start index
// i = 1..cutoff the diagonal block sigma_jj = i^{2r} kappa_j^2(delta),
// j = i..cutoff, is tested against the level p0 with the sharpest per-block
// exponent t_i. delta1 is accepted for interface parity with the split-level
// derivation; the solved-for t_i already uses the full level, so it does not
// alter the bound.
ViolationBound besov_violation_bound(const DeltaWeights& dw, const BesovBall& ball,
                                     double delta1);

} // namespace bdet

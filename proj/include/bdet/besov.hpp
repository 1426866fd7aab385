#pragma once

#include <cstddef>
#include <vector>

#include "bdet/model.hpp"

namespace bdet {

struct BesovBall {
    double r;  // smoothness exponent, > 0
    double p0; // radius, > 0

    BesovBall(double r_, double p0_);
};

// Besov ball with the small L2 ball of squared radius rho removed:
// Q = { theta : ||theta||^2 >= rho, theta in ball }. rho = 0 degenerates to
// the full ball, which the samplers use as an "accept everything" set.
struct AlternativeSet {
    double rho;
    BesovBall ball;

    AlternativeSet(double rho_, BesovBall ball_);
};

// u_k = k^{2r} sum_{j>=k} theta_j^2 for k = 1..J+1; u_{J+1} = 0.
struct USequence {
    std::vector<double> u;
};

struct SeminormResult {
    double value;
    std::size_t argmax_k;
};

// sup_k k^{2r} sum_{j>=k} theta_j^2, exact for finite horizons (single
// backward pass over cumulative tails).
SeminormResult seminorm_sup_at(const CoefficientVector& theta, double r);
double seminorm_sup(const CoefficientVector& theta, double r);

// Boundary equalities count as inside.
bool is_in_ball(const CoefficientVector& theta, const BesovBall& ball);
bool is_in_q(const CoefficientVector& theta, const AlternativeSet& q);

USequence to_u(const CoefficientVector& theta, double r);

// Inverse change of variables; returns squared coefficients
// theta_j^2 = u_j j^{-2r} - u_{j+1} (j+1)^{-2r}. Throws infeasibility_error
// naming the first index whose difference is negative.
std::vector<double> from_u(const USequence& u, double r);

} // namespace bdet

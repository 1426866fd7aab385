#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bdet/extremal.hpp"
#include "bdet/model.hpp"
#include "bdet/normal.hpp"

namespace bdet {

enum class WeightFamily { plain_kappa, gamma, gamma_delta };

enum class Centering {
    exact, // subtract the exact null mean of the computed statistic
    rho,   // plain family only: subtract eps^{-2} rho
};

enum class Calibration { asymptotic, mc_calibrated, exact_tail };

// A fully specified detector. stat_weights multiply y_j^2:
//   plain_kappa: eps^{-4} kappa_j^2
//   gamma(_delta): eps^{-2} gamma_j^2, gamma_j^2 = kappa_j^2/(eps^2+kappa_j^2)
// scale is the exact null standard deviation of the computed statistic, so
// the standardized value R has mean 0 and variance 1 under H0 with exact
// centering. x_alpha starts at the asymptotic gauss_quantile(alpha) and is
// replaced by MC or exact-tail calibration when requested.
struct TestSpec {
    WeightFamily family = WeightFamily::plain_kappa;
    std::vector<double> stat_weights;
    double eps = 1.0;
    double center = 0.0;
    double scale = 1.0;
    double x_alpha = 0.0;
    double alpha = 0.05;
    Calibration calibration = Calibration::asymptotic;
};

// gamma_j^2 = kappa_j^2 / (eps^2 + kappa_j^2)
std::vector<double> gamma_weights(std::span<const double> kappa_sq, double eps);

TestSpec make_plain_test(const ExtremalWeights& w, const ProblemSpec& spec,
                         Centering centering = Centering::exact,
                         Calibration calibration = Calibration::asymptotic);
TestSpec make_gamma_test(const ExtremalWeights& w, const ProblemSpec& spec,
                         Calibration calibration = Calibration::asymptotic);
TestSpec make_gamma_delta_test(const DeltaWeights& dw, const ProblemSpec& spec,
                               Calibration calibration = Calibration::asymptotic);

// Weighted sum of squares; requires y horizon >= weight horizon.
double statistic(const TestSpec& test, const Observation& y);

struct Decision {
    double standardized;
    bool reject; // strict: R > x_alpha
};
Decision standardize_and_decide(double t_value, const TestSpec& test);

// Theorem-level type II prediction Phi(x_alpha - sqrt(a_eps/2)).
double predicted_type2(double a_eps, double alpha);

// Mean shift of the plain statistic under theta: eps^{-4} sum kappa_j^2 theta_j^2.
double noncentrality(const ExtremalWeights& w, double eps, const CoefficientVector& theta);

// Mean shift of an arbitrary detector under theta.
double mean_shift(const TestSpec& test, const CoefficientVector& theta);

// Weights of the null law of the computed statistic as a weighted chi-square:
// under H0, T = sum_j (stat_weights_j eps^2) Z_j^2.
std::vector<double> null_weights(const TestSpec& test);

// Exact null tail P(T > center + x * scale) via weighted_chisq_tail.
double exact_null_size(const TestSpec& test, double x);

// Threshold x with exact_null_size(test, x) = alpha (bisection).
double calibrate_exact_tail(const TestSpec& test, double alpha);

} // namespace bdet

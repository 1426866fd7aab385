#include "bdet/normal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bdet {

namespace {

constexpr double kInvSqrtPi = 0.564189583547756286948;  // 1/sqrt(pi)
constexpr double kInvSqrt2 = 0.707106781186547524401;   // 1/sqrt(2)
constexpr double kInvSqrt2Pi = 0.398942280401432677940; // 1/sqrt(2*pi)

// erf(z) for 0 <= z < 2 via the all-positive-term series
//   erf(z) = 2 z exp(-z^2)/sqrt(pi) * sum_{n>=0} (2 z^2)^n / (2n+1)!!
// No cancellation; ~45 terms suffice at z = 2.
double erf_series(double z)
{
    const double zz2 = 2.0 * z * z;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 200; ++n) {
        term *= zz2 / static_cast<double>(2 * n + 1);
        sum += term;
        if (term < sum * 1e-18)
            break;
    }
    return 2.0 * z * std::exp(-z * z) * kInvSqrtPi * sum;
}

// erfc(z) for z >= 2 via the continued fraction (A&S 7.1.14)
//   sqrt(pi) exp(z^2) erfc(z) = 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
// evaluated with the modified Lentz algorithm.
double erfc_cf(double z)
{
    const double tiny = 1e-300;
    double f = tiny;
    double c = f;
    double d = 0.0;
    for (int n = 1; n < 300; ++n) {
        const double a = (n == 1) ? 1.0 : 0.5 * static_cast<double>(n - 1);
        d = z + a * d;
        if (d == 0.0) d = tiny;
        c = z + a / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-17)
            break;
    }
    return std::exp(-z * z) * kInvSqrtPi * f;
}

} // namespace

double erfc_scalar(double z)
{
    if (std::isnan(z))
        return z;
    if (z < 0.0)
        return 2.0 - erfc_scalar(-z);
    if (z < 2.0)
        return 1.0 - erf_series(z);
    if (z > 27.3)
        return 0.0; // underflows double
    return erfc_cf(z);
}

double gauss_cdf(double x)
{
    return 0.5 * erfc_scalar(-x * kInvSqrt2);
}

double gauss_pdf(double x)
{
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

namespace {

// Lower-tail normal quantile, algorithm AS 241 (Wichura 1988), ~1 ulp.
double as241(double p)
{
    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                     6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                   1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                 1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                     3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                   5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                 4.2313330701600911252e+1) * r + 1.0);
    }
    double r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double x;
    if (r <= 5.0) {
        r -= 1.6;
        x = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
              4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
              2.05319162663775882187e+0) * r + 1.0);
    } else {
        r -= 5.0;
        x = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
              5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
    }
    return (q < 0.0) ? -x : x;
}

} // namespace

double gauss_quantile(double alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("gauss_quantile: alpha must lie strictly in (0,1)");
    // Upper quantile: x_alpha = -Phi^{-1}(alpha); evaluating AS 241 at alpha
    // itself (not 1 - alpha) keeps full precision for small tail levels.
    double x = -as241(alpha);
    // One Newton step on S(x) = 0.5 erfc(x/sqrt(2)) = alpha.
    const double s = 0.5 * erfc_scalar(x * kInvSqrt2);
    const double pdf = gauss_pdf(x);
    if (pdf > 0.0)
        x += (s - alpha) / pdf;
    return x;
}

} // namespace bdet

#pragma once

namespace bdet {

// Complementary error function, |relative error| < 1e-13 on the whole line.
// Power series for |z| < 2, Lentz continued fraction beyond; the switch point
// is inside the overlap region where both converge to full precision.
double erfc_scalar(double z);

// Standard normal CDF Phi(x), absolute error < 1e-14.
double gauss_cdf(double x);

// Standard normal density.
double gauss_pdf(double x);

// Upper-tail quantile: the x_alpha solving 1 - Phi(x) = alpha, alpha in (0,1).
// Rational (AS 241 style) initializer followed by one Newton step on the
// survival function; |1 - Phi(x) - alpha| < 1e-15 * max(alpha, 1e-300).
// Throws std::domain_error outside (0,1).
double gauss_quantile(double alpha);

} // namespace bdet

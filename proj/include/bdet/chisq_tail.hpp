#pragma once

#include <span>

namespace bdet {

// P( sum_j w_j Z_j^2 > x ) for independent standard normal Z_j and
// nonnegative weights, by numerical inversion of the characteristic function
// (Imhof's formula). Truncation of the inversion integral carries a certified
// bound and the quadrature is adaptive; total absolute error < abs_tol.
// Zero weights are ignored. All-zero weights: returns 1 for x <= 0, else 0.
double weighted_chisq_tail(std::span<const double> weights, double x,
                           double abs_tol = 1e-8);

} // namespace bdet

#pragma once

#include <cstddef>
#include <span>

namespace sde {

// Sum with a fixed balanced-tree association (split at floor(len/2)).
// Used everywhere increments are aggregated so that coarsening commutes
// bitwise with itself: coarsen-by-2 twice equals coarsen-by-4.
double pairwise_sum(std::span<const double> values);

// Inverse of the standard normal CDF (Wichura's AS 241, double precision).
// Defined for p in (0,1); the tails are accurate to full double precision.
double inverse_normal_cdf(double p);

// Least-squares line through (x[i], y[i]); returns slope, intercept and r^2.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace sde

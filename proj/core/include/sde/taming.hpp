#pragma once

#include <vector>

#include "sde/model.hpp"

namespace sde {

// Parameters of the step-count-dependent taming denominator
// 1 + n^{-theta} |x|^{2 rho theta}.
struct TamingConfig {
    long n = 1;
    double theta = 1.0;
    double rho = 0.0;
};

// Drift, diffusion and the Milstein correction matrices all divided by the
// same denominator. factor is that shared scalar in (0,1].
struct TamedValues {
    Vec drift;
    Mat diffusion;
    std::vector<Mat> lambda;  // lambda[j] = Lambda^j sigma(x) * factor
    double factor = 1.0;
};

// 1 / (1 + n^{-theta} |x|^{2 rho theta}); |x|^0 is taken as 1 so that
// rho = 0 gives the constant denominator 1 + n^{-theta}.
double taming_factor(const TamingConfig& cfg, const Vec& x);

TamedValues tame_coefficients(const SdeModel& model, const TamingConfig& cfg, const Vec& x);

}  // namespace sde

#include "sde/taming.hpp"

#include <cmath>

#include "sde/errors.hpp"

namespace sde {

double taming_factor(const TamingConfig& cfg, const Vec& x) {
    if (cfg.n < 1) throw UsageError("taming_factor: step count must be >= 1");
    if (cfg.theta < 0.5) throw UsageError("taming_factor: theta must be >= 1/2");
    const double exponent = 2.0 * cfg.rho * cfg.theta;
    const double norm_pow = (exponent == 0.0) ? 1.0 : std::pow(x.norm(), exponent);
    return 1.0 / (1.0 + std::pow(static_cast<double>(cfg.n), -cfg.theta) * norm_pow);
}

TamedValues tame_coefficients(const SdeModel& model, const TamingConfig& cfg, const Vec& x) {
    TamedValues out;
    out.factor = taming_factor(cfg, x);
    out.drift = out.factor * eval_drift(model, x);
    out.diffusion = out.factor * eval_diffusion(model, x);
    out.lambda.reserve(static_cast<std::size_t>(model.m));
    for (int j = 0; j < model.m; ++j)
        out.lambda.push_back(out.factor * lambda_sigma(model, x, j));
    return out;
}

}  // namespace sde

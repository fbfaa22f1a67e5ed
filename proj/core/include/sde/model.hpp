#pragma once

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace sde {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Coefficient callables use out-parameters so integrators can reuse buffers.
using DriftFn = std::function<void(const Vec& x, Vec& out)>;
using DiffusionFn = std::function<void(const Vec& x, Mat& out)>;
// out[u](i,k) = d sigma^(i,k) / d x^u; one d-by-m slab per state coordinate.
using DiffusionJacobianFn = std::function<void(const Vec& x, std::vector<Mat>& out)>;

// Axis-aligned box used for sampling-based assumption checks.
struct ModelDomain {
    Vec lower;
    Vec upper;
};

// An autonomous SDE dx = b(x) dt + sigma(x) dw with d states and m noise
// channels. rho is the polynomial growth exponent of the drift derivative
// (rho >= 1, or 0 for globally Lipschitz coefficients).
struct SdeModel {
    std::string name;
    int d = 1;
    int m = 1;
    DriftFn drift;
    DiffusionFn diffusion;
    DiffusionJacobianFn diffusion_jacobian;  // empty -> central finite differences
    double rho = 0.0;
    std::map<std::string, double> params;
    bool commutative_noise = false;
    ModelDomain domain;
    bool has_exact_solution = false;  // geometric Brownian motion only
    double default_x0 = 1.0;
};

Vec eval_drift(const SdeModel& model, const Vec& x);
Mat eval_diffusion(const SdeModel& model, const Vec& x);

// Analytic jacobian when the model supplies one, otherwise central finite
// differences with step 1e-6 * max(1, |x_u|) per coordinate.
std::vector<Mat> diffusion_jacobian(const SdeModel& model, const Vec& x);

// [Lambda^j sigma](i,k) = sum_u sigma^(u,j)(x) * d sigma^(i,k)(x) / d x^u,
// for column index j in [0, m). The Milstein correction contracts these
// matrices against the iterated integrals.
Mat lambda_sigma(const SdeModel& model, const Vec& x, int j);

// Built-in models: "paper-example", "gbm", "ginzburg-landau", "superlinear-2d".
// Unknown names or parameters raise UsageError.
SdeModel make_builtin(const std::string& name,
                      const std::map<std::string, double>& params = {});

// Exact strong solution of dx = mu x dt + sigma0 x dw at time T given w_T.
double gbm_exact(double x0, double mu, double sigma0, double T, double wT);

}  // namespace sde

#include "sde/model.hpp"

#include <cmath>
#include <sstream>

#include "sde/errors.hpp"

namespace sde {

namespace {

std::string format_point(const Vec& x) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    os << "]";
    return os.str();
}

void require_finite(const Vec& v, const char* what, const Vec& x) {
    if (!v.allFinite())
        throw NumericalFailure(std::string(what) + " is non-finite at x = " + format_point(x));
}

void require_finite(const Mat& v, const char* what, const Vec& x) {
    if (!v.allFinite())
        throw NumericalFailure(std::string(what) + " is non-finite at x = " + format_point(x));
}

double require_param(const std::map<std::string, double>& params, const std::string& key,
                     double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void reject_unknown_params(const std::map<std::string, double>& params,
                           std::initializer_list<const char*> known) {
    for (const auto& [key, value] : params) {
        (void)value;
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok) throw UsageError("unknown model parameter '" + key + "'");
    }
}

ModelDomain box1d(double lo, double hi) {
    ModelDomain dom;
    dom.lower = Vec::Constant(1, lo);
    dom.upper = Vec::Constant(1, hi);
    return dom;
}

}  // namespace

Vec eval_drift(const SdeModel& model, const Vec& x) {
    Vec out(model.d);
    model.drift(x, out);
    require_finite(out, "drift", x);
    return out;
}

Mat eval_diffusion(const SdeModel& model, const Vec& x) {
    Mat out(model.d, model.m);
    model.diffusion(x, out);
    require_finite(out, "diffusion", x);
    return out;
}

std::vector<Mat> diffusion_jacobian(const SdeModel& model, const Vec& x) {
    std::vector<Mat> jac(static_cast<std::size_t>(model.d));
    if (model.diffusion_jacobian) {
        model.diffusion_jacobian(x, jac);
    } else {
        Vec xp = x, xm = x;
        Mat sp(model.d, model.m), sm(model.d, model.m);
        for (int u = 0; u < model.d; ++u) {
            const double eps = 1e-6 * std::max(1.0, std::abs(x[u]));
            xp[u] = x[u] + eps;
            xm[u] = x[u] - eps;
            model.diffusion(xp, sp);
            model.diffusion(xm, sm);
            jac[static_cast<std::size_t>(u)] = (sp - sm) / (2.0 * eps);
            xp[u] = x[u];
            xm[u] = x[u];
        }
    }
    for (int u = 0; u < model.d; ++u)
        require_finite(jac[static_cast<std::size_t>(u)], "diffusion jacobian", x);
    return jac;
}

Mat lambda_sigma(const SdeModel& model, const Vec& x, int j) {
    if (j < 0 || j >= model.m) throw UsageError("lambda_sigma: column index out of range");
    const Mat sigma = eval_diffusion(model, x);
    const std::vector<Mat> jac = diffusion_jacobian(model, x);
    Mat out = Mat::Zero(model.d, model.m);
    for (int u = 0; u < model.d; ++u)
        out += sigma(u, j) * jac[static_cast<std::size_t>(u)];
    return out;
}

double gbm_exact(double x0, double mu, double sigma0, double T, double wT) {
    return x0 * std::exp((mu - 0.5 * sigma0 * sigma0) * T + sigma0 * wT);
}

SdeModel make_builtin(const std::string& name, const std::map<std::string, double>& params) {
    SdeModel model;
    model.name = name;

    if (name == "paper-example") {
        // dx = x(1 - x^2) dt + sigma0 (1 - x^2) dw, double well with noise
        // vanishing at the well bottoms.
        reject_unknown_params(params, {"sigma0"});
        const double s0 = require_param(params, "sigma0", 0.35);
        model.d = model.m = 1;
        model.rho = 2.0;
        model.params = {{"sigma0", s0}};
        model.commutative_noise = true;
        model.domain = box1d(-3.0, 3.0);
        model.default_x0 = 0.5;
        model.drift = [](const Vec& x, Vec& out) { out[0] = x[0] * (1.0 - x[0] * x[0]); };
        model.diffusion = [s0](const Vec& x, Mat& out) { out(0, 0) = s0 * (1.0 - x[0] * x[0]); };
        model.diffusion_jacobian = [s0](const Vec& x, std::vector<Mat>& out) {
            out[0].resize(1, 1);
            out[0](0, 0) = -2.0 * s0 * x[0];
        };
        return model;
    }

    if (name == "gbm") {
        reject_unknown_params(params, {"mu", "sigma0"});
        const double mu = require_param(params, "mu", 1.0);
        const double s0 = require_param(params, "sigma0", 0.5);
        model.d = model.m = 1;
        model.rho = 0.0;
        model.params = {{"mu", mu}, {"sigma0", s0}};
        model.commutative_noise = true;
        model.domain = box1d(-5.0, 5.0);
        model.has_exact_solution = true;
        model.drift = [mu](const Vec& x, Vec& out) { out[0] = mu * x[0]; };
        model.diffusion = [s0](const Vec& x, Mat& out) { out(0, 0) = s0 * x[0]; };
        model.diffusion_jacobian = [s0](const Vec&, std::vector<Mat>& out) {
            out[0].resize(1, 1);
            out[0](0, 0) = s0;
        };
        return model;
    }

    if (name == "ginzburg-landau") {
        // Superlinear drift, linear diffusion.
        reject_unknown_params(params, {"sigma0"});
        const double s0 = require_param(params, "sigma0", 0.5);
        model.d = model.m = 1;
        model.rho = 2.0;
        model.params = {{"sigma0", s0}};
        model.commutative_noise = true;
        model.domain = box1d(-3.0, 3.0);
        model.drift = [](const Vec& x, Vec& out) { out[0] = x[0] - x[0] * x[0] * x[0]; };
        model.diffusion = [s0](const Vec& x, Mat& out) { out(0, 0) = s0 * x[0]; };
        model.diffusion_jacobian = [s0](const Vec&, std::vector<Mat>& out) {
            out[0].resize(1, 1);
            out[0](0, 0) = s0;
        };
        return model;
    }

    if (name == "superlinear-2d") {
        // b(x) = x - |x|^2 x, sigma(x) = sigma0 sqrt(1 + |x|^2) I. The noise
        // is non-commutative: Lambda^j sigma = sigma0^2 x_j I, so
        // Lambda^1 sigma^(.,2) != Lambda^2 sigma^(.,1) away from the origin,
        // which exercises the Levy-area sampler.
        reject_unknown_params(params, {"sigma0"});
        const double s0 = require_param(params, "sigma0", 0.25);
        model.d = model.m = 2;
        model.rho = 2.0;
        model.params = {{"sigma0", s0}};
        model.commutative_noise = false;
        model.domain.lower = Vec::Constant(2, -2.0);
        model.domain.upper = Vec::Constant(2, 2.0);
        model.drift = [](const Vec& x, Vec& out) { out = x - x.squaredNorm() * x; };
        model.diffusion = [s0](const Vec& x, Mat& out) {
            const double g = std::sqrt(1.0 + x.squaredNorm());
            out.setZero();
            out(0, 0) = s0 * g;
            out(1, 1) = s0 * g;
        };
        model.diffusion_jacobian = [s0](const Vec& x, std::vector<Mat>& out) {
            const double g = std::sqrt(1.0 + x.squaredNorm());
            for (int u = 0; u < 2; ++u) {
                out[static_cast<std::size_t>(u)] = Mat::Zero(2, 2);
                out[static_cast<std::size_t>(u)](0, 0) = s0 * x[u] / g;
                out[static_cast<std::size_t>(u)](1, 1) = s0 * x[u] / g;
            }
        };
        return model;
    }

    throw UsageError("unknown model '" + name +
                     "' (expected paper-example, gbm, ginzburg-landau or superlinear-2d)");
}

}  // namespace sde

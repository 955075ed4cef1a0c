#include "sbvp/catalog.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sbvp {

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();

void require_params(const std::string& name, const std::vector<double>& params,
                    std::size_t count) {
    if (params.size() != count)
        throw std::invalid_argument("nonlinearity '" + name + "' expects " +
                                    std::to_string(count) + " parameter(s), got " +
                                    std::to_string(params.size()));
}
}  // namespace

Nonlinearity make_nonlinearity(const std::string& name, const std::vector<double>& params) {
    Nonlinearity nl;
    nl.name = name;
    nl.fy = [](double, double, double) { return 0.0; };
    if (name == "zero") {
        require_params(name, params, 0);
        nl.f = [](double, double, double) { return 0.0; };
        nl.fx = [](double, double, double) { return 0.0; };
        nl.lipschitz_K = 0.0;
        nl.lipschitz_L = 0.0;
        return nl;
    }
    if (name == "linear") {
        require_params(name, params, 1);
        const double mu = params[0];
        nl.f = [mu](double, double x, double) { return mu * x; };
        nl.fx = [mu](double, double, double) { return mu; };
        nl.sup_f = inf;
        nl.sup_fx = std::abs(mu);
        nl.lipschitz_K = std::abs(mu);
        nl.lipschitz_L = 0.0;
        return nl;
    }
    if (name == "sine") {
        require_params(name, params, 1);
        const double A = params[0];
        nl.f = [A](double, double x, double) { return A * std::sin(x); };
        nl.fx = [A](double, double x, double) { return A * std::cos(x); };
        nl.sup_f = std::abs(A);
        nl.sup_fx = std::abs(A);
        nl.lipschitz_K = std::abs(A);
        nl.lipschitz_L = 0.0;
        return nl;
    }
    if (name == "erf-band") {
        require_params(name, params, 0);
        const double pi2 = std::numbers::pi * std::numbers::pi;
        const double half_sqrt_pi = 0.5 * std::sqrt(std::numbers::pi);
        // f(x) = pi^2 \int_0^x e^{-u^2} du; f' = pi^2 e^{-x^2} in (0, pi^2]
        nl.f = [pi2, half_sqrt_pi](double, double x, double) {
            return pi2 * half_sqrt_pi * std::erf(x);
        };
        nl.fx = [pi2](double, double x, double) { return pi2 * std::exp(-x * x); };
        nl.sup_f = pi2 * half_sqrt_pi;
        nl.sup_fx = pi2;
        nl.lipschitz_K = pi2;
        nl.lipschitz_L = 0.0;
        return nl;
    }
    if (name == "band-affine") {
        require_params(name, params, 2);
        const double c = params[0], d = params[1];
        nl.f = [c, d](double, double x, double) { return c * x + d * std::sin(x); };
        nl.fx = [c, d](double, double x, double) { return c + d * std::cos(x); };
        nl.sup_f = inf;
        nl.sup_fx = std::abs(c) + std::abs(d);
        nl.lipschitz_K = std::abs(c) + std::abs(d);
        nl.lipschitz_L = 0.0;
        return nl;
    }
    throw std::invalid_argument("unknown nonlinearity '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"zero", "linear", "sine", "erf-band", "band-affine"};
}

}  // namespace sbvp

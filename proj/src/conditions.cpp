#include "sbvp/conditions.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sbvp {

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();

double arccosh(double z) {
    assert(z >= 1.0);
    return std::log(z + std::sqrt(z * z - 1.0));
}
}  // namespace

double alpha(double L, double K) {
    const double disc = 4.0 * K - L * L;
    if (disc > 0.0) {
        // disc > 0 forces K > 0, so the arccos argument is in (-1, 1)
        return 2.0 / std::sqrt(disc) * std::acos(L / (2.0 * std::sqrt(K)));
    }
    if (disc < 0.0 && L > 0.0 && K > 0.0) {
        return 2.0 / std::sqrt(-disc) * arccosh(L / (2.0 * std::sqrt(K)));
    }
    if (disc == 0.0 && L > 0.0) {
        return 2.0 / L;
    }
    return inf;
}

double beta(double L, double K) { return alpha(-L, K); }

CheckResult check_primo(double K, double L) {
    const double a = alpha(K, L);
    CheckResult r;
    r.margin = 2.0 * a - 1.0;
    r.ok = r.margin > 0.0;
    return r;
}

CheckResult check_secondo(double K, double L1, double L2) {
    const double s = alpha(L2, K) + beta(L1, K);
    CheckResult r;
    r.margin = s - 1.0;
    r.ok = r.margin > 0.0;
    return r;
}

bool check_nonresonance_band(const Nonlinearity& f, int m, double h, double k,
                             const ProbeBox& box) {
    if (m < 0 || h > k) throw std::invalid_argument("check_nonresonance_band: need m >= 0, h <= k");
    if (f.depends_on_y)
        throw std::invalid_argument(
            "check_nonresonance_band: f must not depend on the derivative argument");
    const double pi2 = std::numbers::pi * std::numbers::pi;
    if (!(pi2 * m * m < h)) return false;
    if (!(k < pi2 * (m + 1) * (m + 1))) return false;
    const int P = box.points_per_axis;
    for (int it = 0; it < P; ++it) {
        const double t = box.t_lo + (box.t_hi - box.t_lo) * it / (P - 1.0);
        for (int ix = 0; ix < P; ++ix) {
            const double x = box.x_lo + (box.x_hi - box.x_lo) * ix / (P - 1.0);
            const double d = f.fx(t, x, 0.0);
            if (!(h <= d && d <= k)) return false;
        }
    }
    return true;
}

LinearizedCoefficients linearize(const Nonlinearity& f, const GridFunction& base,
                                 const GridFunction& base_p, LinearizationSource source) {
    require_same_grid(base.grid, base_p.grid);
    LinearizedCoefficients c{GridFunction(base.grid), GridFunction(base.grid), source};
    for (int i = 0; i < base.size(); ++i) {
        const double t = base.grid.node(i);
        c.a[i] = f.fx(t, base[i], base_p[i]);
        c.b[i] = f.depends_on_y ? f.fy(t, base[i], base_p[i]) : 0.0;
    }
    return c;
}

FundamentalSolutions shoot_fundamental(const LinearizedCoefficients& coeffs) {
    const Grid& grid = coeffs.a.grid;
    require_same_grid(grid, coeffs.b.grid);
    const int n = grid.n();
    const double h = grid.h();

    FundamentalSolutions out{GridFunction(grid), GridFunction(grid), GridFunction(grid),
                             GridFunction(grid)};
    // state (u, u'); u'' = -b u' - a u; coefficients linear between nodes
    double u1 = 1.0, u1p = 0.0, u2 = 0.0, u2p = 1.0;
    out.u1[0] = u1;
    out.u1p[0] = u1p;
    out.u2[0] = u2;
    out.u2p[0] = u2p;
    for (int i = 0; i < n; ++i) {
        const double a0 = coeffs.a[i], a1 = coeffs.a[i + 1], am = 0.5 * (a0 + a1);
        const double b0 = coeffs.b[i], b1 = coeffs.b[i + 1], bm = 0.5 * (b0 + b1);
        auto rk4 = [&](double& u, double& up) {
            const double k1u = up;
            const double k1p = -b0 * up - a0 * u;
            const double k2u = up + 0.5 * h * k1p;
            const double k2p = -bm * (up + 0.5 * h * k1p) - am * (u + 0.5 * h * k1u);
            const double k3u = up + 0.5 * h * k2p;
            const double k3p = -bm * (up + 0.5 * h * k2p) - am * (u + 0.5 * h * k2u);
            const double k4u = up + h * k3p;
            const double k4p = -b1 * (up + h * k3p) - a1 * (u + h * k3u);
            u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
            up += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        };
        rk4(u1, u1p);
        rk4(u2, u2p);
        if (!std::isfinite(u1) || !std::isfinite(u2))
            throw std::overflow_error("shoot_fundamental: solution overflow");
        out.u1[i + 1] = u1;
        out.u1p[i + 1] = u1p;
        out.u2[i + 1] = u2;
        out.u2p[i + 1] = u2p;
    }
    return out;
}

double condition_L_margin(const LinearizedCoefficients& coeffs) {
    const FundamentalSolutions fund = shoot_fundamental(coeffs);
    return fund.u2[fund.u2.size() - 1];
}

}  // namespace sbvp

#include "sbvp/grid.hpp"

#include <cmath>

namespace sbvp {

double GridFunction::sup_norm() const {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

void require_same_grid(const Grid& a, const Grid& b) {
    if (a != b) throw std::invalid_argument("grid mismatch");
}

double quad_trapezoid(const GridFunction& v) {
    const double h = v.grid.h();
    double acc = 0.0;
    for (int i = 0; i + 1 < v.size(); ++i) acc += 0.5 * h * (v[i] + v[i + 1]);
    return acc;
}

GridFunction cumtrapz(const GridFunction& v) {
    GridFunction out(v.grid);
    const double h = v.grid.h();
    double acc = 0.0;
    out[0] = 0.0;
    for (int i = 1; i < v.size(); ++i) {
        acc += 0.5 * h * (v[i - 1] + v[i]);
        out[i] = acc;
    }
    return out;
}

SamplePath shift_path(const SamplePath& omega, const GridFunction& g) {
    require_same_grid(omega.grid, g.grid);
    if (g[0] != 0.0) throw std::invalid_argument("shift_path: g_0 must be 0");
    SamplePath out(omega.grid);
    for (int i = 0; i < g.size(); ++i) out.w[i] = omega.w[i] + g[i];
    return out;
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace sbvp

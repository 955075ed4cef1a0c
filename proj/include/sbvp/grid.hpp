#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sbvp {

/// Uniform grid on [0,1] with n subintervals, nodes t_i = i/n, i = 0..n.
class Grid {
public:
    explicit Grid(int n) : n_(n) {
        if (n < 2) throw std::invalid_argument("Grid: n must be >= 2");
        h_ = 1.0 / n;
    }

    int n() const { return n_; }
    int size() const { return n_ + 1; }
    double h() const { return h_; }
    double node(int i) const { return i * h_; }

    friend bool operator==(const Grid& a, const Grid& b) { return a.n_ == b.n_; }
    friend bool operator!=(const Grid& a, const Grid& b) { return a.n_ != b.n_; }

private:
    int n_;
    double h_;
};

/// Real values on the nodes of a grid.
struct GridFunction {
    Grid grid;
    std::vector<double> v;

    explicit GridFunction(const Grid& g, double fill = 0.0) : grid(g), v(g.size(), fill) {}
    GridFunction(const Grid& g, std::vector<double> values) : grid(g), v(std::move(values)) {
        if (static_cast<int>(v.size()) != g.size())
            throw std::invalid_argument("GridFunction: value count does not match grid");
    }

    double& operator[](int i) { return v[i]; }
    double operator[](int i) const { return v[i]; }
    int size() const { return static_cast<int>(v.size()); }

    double sup_norm() const;
};

/// Discretized Wiener trajectory; w[0] == 0 always.
struct SamplePath {
    Grid grid;
    std::vector<double> w;

    explicit SamplePath(const Grid& g) : grid(g), w(g.size(), 0.0) {}
    SamplePath(const Grid& g, std::vector<double> values) : grid(g), w(std::move(values)) {
        if (static_cast<int>(w.size()) != g.size())
            throw std::invalid_argument("SamplePath: value count does not match grid");
        if (w[0] != 0.0) throw std::invalid_argument("SamplePath: w[0] must be 0");
    }
};

void require_same_grid(const Grid& a, const Grid& b);

/// Trapezoid rule for \int_0^1 v dt. Exact for affine v.
double quad_trapezoid(const GridFunction& v);

/// Running trapezoid integral: result[i] = \int_0^{t_i} v dt.
GridFunction cumtrapz(const GridFunction& v);

/// omega + g, pointwise. Requires g[0] == 0 so the shift stays in C_0.
SamplePath shift_path(const SamplePath& omega, const GridFunction& g);

double sup_diff(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace sbvp

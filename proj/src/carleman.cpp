#include "sbvp/carleman.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace sbvp {

HSOperatorSpec constant_spec(const Grid& grid, double a, double b) {
    return HSOperatorSpec{GridFunction(grid, a), GridFunction(grid, b)};
}

KernelMatrix spec_matrix(const HSOperatorSpec& spec) {
    const Grid& grid = spec.a.grid;
    const int m = grid.size();
    KernelMatrix km{grid, Eigen::MatrixXd(m, m), trapezoid_weights(grid)};
    for (int i = 0; i < m; ++i) {
        const double ti = grid.node(i);
        const double ai = spec.a[i];
        const double bi = spec.b[i];
        for (int j = 0; j < m; ++j) {
            const double tj = grid.node(j);
            km.scaled(i, j) = -(ai * eval_K(ti, tj) + bi * eval_dK(ti, tj)) * km.weights(j);
        }
    }
    return km;
}

Det2Result det2_closed_form(const HSOperatorSpec& spec) {
    require_same_grid(spec.a.grid, spec.b.grid);
    LinearizedCoefficients coeffs{spec.a, spec.b, LinearizationSource::around_Y};
    const double u2_1 = condition_L_margin(coeffs);
    GridFunction integrand(spec.a.grid);
    for (int i = 0; i < integrand.size(); ++i) {
        const double t = spec.a.grid.node(i);
        integrand[i] = (t * spec.a[i] + spec.b[i]) * (1.0 - t);
    }
    Det2Result r;
    r.route = Det2Route::closed_form;
    r.margin_u2_1 = u2_1;
    r.value = u2_1 * std::exp(quad_trapezoid(integrand));
    return r;
}

Det2Result det2_eigen_product(const HSOperatorSpec& spec) {
    const KernelMatrix km = spec_matrix(spec);
    const auto spectrum = kernel_matrix_spectrum(km);
    std::complex<double> prod(1.0, 0.0);
    for (const auto& lam : spectrum) prod *= (1.0 + lam) * std::exp(-lam);
    Det2Result r;
    r.route = Det2Route::eigen_product;
    r.value = prod.real();
    r.imag_residue = std::abs(prod.imag());
    return r;
}

Eigen::MatrixXd resolvent_kernel(const HSOperatorSpec& spec) {
    const Grid& grid = spec.a.grid;
    LinearizedCoefficients coeffs{spec.a, spec.b, LinearizationSource::around_Y};
    const FundamentalSolutions fu = shoot_fundamental(coeffs);
    const int N = grid.size();
    const double u2_1 = fu.u2[N - 1];
    if (std::abs(u2_1) < kResonantThreshold)
        throw std::runtime_error("resolvent_kernel: operator is resonant (u2(1) ~ 0)");
    const double M = fu.u1[N - 1] / u2_1;

    Eigen::MatrixXd gamma(N, N);
    for (int i = 0; i < N; ++i) {
        const double a = spec.a[i];
        const double b = spec.b[i];
        const double psi = fu.u2[i] * M - fu.u1[i];
        const double psip = fu.u2p[i] * M - fu.u1p[i];
        for (int j = 0; j < N; ++j) {
            const double W = fu.u1[j] * fu.u2p[j] - fu.u2[j] * fu.u1p[j];  // W(s), s = t_j
            if (j < i) {  // s < t branch
                gamma(i, j) = (a * fu.u2[j] * psi + b * fu.u2[j] * psip) / W;
            } else if (j > i) {
                // mirrored branch; for b = 0 this restores the symmetry the
                // kernel -a K must have (checked against the classical
                // constant-coefficient resolvent)
                const double psi_s = fu.u2[j] * M - fu.u1[j];
                gamma(i, j) = (a * fu.u2[i] + b * fu.u2p[i]) * psi_s / W;
            } else {
                // the kernel jumps across the diagonal when b != 0; take the
                // midpoint of the one-sided limits, as for the dK kernel
                gamma(i, j) = (a * fu.u2[i] * psi +
                               0.5 * b * (fu.u2[i] * psip + fu.u2p[i] * psi)) /
                              W;
            }
        }
    }
    return gamma;
}

double inverse_bound_estimate(const HSOperatorSpec& spec) {
    const KernelMatrix km = spec_matrix(spec);
    const int N = static_cast<int>(km.scaled.rows());
    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(N, N) + km.scaled;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(A);
    const double smin = svd.singularValues()(svd.singularValues().size() - 1);
    if (smin < kResonantThreshold)
        throw std::runtime_error("inverse_bound_estimate: operator is resonant");
    return 1.0 / smin;
}

}  // namespace sbvp

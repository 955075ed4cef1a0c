#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "sbvp/grid.hpp"

namespace sbvp {

/// Dirichlet Green's function of -d^2/dt^2 on [0,1]: K(t,s) = min(t,s) - ts.
double eval_K(double t, double s);

/// dK/dt (t,s) = 1_{s>t} - s off the diagonal; at s = t the midpoint
/// convention (average of the one-sided limits) gives 1/2 - t.
double eval_dK(double t, double s);

/// Image of v under the integral operator with kernel K, computed as
/// t*quad(G) - cumtrapz(G) with G = cumtrapz(v). Vanishes exactly at both
/// endpoints and is algebraically consistent with free_solution / apply_S.
GridFunction apply_Kop(const GridFunction& v);

/// t-derivative of apply_Kop(v): quad(G) - G with G = cumtrapz(v).
GridFunction apply_dKop(const GridFunction& v);

struct FreeSolution {
    GridFunction Y;   // Y_t = -t \int_0^1 w + \int_0^t w
    GridFunction Yp;  // exact derivative Y'_t = w_t - \int_0^1 w
};

/// Solution of the boundary value problem with f = 0. Y_0 = Y_n = 0 exactly.
FreeSolution free_solution(const SamplePath& omega);

/// Nystrom (quadrature) image of an integral operator: entries are
/// kernel(t_i, t_j) * w_j with trapezoid weights w_j.
struct KernelMatrix {
    Grid grid;
    Eigen::MatrixXd scaled;    // kernel(t_i,t_j) * w_j
    Eigen::VectorXd weights;   // trapezoid weights

    /// Weighted Hilbert-Schmidt norm^2: sum_ij w_i kernel_ij^2 w_j.
    double hs_norm_sq() const;

    GridFunction apply(const GridFunction& v) const;
};

KernelMatrix nystrom(const std::function<double(double, double)>& kernel, const Grid& grid);

Eigen::VectorXd trapezoid_weights(const Grid& grid);

struct EigenPair {
    std::complex<double> value;
    std::vector<std::complex<double>> vec;
};

/// Leading `count` eigenpairs of the discretized operator, by modulus.
/// Nonsymmetric kernels may produce complex pairs. Throws on solver failure.
std::vector<EigenPair> kop_eigensystem(const KernelMatrix& m, int count);

/// All eigenvalues of the discretized operator (used by det2_eigen_product).
/// Detects a symmetric kernel and routes through the symmetrized
/// self-adjoint solver, which is both faster and exactly real.
std::vector<std::complex<double>> kernel_matrix_spectrum(const KernelMatrix& m);

}  // namespace sbvp

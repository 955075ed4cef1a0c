#pragma once

#include <Eigen/Dense>

#include "sbvp/conditions.hpp"
#include "sbvp/green.hpp"
#include "sbvp/grid.hpp"

namespace sbvp {

/// Hilbert-Schmidt operator with kernel l(t,s) = -a(t)K(t,s) - b(t)dK(t,s).
struct HSOperatorSpec {
    GridFunction a;
    GridFunction b;
};

HSOperatorSpec constant_spec(const Grid& grid, double a, double b);

/// Nystrom matrix of the spec's kernel (midpoint diagonal convention).
KernelMatrix spec_matrix(const HSOperatorSpec& spec);

enum class Det2Route { closed_form, eigen_product, matrix };

struct Det2Result {
    double value = 0.0;
    Det2Route route = Det2Route::closed_form;
    double margin_u2_1 = 0.0;  // u2(1) factor (closed_form route)
    double imag_residue = 0.0; // |Im| of the final product (eigen route)
};

/// det2(I+L) = u2(1) * exp(\int_0^1 (t a(t) + b(t))(1-t) dt), with u2 from
/// shoot_fundamental. Value 0 signals resonance.
Det2Result det2_closed_form(const HSOperatorSpec& spec);

/// det2(I+L) = prod_k (1 + lambda_k) e^{-lambda_k} over the Nystrom matrix
/// spectrum, accumulated in complex arithmetic.
Det2Result det2_eigen_product(const HSOperatorSpec& spec);

/// Resolvent kernel gamma(t,s) of (I+L)^{-1} = I - Gamma, sampled on the
/// grid (plain kernel values, no quadrature weights). Throws on resonance.
Eigen::MatrixXd resolvent_kernel(const HSOperatorSpec& spec);

/// Empirical operator-norm estimate of (I+L)^{-1}: 1 / sigma_min of the
/// Nystrom matrix of I + L. Throws on resonance.
double inverse_bound_estimate(const HSOperatorSpec& spec);

}  // namespace sbvp

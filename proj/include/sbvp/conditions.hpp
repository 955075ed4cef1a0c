#pragma once

#include "sbvp/grid.hpp"
#include "sbvp/solver.hpp"

namespace sbvp {

/// Piecewise threshold function alpha(L,K); total, +infinity on the
/// "otherwise" branch.
double alpha(double L, double K);

/// beta(L,K) = alpha(-L,K).
double beta(double L, double K);

struct CheckResult {
    bool ok = false;
    double margin = 0.0;
};

/// Contraction-zone criterion 1 < 2*alpha(K,L); margin = 2*alpha - 1.
CheckResult check_primo(double K, double L);

/// Generalized criterion 1 < alpha(L2,K) + beta(L1,K). Declared constants
/// are trusted; local Lipschitzness of f is the caller's obligation.
CheckResult check_secondo(double K, double L1, double L2);

struct ProbeBox {
    double t_lo = 0.0, t_hi = 1.0;
    double x_lo = -5.0, x_hi = 5.0;
    int points_per_axis = 1000;
};

/// Non-resonance band check: pi^2 m^2 < h, k < pi^2 (m+1)^2, and
/// h <= f_x <= k at every probe point (finite sampling, heuristic not proof).
/// The band criterion only applies to drifts f(t, x) without a derivative
/// argument; throws otherwise.
bool check_nonresonance_band(const Nonlinearity& f, int m, double h, double k,
                             const ProbeBox& box = {});

enum class LinearizationSource { around_Y, around_X };

/// Coefficients a_t = f_x, b_t = f_y evaluated along a base trajectory.
struct LinearizedCoefficients {
    GridFunction a;
    GridFunction b;
    LinearizationSource source = LinearizationSource::around_Y;
};

LinearizedCoefficients linearize(const Nonlinearity& f, const GridFunction& base,
                                 const GridFunction& base_p, LinearizationSource source);

struct FundamentalSolutions {
    GridFunction u1, u2;    // u1(0)=u2'(0)=1, u1'(0)=u2(0)=0
    GridFunction u1p, u2p;
};

/// RK4 integration of u'' + b u' + a u = 0 for both fundamental initial
/// value problems; coefficients interpolated linearly for the half steps.
FundamentalSolutions shoot_fundamental(const LinearizedCoefficients& coeffs);

/// u2(1): the linearized Dirichlet problem has only the zero solution iff
/// this is nonzero; sign and magnitude are the resonance margin.
double condition_L_margin(const LinearizedCoefficients& coeffs);

inline constexpr double kResonantThreshold = 1e-9;

}  // namespace sbvp

#pragma once

#include <functional>
#include <optional>
#include <string>

#include "sbvp/green.hpp"
#include "sbvp/grid.hpp"

namespace sbvp {

/// Right-hand side f(t,x,y) of X'' + f(t,X,X') = W', with its spatial
/// derivatives and declared supremum bounds. Evaluation must be reentrant.
struct Nonlinearity {
    std::string name;
    std::function<double(double, double, double)> f;
    std::function<double(double, double, double)> fx;
    std::function<double(double, double, double)> fy;
    double sup_f = 0.0;
    double sup_fx = 0.0;
    double sup_fy = 0.0;
    bool depends_on_y = false;
    std::optional<double> lipschitz_K;
    std::optional<double> lipschitz_L;
};

enum class SolveMethod { picard, newton, linear };

enum class SolveStatus {
    ok,
    max_iter,           // tolerance not reached; converged = false
    resonant_iterate,   // Newton linear system numerically singular
    nan_detected,       // f evaluation produced NaN/Inf
};

struct SolveReport {
    GridFunction X;
    GridFunction Xp;
    SolveMethod method = SolveMethod::picard;
    SolveStatus status = SolveStatus::ok;
    int iterations = 0;
    double residual_sup = 0.0;     // sup |X - Kop f(.,X,X') - Y|
    bool converged = false;
    double condition_L_margin = 0.0;  // u2(1) of the linearization, if computed
    double sigma_min = 0.0;           // smallest singular value (linear route)
    std::vector<double> iterate_distances;  // successive sup-distances
};

/// Fixed-point iteration X^{k+1} = Kop f(.,X^k,(X^k)') + Y starting from 0.
SolveReport picard_solve(const SamplePath& omega, const Nonlinearity& f, double tol,
                         int max_iter);

/// Newton iteration; each step solves (I - M_{a,b}) delta = residual with
/// M_{a,b} the Nystrom matrix of a(t)K(t,s) + b(t)dK(t,s) frozen at the
/// current iterate. Accepts an optional warm start.
SolveReport newton_solve(const SamplePath& omega, const Nonlinearity& f, double tol,
                         int max_iter, const GridFunction* warm_start = nullptr);

/// Direct solve of (I - mu * nystrom(K)) X = Y; reports the smallest
/// singular value of the system matrix. Near-resonant systems are reported
/// via status, never regularized.
SolveReport linear_solve(const SamplePath& omega, double mu);

/// T(omega)_t = omega_t + \int_0^t f(s, Y_s, Y'_s) ds.
SamplePath apply_T(const SamplePath& omega, const Nonlinearity& f);

/// S(omega)_t = omega_t - \int_0^t f(s, X_s, X'_s) ds.
SamplePath apply_S(const SamplePath& omega, const SolveReport& report, const Nonlinearity& f);

/// Integro-differential residual: sup_i |X'_i + cumtrapz(f)_i - X'_0 - w_i|
/// plus |X_0| + |X_n|.
double residual(const SamplePath& omega, const GridFunction& X, const GridFunction& Xp,
                const Nonlinearity& f);

}  // namespace sbvp

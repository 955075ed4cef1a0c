#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sbvp/carleman.hpp"
#include "sbvp/rng.hpp"
#include "sbvp/solver.hpp"

namespace sbvp {

/// Per-path record of the anticipative Girsanov density and its factors.
struct GirsanovSample {
    long path_index = 0;
    double delta_G = 0.0;    // Skorohod integral delta(G)
    double det2 = 0.0;       // det2(I + D_H G)
    double g_norm_sq = 0.0;  // |G|^2_{H_0} = \int_0^1 f(s,Y_s,Y'_s)^2 ds
    double eta = 0.0;        // det2 * exp(-delta_G - g_norm_sq/2)
};

/// Coefficients of the H-derivative kernel -a_t K(t,s) - b_t dK(t,s) with
/// a_t = f_x, b_t = f_y evaluated along (Y(omega), Y'(omega)).
HSOperatorSpec dhg_kernel(const SamplePath& omega, const Nonlinearity& f);

/// Trace-corrected forward-sum Skorohod estimator:
///   sum_i u_{t_i} (w_{i+1} - w_i) - quad(c),  u_t = f(t,Y_t,Y'_t),
/// with left-limit diagonal c_t = -a_t t(1-t) + b_t t.
double skorohod_G(const SamplePath& omega, const Nonlinearity& f);

GirsanovSample eta_density(const SamplePath& omega, const Nonlinearity& f);

struct PathFunctional {
    std::string name;
    std::function<double(const GridFunction&)> eval;
};

/// x(0.5), max|x|, \int x^2 dt.
std::vector<PathFunctional> default_functionals();

struct LawComparison {
    std::string functional_name;
    double lhs_mean = 0.0, lhs_stderr = 0.0;  // E[phi(X)]
    double rhs_mean = 0.0, rhs_stderr = 0.0;  // E[eta * phi(Y)]
    double z_score = 0.0;
    long excluded = 0;   // non-convergent solves on the lhs ensemble
    bool valid = true;   // false if exclusions exceed 1%
};

struct LawCompareConfig {
    long paths = 10000;
    int n = 512;
    RngSpec rng;
    double tol = 1e-8;
    int max_iter = 200;
    bool shared_ensemble = false;  // variance-reduction mode; acceptance uses independent
};

std::vector<LawComparison> law_compare(const Nonlinearity& f,
                                       const std::vector<PathFunctional>& functionals,
                                       const LawCompareConfig& cfg);

struct ExpMomentResult {
    double estimate = 0.0;
    double stderr_ = 0.0;
    double bound = 0.0;  // 2 exp(a^2 sup_f^2 / 2)
    bool pass = false;
};

/// Monte Carlo check of E[exp(a |delta(G)|)] against the exponential bound.
ExpMomentResult exp_moment_check(const Nonlinearity& f, double a, long paths, int n,
                                 const RngSpec& rng);

struct MomentPair {
    double mean = 0.0;
    double variance = 0.0;
};

/// Moments of (1/(k^2 pi^2)) * sum_i sin(k pi t_i)(w_{i+1} - w_i);
/// expected mean 0, variance 1/(2 k^4 pi^4).
MomentPair resonance_variance_check(int k, long paths, int n, const RngSpec& rng);

double mean_of(const std::vector<double>& xs);
double stderr_of(const std::vector<double>& xs);

}  // namespace sbvp

#include "sbvp/girsanov.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sbvp {

HSOperatorSpec dhg_kernel(const SamplePath& omega, const Nonlinearity& f) {
    const FreeSolution fs = free_solution(omega);
    const auto coeffs = linearize(f, fs.Y, fs.Yp, LinearizationSource::around_Y);
    return HSOperatorSpec{coeffs.a, coeffs.b};
}

double skorohod_G(const SamplePath& omega, const Nonlinearity& f) {
    const Grid& grid = omega.grid;
    const FreeSolution fs = free_solution(omega);
    double forward = 0.0;
    GridFunction trace(grid);
    for (int i = 0; i < grid.size(); ++i) {
        const double t = grid.node(i);
        const double u = f.f(t, fs.Y[i], fs.Yp[i]);
        if (i + 1 < grid.size()) forward += u * (omega.w[i + 1] - omega.w[i]);
        const double a = f.fx(t, fs.Y[i], fs.Yp[i]);
        const double b = f.depends_on_y ? f.fy(t, fs.Y[i], fs.Yp[i]) : 0.0;
        // left-limit diagonal of D_s u_t: K(t,t) = t(1-t), dK(t,t-) = -t
        trace[i] = -a * t * (1.0 - t) + b * t;
    }
    return forward - quad_trapezoid(trace);
}

GirsanovSample eta_density(const SamplePath& omega, const Nonlinearity& f) {
    const FreeSolution fs = free_solution(omega);
    GirsanovSample s;
    const HSOperatorSpec spec = dhg_kernel(omega, f);
    const Det2Result det = det2_closed_form(spec);
    s.det2 = det.value;
    s.delta_G = skorohod_G(omega, f);
    GridFunction sq(omega.grid);
    for (int i = 0; i < sq.size(); ++i) {
        const double u = f.f(omega.grid.node(i), fs.Y[i], fs.Yp[i]);
        sq[i] = u * u;
    }
    s.g_norm_sq = quad_trapezoid(sq);
    s.eta = s.det2 * std::exp(-s.delta_G - 0.5 * s.g_norm_sq);
    return s;
}

std::vector<PathFunctional> default_functionals() {
    std::vector<PathFunctional> out;
    out.push_back({"x_at_0.5", [](const GridFunction& x) {
                       const int n = x.grid.n();
                       if (n % 2 == 0) return x[n / 2];
                       // linear interpolation for odd n
                       return 0.5 * (x[n / 2] + x[n / 2 + 1]);
                   }});
    out.push_back({"sup_abs", [](const GridFunction& x) { return x.sup_norm(); }});
    out.push_back({"int_x2", [](const GridFunction& x) {
                       GridFunction sq(x.grid);
                       for (int i = 0; i < x.size(); ++i) sq[i] = x[i] * x[i];
                       return quad_trapezoid(sq);
                   }});
    return out;
}

double mean_of(const std::vector<double>& xs) {
    double acc = 0.0, c = 0.0;
    for (double x : xs) {  // Kahan
        const double y = x - c;
        const double t = acc + y;
        c = (t - acc) - y;
        acc = t;
    }
    return xs.empty() ? 0.0 : acc / static_cast<double>(xs.size());
}

double stderr_of(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean_of(xs);
    double acc = 0.0;
    for (double x : xs) acc += (x - m) * (x - m);
    const double var = acc / static_cast<double>(xs.size() - 1);
    return std::sqrt(var / static_cast<double>(xs.size()));
}

std::vector<LawComparison> law_compare(const Nonlinearity& f,
                                       const std::vector<PathFunctional>& functionals,
                                       const LawCompareConfig& cfg) {
    const Grid grid(cfg.n);
    const std::size_t nf = functionals.size();
    std::vector<std::vector<double>> lhs(nf), rhs(nf);
    long excluded = 0;

    // lhs ensemble: solve per path, excluding non-convergent solves
    for (long p = 0; p < cfg.paths; ++p) {
        const SamplePath omega =
            sample_wiener(grid, cfg.rng.with_stream(static_cast<std::uint64_t>(p)));
        SolveReport rep = picard_solve(omega, f, cfg.tol, cfg.max_iter);
        if (!rep.converged) rep = newton_solve(omega, f, cfg.tol, 30);
        if (!rep.converged) {
            ++excluded;
            continue;
        }
        for (std::size_t k = 0; k < nf; ++k) lhs[k].push_back(functionals[k].eval(rep.X));
    }

    // rhs ensemble: eta-weighted functionals of the free solution
    const std::uint64_t rhs_base =
        cfg.shared_ensemble ? 0 : static_cast<std::uint64_t>(cfg.paths);
    for (long p = 0; p < cfg.paths; ++p) {
        const SamplePath omega =
            sample_wiener(grid, cfg.rng.with_stream(rhs_base + static_cast<std::uint64_t>(p)));
        const GirsanovSample gs = eta_density(omega, f);
        const FreeSolution fs = free_solution(omega);
        for (std::size_t k = 0; k < nf; ++k)
            rhs[k].push_back(gs.eta * functionals[k].eval(fs.Y));
    }

    std::vector<LawComparison> out;
    const bool valid = excluded <= cfg.paths / 100;
    for (std::size_t k = 0; k < nf; ++k) {
        LawComparison c;
        c.functional_name = functionals[k].name;
        c.lhs_mean = mean_of(lhs[k]);
        c.lhs_stderr = stderr_of(lhs[k]);
        c.rhs_mean = mean_of(rhs[k]);
        c.rhs_stderr = stderr_of(rhs[k]);
        const double denom =
            std::sqrt(c.lhs_stderr * c.lhs_stderr + c.rhs_stderr * c.rhs_stderr);
        c.z_score = denom > 0.0 ? std::abs(c.lhs_mean - c.rhs_mean) / denom : 0.0;
        c.excluded = excluded;
        c.valid = valid;
        out.push_back(std::move(c));
    }
    return out;
}

ExpMomentResult exp_moment_check(const Nonlinearity& f, double a, long paths, int n,
                                 const RngSpec& rng) {
    if (a <= 0.0) throw std::invalid_argument("exp_moment_check: a > 0 required");
    const Grid grid(n);
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(paths));
    for (long p = 0; p < paths; ++p) {
        const SamplePath omega = sample_wiener(grid, rng.with_stream(static_cast<std::uint64_t>(p)));
        vals.push_back(std::exp(a * std::abs(skorohod_G(omega, f))));
    }
    ExpMomentResult r;
    r.estimate = mean_of(vals);
    r.stderr_ = stderr_of(vals);
    r.bound = 2.0 * std::exp(0.5 * a * a * f.sup_f * f.sup_f);
    const double rel = r.estimate > 0.0 ? r.stderr_ / r.estimate : 0.0;
    r.pass = r.estimate <= r.bound * (1.0 + 3.0 * rel);
    return r;
}

MomentPair resonance_variance_check(int k, long paths, int n, const RngSpec& rng) {
    if (k < 1) throw std::invalid_argument("resonance_variance_check: k >= 1 required");
    const Grid grid(n);
    const double pi = std::numbers::pi;
    const double scale = 1.0 / (k * k * pi * pi);
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(paths));
    for (long p = 0; p < paths; ++p) {
        const SamplePath omega = sample_wiener(grid, rng.with_stream(static_cast<std::uint64_t>(p)));
        double acc = 0.0;
        for (int i = 0; i < n; ++i)
            acc += std::sin(k * pi * grid.node(i)) * (omega.w[i + 1] - omega.w[i]);
        vals.push_back(scale * acc);
    }
    MomentPair mp;
    mp.mean = mean_of(vals);
    double acc = 0.0;
    for (double x : vals) acc += (x - mp.mean) * (x - mp.mean);
    mp.variance = acc / static_cast<double>(paths - 1);
    return mp;
}

}  // namespace sbvp

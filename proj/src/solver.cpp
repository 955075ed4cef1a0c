#include "sbvp/solver.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "sbvp/conditions.hpp"

namespace sbvp {

namespace {

bool finite(const GridFunction& g) {
    for (double x : g.v)
        if (!std::isfinite(x)) return false;
    return true;
}

GridFunction eval_f(const Nonlinearity& f, const GridFunction& x, const GridFunction& xp) {
    GridFunction out(x.grid);
    for (int i = 0; i < x.size(); ++i)
        out[i] = f.f(x.grid.node(i), x[i], xp[i]);
    return out;
}

double integral_residual(const GridFunction& X, const GridFunction& F, const GridFunction& Y) {
    const GridFunction KF = apply_Kop(F);
    double m = 0.0;
    for (int i = 0; i < X.size(); ++i) m = std::max(m, std::abs(X[i] - KF[i] - Y[i]));
    return m;
}

void fill_margin(SolveReport& rep, const Nonlinearity& f) {
    if (!rep.converged) return;
    const auto coeffs = linearize(f, rep.X, rep.Xp, LinearizationSource::around_X);
    rep.condition_L_margin = condition_L_margin(coeffs);
}

}  // namespace

SolveReport picard_solve(const SamplePath& omega, const Nonlinearity& f, double tol,
                         int max_iter) {
    if (tol <= 0.0 || max_iter < 1)
        throw std::invalid_argument("picard_solve: tol > 0 and max_iter >= 1 required");
    const FreeSolution fs = free_solution(omega);
    SolveReport rep{GridFunction(omega.grid), GridFunction(omega.grid)};
    rep.method = SolveMethod::picard;
    for (int k = 0; k < max_iter; ++k) {
        const GridFunction F = eval_f(f, rep.X, rep.Xp);
        if (!finite(F)) {
            rep.status = SolveStatus::nan_detected;
            rep.iterations = k;
            return rep;
        }
        GridFunction Xn = apply_Kop(F);
        GridFunction Xpn = apply_dKop(F);
        for (int i = 0; i < Xn.size(); ++i) {
            Xn[i] += fs.Y[i];
            Xpn[i] += fs.Yp[i];
        }
        Xn[0] = 0.0;
        Xn[Xn.size() - 1] = 0.0;
        const double dist = std::max(sup_diff(Xn.v, rep.X.v), sup_diff(Xpn.v, rep.Xp.v));
        rep.iterate_distances.push_back(dist);
        rep.X = std::move(Xn);
        rep.Xp = std::move(Xpn);
        rep.iterations = k + 1;
        if (dist <= tol) break;
    }
    const GridFunction F = eval_f(f, rep.X, rep.Xp);
    if (!finite(F)) {
        rep.status = SolveStatus::nan_detected;
        return rep;
    }
    rep.residual_sup = integral_residual(rep.X, F, fs.Y);
    const double last = rep.iterate_distances.empty() ? 0.0 : rep.iterate_distances.back();
    rep.converged = last <= tol;
    if (!rep.converged) rep.status = SolveStatus::max_iter;
    fill_margin(rep, f);
    return rep;
}

SolveReport newton_solve(const SamplePath& omega, const Nonlinearity& f, double tol,
                         int max_iter, const GridFunction* warm_start) {
    if (tol <= 0.0 || max_iter < 1)
        throw std::invalid_argument("newton_solve: tol > 0 and max_iter >= 1 required");
    const Grid& grid = omega.grid;
    const int N = grid.size();
    const FreeSolution fs = free_solution(omega);
    const Eigen::VectorXd w = trapezoid_weights(grid);

    SolveReport rep{GridFunction(grid), GridFunction(grid)};
    rep.method = SolveMethod::newton;
    if (warm_start != nullptr) {
        require_same_grid(grid, warm_start->grid);
        rep.X = *warm_start;
        GridFunction F0 = eval_f(f, rep.X, rep.Xp);
        rep.Xp = apply_dKop(F0);
        for (int i = 0; i < N; ++i) rep.Xp[i] += fs.Yp[i];
    }

    Eigen::MatrixXd A(N, N);
    for (int k = 0; k < max_iter; ++k) {
        GridFunction F = eval_f(f, rep.X, rep.Xp);
        if (!finite(F)) {
            rep.status = SolveStatus::nan_detected;
            rep.iterations = k;
            return rep;
        }
        const GridFunction KF = apply_Kop(F);
        Eigen::VectorXd r(N);
        for (int i = 0; i < N; ++i) r(i) = KF[i] + fs.Y[i] - rep.X[i];
        rep.residual_sup = r.cwiseAbs().maxCoeff();
        if (rep.residual_sup <= tol) {
            rep.converged = true;
            break;
        }
        // A = I - M_{a,b}, M = Nystrom of a(t)K(t,s) + b(t)dK(t,s)
        for (int i = 0; i < N; ++i) {
            const double ti = grid.node(i);
            const double a = f.fx(ti, rep.X[i], rep.Xp[i]);
            const double b = f.depends_on_y ? f.fy(ti, rep.X[i], rep.Xp[i]) : 0.0;
            for (int j = 0; j < N; ++j) {
                const double tj = grid.node(j);
                A(i, j) = -(a * eval_K(ti, tj) + b * eval_dK(ti, tj)) * w(j);
            }
            A(i, i) += 1.0;
        }
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
        if (lu.rcond() < 1e-12) {
            rep.status = SolveStatus::resonant_iterate;
            rep.iterations = k;
            return rep;
        }
        const Eigen::VectorXd delta = lu.solve(r);
        rep.iterate_distances.push_back(delta.cwiseAbs().maxCoeff());
        for (int i = 0; i < N; ++i) rep.X[i] += delta(i);
        rep.X[0] = 0.0;
        rep.X[N - 1] = 0.0;
        // derivative iterate through the dK kernel, never by differencing X
        const int sweeps = f.depends_on_y ? 2 : 1;
        for (int s = 0; s < sweeps; ++s) {
            GridFunction Fn = eval_f(f, rep.X, rep.Xp);
            rep.Xp = apply_dKop(Fn);
            for (int i = 0; i < N; ++i) rep.Xp[i] += fs.Yp[i];
        }
        rep.iterations = k + 1;
    }
    if (!rep.converged) rep.status = SolveStatus::max_iter;
    fill_margin(rep, f);
    return rep;
}

SolveReport linear_solve(const SamplePath& omega, double mu) {
    const Grid& grid = omega.grid;
    const int N = grid.size();
    const FreeSolution fs = free_solution(omega);
    const KernelMatrix km = nystrom([](double t, double s) { return eval_K(t, s); }, grid);
    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(N, N) - mu * km.scaled;

    SolveReport rep{GridFunction(grid), GridFunction(grid)};
    rep.method = SolveMethod::linear;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(A);
    rep.sigma_min = svd.singularValues()(svd.singularValues().size() - 1);
    if (rep.sigma_min < 1e-12) {
        rep.status = SolveStatus::resonant_iterate;
        return rep;
    }
    Eigen::VectorXd y(N);
    for (int i = 0; i < N; ++i) y(i) = fs.Y[i];
    const Eigen::VectorXd x = Eigen::PartialPivLU<Eigen::MatrixXd>(A).solve(y);
    for (int i = 0; i < N; ++i) rep.X[i] = x(i);
    rep.X[0] = 0.0;
    rep.X[N - 1] = 0.0;
    GridFunction F(grid);
    for (int i = 0; i < N; ++i) F[i] = mu * rep.X[i];
    rep.Xp = apply_dKop(F);
    for (int i = 0; i < N; ++i) rep.Xp[i] += fs.Yp[i];
    rep.residual_sup = integral_residual(rep.X, F, fs.Y);
    rep.converged = true;
    rep.iterations = 1;
    return rep;
}

SamplePath apply_T(const SamplePath& omega, const Nonlinearity& f) {
    const FreeSolution fs = free_solution(omega);
    const GridFunction F = [&] {
        GridFunction out(omega.grid);
        for (int i = 0; i < out.size(); ++i)
            out[i] = f.f(omega.grid.node(i), fs.Y[i], fs.Yp[i]);
        return out;
    }();
    const GridFunction C = cumtrapz(F);
    SamplePath out(omega.grid);
    for (int i = 0; i < C.size(); ++i) out.w[i] = omega.w[i] + C[i];
    return out;
}

SamplePath apply_S(const SamplePath& omega, const SolveReport& report, const Nonlinearity& f) {
    require_same_grid(omega.grid, report.X.grid);
    GridFunction F(omega.grid);
    for (int i = 0; i < F.size(); ++i)
        F[i] = f.f(omega.grid.node(i), report.X[i], report.Xp[i]);
    const GridFunction C = cumtrapz(F);
    SamplePath out(omega.grid);
    for (int i = 0; i < C.size(); ++i) out.w[i] = omega.w[i] - C[i];
    return out;
}

double residual(const SamplePath& omega, const GridFunction& X, const GridFunction& Xp,
                const Nonlinearity& f) {
    require_same_grid(omega.grid, X.grid);
    require_same_grid(omega.grid, Xp.grid);
    GridFunction F(omega.grid);
    for (int i = 0; i < F.size(); ++i) F[i] = f.f(omega.grid.node(i), X[i], Xp[i]);
    const GridFunction C = cumtrapz(F);
    double m = 0.0;
    for (int i = 0; i < X.size(); ++i)
        m = std::max(m, std::abs(Xp[i] + C[i] - Xp[0] - omega.w[i]));
    return m + std::abs(X[0]) + std::abs(X[X.size() - 1]);
}

}  // namespace sbvp

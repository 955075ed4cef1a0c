#include "sbvp/green.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sbvp {

double eval_K(double t, double s) {
    if (t < 0.0 || t > 1.0 || s < 0.0 || s > 1.0)
        throw std::invalid_argument("eval_K: arguments outside [0,1]");
    return std::min(t, s) - t * s;
}

double eval_dK(double t, double s) {
    if (t < 0.0 || t > 1.0 || s < 0.0 || s > 1.0)
        throw std::invalid_argument("eval_dK: arguments outside [0,1]");
    if (s > t) return 1.0 - s;
    if (s < t) return -s;
    return 0.5 - t;  // midpoint convention on the diagonal
}

GridFunction apply_Kop(const GridFunction& v) {
    // Kop(v)(t) = t * \int_0^1 G - \int_0^t G with G = cumtrapz(v); this is
    // the integration-by-parts form of \int_0^1 K(t,s) v_s ds and vanishes
    // exactly at both endpoints.
    const GridFunction G = cumtrapz(v);
    const GridFunction GG = cumtrapz(G);
    const double total = GG[GG.size() - 1];
    GridFunction out(v.grid);
    for (int i = 0; i < out.size(); ++i) out[i] = v.grid.node(i) * total - GG[i];
    out[0] = 0.0;
    out[out.size() - 1] = 0.0;
    return out;
}

GridFunction apply_dKop(const GridFunction& v) {
    const GridFunction G = cumtrapz(v);
    GridFunction GG = cumtrapz(G);
    const double total = GG[GG.size() - 1];
    GridFunction out(v.grid);
    for (int i = 0; i < out.size(); ++i) out[i] = total - G[i];
    return out;
}

FreeSolution free_solution(const SamplePath& omega) {
    const GridFunction w(omega.grid, omega.w);
    const GridFunction C = cumtrapz(w);
    const double total = C[C.size() - 1];
    FreeSolution fs{GridFunction(omega.grid), GridFunction(omega.grid)};
    for (int i = 0; i < C.size(); ++i) {
        fs.Y[i] = C[i] - omega.grid.node(i) * total;
        fs.Yp[i] = omega.w[i] - total;
    }
    fs.Y[0] = 0.0;
    fs.Y[fs.Y.size() - 1] = 0.0;
    return fs;
}

Eigen::VectorXd trapezoid_weights(const Grid& grid) {
    Eigen::VectorXd w = Eigen::VectorXd::Constant(grid.size(), grid.h());
    w(0) = 0.5 * grid.h();
    w(grid.size() - 1) = 0.5 * grid.h();
    return w;
}

double KernelMatrix::hs_norm_sq() const {
    double acc = 0.0;
    for (int i = 0; i < scaled.rows(); ++i)
        for (int j = 0; j < scaled.cols(); ++j) {
            const double k = scaled(i, j) / weights(j);
            acc += weights(i) * k * k * weights(j);
        }
    return acc;
}

GridFunction KernelMatrix::apply(const GridFunction& v) const {
    require_same_grid(grid, v.grid);
    Eigen::Map<const Eigen::VectorXd> x(v.v.data(), v.size());
    Eigen::VectorXd y = scaled * x;
    GridFunction out(grid);
    for (int i = 0; i < out.size(); ++i) out[i] = y(i);
    return out;
}

KernelMatrix nystrom(const std::function<double(double, double)>& kernel, const Grid& grid) {
    const int m = grid.size();
    KernelMatrix km{grid, Eigen::MatrixXd(m, m), trapezoid_weights(grid)};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            km.scaled(i, j) = kernel(grid.node(i), grid.node(j)) * km.weights(j);
    return km;
}

std::vector<std::complex<double>> kernel_matrix_spectrum(const KernelMatrix& m) {
    const int N = static_cast<int>(m.scaled.rows());
    // kernel_ij = scaled_ij / w_j; symmetric kernels go through the
    // similarity-transformed self-adjoint solver.
    Eigen::MatrixXd kernel = m.scaled;
    for (int j = 0; j < N; ++j) kernel.col(j) /= m.weights(j);
    const double asym = (kernel - kernel.transpose()).cwiseAbs().maxCoeff();
    std::vector<std::complex<double>> out;
    out.reserve(N);
    if (asym < 1e-12 * std::max(1.0, kernel.cwiseAbs().maxCoeff())) {
        Eigen::VectorXd sq = m.weights.cwiseSqrt();
        Eigen::MatrixXd sym = sq.asDiagonal() * kernel * sq.asDiagonal();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("kernel_matrix_spectrum: self-adjoint solver failed");
        for (int i = 0; i < N; ++i) out.emplace_back(es.eigenvalues()(i), 0.0);
    } else {
        Eigen::EigenSolver<Eigen::MatrixXd> es(m.scaled, /*computeEigenvectors=*/false);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("kernel_matrix_spectrum: eigen solver failed");
        for (int i = 0; i < N; ++i) out.push_back(es.eigenvalues()(i));
    }
    return out;
}

std::vector<EigenPair> kop_eigensystem(const KernelMatrix& m, int count) {
    const int N = static_cast<int>(m.scaled.rows());
    Eigen::EigenSolver<Eigen::MatrixXd> es(m.scaled, /*computeEigenvectors=*/true);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("kop_eigensystem: eigen solver did not converge");
    std::vector<int> order(N);
    for (int i = 0; i < N; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::abs(es.eigenvalues()(a)) > std::abs(es.eigenvalues()(b));
    });
    std::vector<EigenPair> out;
    const int take = std::min(count, N);
    for (int k = 0; k < take; ++k) {
        EigenPair p;
        p.value = es.eigenvalues()(order[k]);
        p.vec.resize(N);
        for (int i = 0; i < N; ++i) p.vec[i] = es.eigenvectors()(i, order[k]);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace sbvp

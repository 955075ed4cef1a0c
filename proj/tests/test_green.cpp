#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "sbvp/green.hpp"
#include "sbvp/rng.hpp"

using namespace sbvp;

namespace {
constexpr double pi = std::numbers::pi;

// independent 2-d trapezoid quadrature of kernel(t,s)^2 over the unit square
double hs_norm_sq_2d(double (*kernel)(double, double), int n) {
    const double h = 1.0 / n;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const double wi = (i == 0 || i == n) ? 0.5 : 1.0;
            const double wj = (j == 0 || j == n) ? 0.5 : 1.0;
            const double k = kernel(i * h, j * h);
            acc += wi * wj * k * k;
        }
    return acc * h * h;
}
}  // namespace

TEST_CASE("green kernel pointwise values") {
    CHECK(eval_K(0.25, 0.5) == doctest::Approx(0.125));
    CHECK(eval_K(0.5, 0.25) == doctest::Approx(0.125));  // symmetry
    CHECK(eval_K(0.0, 0.7) == 0.0);
    CHECK(eval_K(1.0, 0.7) == doctest::Approx(0.0));
    CHECK(eval_K(0.3, 0.3) == doctest::Approx(0.21));
    CHECK_THROWS_AS(eval_K(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(eval_K(0.5, 1.2), std::invalid_argument);
}

TEST_CASE("green kernel derivative branches") {
    CHECK(eval_dK(0.25, 0.5) == doctest::Approx(0.5));    // s > t: 1 - s
    CHECK(eval_dK(0.5, 0.25) == doctest::Approx(-0.25));  // s < t: -s
    CHECK(eval_dK(0.4, 0.4) == doctest::Approx(0.1));     // diagonal midpoint: 1/2 - t
    CHECK_THROWS_AS(eval_dK(2.0, 0.5), std::invalid_argument);
}

TEST_CASE("integral operator on the constant function is exact") {
    const Grid g(16);
    const GridFunction one(g, 1.0);
    const GridFunction out = apply_Kop(one);
    for (int i = 0; i < out.size(); ++i) {
        const double t = g.node(i);
        CHECK(out[i] == doctest::Approx(0.5 * t * (1.0 - t)).epsilon(1e-14));
    }
    CHECK(out[0] == 0.0);
    CHECK(out[out.size() - 1] == 0.0);
    const GridFunction dout = apply_dKop(one);
    for (int i = 0; i < dout.size(); ++i)
        CHECK(dout[i] == doctest::Approx(0.5 - g.node(i)).epsilon(1e-14));
}

TEST_CASE("integral operator reproduces the sine eigenfunction") {
    const Grid g(1 << 9);
    GridFunction v(g);
    for (int i = 0; i < v.size(); ++i) v[i] = std::sin(pi * g.node(i));
    const GridFunction out = apply_Kop(v);
    const GridFunction dout = apply_dKop(v);
    double err = 0.0, derr = 0.0;
    for (int i = 0; i < out.size(); ++i) {
        const double t = g.node(i);
        err = std::max(err, std::abs(out[i] - std::sin(pi * t) / (pi * pi)));
        derr = std::max(derr, std::abs(dout[i] - std::cos(pi * t) / pi));
    }
    CHECK(err < 1e-5);
    CHECK(derr < 1e-5);
}

TEST_CASE("composed operator agrees with the quadrature matrix") {
    const Grid g(1 << 9);
    GridFunction v(g);
    for (int i = 0; i < v.size(); ++i) v[i] = std::sin(3.0 * g.node(i)) + 0.3;
    const GridFunction fast = apply_Kop(v);
    const KernelMatrix km = nystrom([](double t, double s) { return eval_K(t, s); }, g);
    const GridFunction slow = km.apply(v);
    CHECK(sup_diff(fast.v, slow.v) < 1e-5);
}

TEST_CASE("free solution of a smooth path") {
    const Grid g(1 << 10);
    SamplePath omega(g);
    for (int i = 0; i < g.size(); ++i) omega.w[i] = g.node(i) * g.node(i);
    const FreeSolution fs = free_solution(omega);
    CHECK(fs.Y[0] == 0.0);
    CHECK(fs.Y[fs.Y.size() - 1] == 0.0);
    double err = 0.0, derr = 0.0;
    for (int i = 0; i < fs.Y.size(); ++i) {
        const double t = g.node(i);
        err = std::max(err, std::abs(fs.Y[i] - (t * t * t / 3.0 - t / 3.0)));
        derr = std::max(derr, std::abs(fs.Yp[i] - (t * t - 1.0 / 3.0)));
    }
    CHECK(err < 1e-6);
    CHECK(derr < 1e-6);
}

TEST_CASE("free solution derivative is the exact formula, not a difference") {
    const Grid g(128);
    const SamplePath omega = sample_wiener(g, RngSpec{5, 1});
    const FreeSolution fs = free_solution(omega);
    GridFunction w(g, omega.w);
    const double total = quad_trapezoid(w);
    for (int i = 0; i < fs.Yp.size(); ++i)
        CHECK(fs.Yp[i] == doctest::Approx(omega.w[i] - total).epsilon(1e-14));
}

TEST_CASE("hilbert-schmidt norms of the kernel and its derivative") {
    const Grid g(1 << 9);
    const KernelMatrix k = nystrom([](double t, double s) { return eval_K(t, s); }, g);
    CHECK(k.hs_norm_sq() == doctest::Approx(1.0 / 90.0).epsilon(1e-4));
    CHECK(k.hs_norm_sq() == doctest::Approx(hs_norm_sq_2d(&eval_K, 1 << 9)).epsilon(1e-12));
    const KernelMatrix dk = nystrom([](double t, double s) { return eval_dK(t, s); }, g);
    CHECK(dk.hs_norm_sq() == doctest::Approx(1.0 / 6.0).epsilon(1e-2));
}

TEST_CASE("spectrum of the integral operator matches 1/(k pi)^2") {
    const Grid g(1 << 8);
    const KernelMatrix km = nystrom([](double t, double s) { return eval_K(t, s); }, g);
    const auto pairs = kop_eigensystem(km, 3);
    REQUIRE(pairs.size() == 3);
    for (int k = 1; k <= 3; ++k) {
        const auto& p = pairs[k - 1];
        CHECK(std::abs(p.value.imag()) < 1e-10);
        CHECK(p.value.real() == doctest::Approx(1.0 / (k * k * pi * pi)).epsilon(1e-3));
        // eigenvector should be proportional to sin(k pi t): check collinearity
        double dot = 0.0, na = 0.0, nb = 0.0;
        for (int i = 0; i < g.size(); ++i) {
            const double e = std::sin(k * pi * g.node(i));
            const double u = p.vec[i].real();
            dot += e * u;
            na += e * e;
            nb += u * u;
        }
        CHECK(std::abs(dot) / std::sqrt(na * nb) == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("symmetric kernel spectrum is real and traces correctly") {
    const Grid g(1 << 7);
    const KernelMatrix km = nystrom([](double t, double s) { return eval_K(t, s); }, g);
    const auto spectrum = kernel_matrix_spectrum(km);
    double trace = 0.0;
    for (const auto& lam : spectrum) {
        CHECK(lam.imag() == 0.0);
        trace += lam.real();
    }
    // trace of the operator = \int K(t,t) dt = \int t(1-t) dt = 1/6
    CHECK(trace == doctest::Approx(1.0 / 6.0).epsilon(1e-3));
}

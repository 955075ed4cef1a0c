#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "sbvp/grid.hpp"
#include "sbvp/rng.hpp"

using namespace sbvp;

TEST_CASE("grid validation and geometry") {
    CHECK_THROWS_AS(Grid(1), std::invalid_argument);
    CHECK_THROWS_AS(Grid(-3), std::invalid_argument);
    const Grid g(8);
    CHECK(g.n() == 8);
    CHECK(g.size() == 9);
    CHECK(g.h() == doctest::Approx(0.125));
    CHECK(g.node(0) == 0.0);
    CHECK(g.node(8) == doctest::Approx(1.0));
    CHECK(Grid(8) == Grid(8));
    CHECK(Grid(8) != Grid(16));
}

TEST_CASE("grid function construction") {
    const Grid g(4);
    GridFunction f(g, 2.5);
    CHECK(f.size() == 5);
    CHECK(f[3] == 2.5);
    CHECK(f.sup_norm() == 2.5);
    f[2] = -7.0;
    CHECK(f.sup_norm() == 7.0);
    CHECK_THROWS_AS(GridFunction(g, std::vector<double>{1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("sample path invariant") {
    const Grid g(2);
    CHECK_NOTHROW(SamplePath(g, {0.0, 1.0, -1.0}));
    CHECK_THROWS_AS(SamplePath(g, {0.5, 1.0, -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(SamplePath(g, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("trapezoid quadrature is exact for affine integrands") {
    const Grid g(7);
    GridFunction f(g);
    for (int i = 0; i < f.size(); ++i) f[i] = 2.0 * g.node(i) + 1.0;
    CHECK(quad_trapezoid(f) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("cumtrapz endpoints and consistency with quad") {
    const Grid g(16);
    GridFunction f(g);
    for (int i = 0; i < f.size(); ++i) f[i] = std::sin(3.0 * g.node(i));
    const GridFunction F = cumtrapz(f);
    CHECK(F[0] == 0.0);
    CHECK(F[F.size() - 1] == doctest::Approx(quad_trapezoid(f)).epsilon(1e-15));
    // second-order accuracy against the antiderivative
    const Grid fine(1 << 10);
    GridFunction ff(fine);
    for (int i = 0; i < ff.size(); ++i) ff[i] = std::sin(3.0 * fine.node(i));
    const GridFunction FF = cumtrapz(ff);
    double err = 0.0;
    for (int i = 0; i < FF.size(); ++i)
        err = std::max(err, std::abs(FF[i] - (1.0 - std::cos(3.0 * fine.node(i))) / 3.0));
    CHECK(err < 1e-6);
}

TEST_CASE("shift path stays anchored at zero") {
    const Grid g(4);
    SamplePath w(g, {0.0, 1.0, 2.0, 1.0, 0.5});
    GridFunction s(g);
    for (int i = 0; i < s.size(); ++i) s[i] = 0.5 * g.node(i);
    const SamplePath shifted = shift_path(w, s);
    CHECK(shifted.w[0] == 0.0);
    CHECK(shifted.w[2] == doctest::Approx(2.25));
    s[0] = 1.0;
    CHECK_THROWS_AS(shift_path(w, s), std::invalid_argument);
}

TEST_CASE("mismatched grids are rejected") {
    CHECK_THROWS_AS(require_same_grid(Grid(4), Grid(8)), std::invalid_argument);
    CHECK_NOTHROW(require_same_grid(Grid(4), Grid(4)));
}

TEST_CASE("rng reproducibility across instances") {
    const Grid g(64);
    const RngSpec spec{123, 7};
    const SamplePath a = sample_wiener(g, spec);
    const SamplePath b = sample_wiener(g, spec);
    CHECK(a.w == b.w);
    const SamplePath c = sample_wiener(g, spec.with_stream(8));
    CHECK(a.w != c.w);
    const SamplePath d = sample_wiener(g, RngSpec{124, 7});
    CHECK(a.w != d.w);
    CHECK(a.w[0] == 0.0);
}

TEST_CASE("wiener increments have the right first two moments") {
    const Grid g(32);
    const long N = 20000;
    double sum_w1 = 0.0, sum_w1_sq = 0.0;
    for (long p = 0; p < N; ++p) {
        const SamplePath w = sample_wiener(g, RngSpec{42, static_cast<std::uint64_t>(p)});
        const double w1 = w.w[g.size() - 1];
        sum_w1 += w1;
        sum_w1_sq += w1 * w1;
    }
    const double mean = sum_w1 / N;
    const double var = sum_w1_sq / N - mean * mean;
    // w(1) ~ N(0,1): mean within 3 sigma, variance within a generous band
    CHECK(std::abs(mean) < 3.0 / std::sqrt(static_cast<double>(N)));
    CHECK(var == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("normal generator basic moments") {
    NormalRng rng(RngSpec{9, 0});
    const long N = 100000;
    double s1 = 0.0, s2 = 0.0, s4 = 0.0;
    for (long i = 0; i < N; ++i) {
        const double x = rng.next();
        s1 += x;
        s2 += x * x;
        s4 += x * x * x * x;
    }
    CHECK(std::abs(s1 / N) < 0.02);
    CHECK(s2 / N == doctest::Approx(1.0).epsilon(0.03));
    CHECK(s4 / N == doctest::Approx(3.0).epsilon(0.1));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include "doctest.h"
#include "sbvp/sbvp_c.h"

TEST_CASE("grid lifecycle and validation") {
    sbvp_grid* g = nullptr;
    REQUIRE(sbvp_grid_create(64, &g) == SBVP_OK);
    CHECK(sbvp_grid_n(g) == 64);
    sbvp_grid_destroy(g);

    sbvp_grid* bad = nullptr;
    CHECK(sbvp_grid_create(1, &bad) == SBVP_INVALID_ARGUMENT);
    CHECK(std::strlen(sbvp_last_error()) > 0);
    CHECK(sbvp_grid_create(8, nullptr) == SBVP_INVALID_ARGUMENT);
    CHECK(sbvp_grid_n(nullptr) == -1);
}

TEST_CASE("path sampling is reproducible and length-checked") {
    sbvp_grid* g = nullptr;
    REQUIRE(sbvp_grid_create(32, &g) == SBVP_OK);
    sbvp_path *a = nullptr, *b = nullptr;
    REQUIRE(sbvp_path_sample(g, 5, 9, &a) == SBVP_OK);
    REQUIRE(sbvp_path_sample(g, 5, 9, &b) == SBVP_OK);
    std::vector<double> va(33), vb(33);
    REQUIRE(sbvp_path_values(a, va.data(), va.size()) == SBVP_OK);
    REQUIRE(sbvp_path_values(b, vb.data(), vb.size()) == SBVP_OK);
    CHECK(va == vb);
    CHECK(va[0] == 0.0);
    CHECK(sbvp_path_values(a, va.data(), 7) == SBVP_INVALID_ARGUMENT);
    sbvp_path_destroy(a);
    sbvp_path_destroy(b);
    sbvp_grid_destroy(g);
}

TEST_CASE("nonlinearity construction errors surface through the status code") {
    sbvp_nonlinearity* f = nullptr;
    CHECK(sbvp_nonlinearity_create("no-such-f", nullptr, 0, &f) == SBVP_INVALID_ARGUMENT);
    const double p[] = {1.0, 2.0};
    CHECK(sbvp_nonlinearity_create("sine", p, 2, &f) == SBVP_INVALID_ARGUMENT);
    REQUIRE(sbvp_nonlinearity_create("sine", p, 1, &f) == SBVP_OK);
    sbvp_nonlinearity_destroy(f);
}

TEST_CASE("solving through the c api") {
    sbvp_grid* g = nullptr;
    REQUIRE(sbvp_grid_create(256, &g) == SBVP_OK);
    sbvp_path* omega = nullptr;
    REQUIRE(sbvp_path_sample(g, 42, 0, &omega) == SBVP_OK);
    const double mu = 2.0;
    sbvp_nonlinearity* f = nullptr;
    REQUIRE(sbvp_nonlinearity_create("linear", &mu, 1, &f) == SBVP_OK);

    sbvp_solution *picard = nullptr, *direct = nullptr;
    REQUIRE(sbvp_solve(omega, f, 0, 1e-9, 200, &picard) == SBVP_OK);
    REQUIRE(sbvp_solve(omega, f, 2, 1e-9, 1, &direct) == SBVP_OK);

    int converged = 0, iterations = 0;
    double residual = 1.0;
    REQUIRE(sbvp_solution_stats(picard, &converged, &iterations, &residual) == SBVP_OK);
    CHECK(converged == 1);
    CHECK(iterations > 1);
    CHECK(residual < 1e-8);

    std::vector<double> x1(257), x2(257);
    REQUIRE(sbvp_solution_values(picard, x1.data(), nullptr, x1.size()) == SBVP_OK);
    REQUIRE(sbvp_solution_values(direct, x2.data(), nullptr, x2.size()) == SBVP_OK);
    CHECK(x1[0] == 0.0);
    CHECK(x1[256] == 0.0);
    double diff = 0.0;
    for (int i = 0; i < 257; ++i) diff = std::max(diff, std::abs(x1[i] - x2[i]));
    CHECK(diff < 1e-3);
    CHECK(sbvp_solution_values(picard, x1.data(), nullptr, 3) == SBVP_GRID_MISMATCH);

    sbvp_solution* bad = nullptr;
    CHECK(sbvp_solve(omega, f, 7, 1e-9, 10, &bad) == SBVP_INVALID_ARGUMENT);

    sbvp_solution_destroy(picard);
    sbvp_solution_destroy(direct);
    sbvp_nonlinearity_destroy(f);
    sbvp_path_destroy(omega);
    sbvp_grid_destroy(g);
}

TEST_CASE("density evaluation through the c api") {
    sbvp_grid* g = nullptr;
    REQUIRE(sbvp_grid_create(128, &g) == SBVP_OK);
    sbvp_path* omega = nullptr;
    REQUIRE(sbvp_path_sample(g, 3, 3, &omega) == SBVP_OK);
    sbvp_nonlinearity* zero = nullptr;
    REQUIRE(sbvp_nonlinearity_create("zero", nullptr, 0, &zero) == SBVP_OK);

    sbvp_girsanov_sample s;
    REQUIRE(sbvp_eta(omega, zero, &s) == SBVP_OK);
    CHECK(s.eta == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.delta_G == 0.0);
    CHECK(s.g_norm_sq == 0.0);

    sbvp_nonlinearity_destroy(zero);
    sbvp_path_destroy(omega);
    sbvp_grid_destroy(g);
}

TEST_CASE("determinant routes through the c api") {
    const double pi = std::numbers::pi;
    double closed = 0.0, eigen = 0.0;
    REQUIRE(sbvp_det2_constant(0.25 * pi * pi, 0.0, 512, 0, &closed) == SBVP_OK);
    REQUIRE(sbvp_det2_constant(0.25 * pi * pi, 0.0, 512, 1, &eigen) == SBVP_OK);
    CHECK(closed == doctest::Approx(0.9604540010238762).epsilon(1e-5));
    CHECK(eigen == doctest::Approx(closed).epsilon(1e-3));
    double out = 0.0;
    CHECK(sbvp_det2_constant(1.0, 0.0, 64, 9, &out) == SBVP_INVALID_ARGUMENT);
}

TEST_CASE("threshold functions through the c api") {
    const double pi = std::numbers::pi;
    CHECK(sbvp_alpha(0.0, 1.0) == doctest::Approx(0.5 * pi));
    CHECK(sbvp_alpha(4.0, 4.0) == doctest::Approx(0.5));
    CHECK(std::isinf(sbvp_beta(2.0, 0.0)));
}

TEST_CASE("config runner through the c api") {
    int exit_code = -1;
    char msg[1024] = {0};
    REQUIRE(sbvp_run("scenario=never-heard-of-it\n", &exit_code, msg, sizeof msg) == SBVP_OK);
    CHECK(exit_code == 1);
    CHECK(std::strlen(msg) > 0);

    const auto dir = std::filesystem::temp_directory_path() / "sbvp_capi_run";
    std::filesystem::remove_all(dir);
    const std::string cfg = "scenario=alpha-table\nseed=1\nout=" + dir.string() + "\n";
    REQUIRE(sbvp_run(cfg.c_str(), &exit_code, msg, sizeof msg) == SBVP_OK);
    CHECK(exit_code == 0);
    CHECK(std::filesystem::exists(dir / "alpha-table.csv"));
    std::filesystem::remove_all(dir);

    CHECK(sbvp_run(nullptr, &exit_code, msg, sizeof msg) == SBVP_INVALID_ARGUMENT);
}

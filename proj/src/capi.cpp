#include "sbvp/sbvp_c.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "sbvp/carleman.hpp"
#include "sbvp/catalog.hpp"
#include "sbvp/conditions.hpp"
#include "sbvp/girsanov.hpp"
#include "sbvp/rng.hpp"
#include "sbvp/scenarios.hpp"
#include "sbvp/solver.hpp"

struct sbvp_grid {
    sbvp::Grid grid;
};
struct sbvp_path {
    sbvp::SamplePath path;
};
struct sbvp_nonlinearity {
    sbvp::Nonlinearity f;
};
struct sbvp_solution {
    sbvp::SolveReport report;
};

namespace {

thread_local std::string g_last_error;

sbvp_status fail(sbvp_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
sbvp_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(SBVP_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SBVP_INTERNAL_ERROR, "out of memory");
    } catch (const std::exception& e) {
        return fail(SBVP_INTERNAL_ERROR, e.what());
    } catch (...) {
        return fail(SBVP_INTERNAL_ERROR, "unknown error");
    }
}

}  // namespace

extern "C" {

const char* sbvp_last_error(void) { return g_last_error.c_str(); }

sbvp_status sbvp_grid_create(int n, sbvp_grid** out) {
    if (out == nullptr) return fail(SBVP_INVALID_ARGUMENT, "out is null");
    return guarded([&] {
        *out = new sbvp_grid{sbvp::Grid(n)};
        return SBVP_OK;
    });
}

void sbvp_grid_destroy(sbvp_grid* g) { delete g; }

int sbvp_grid_n(const sbvp_grid* g) { return g == nullptr ? -1 : g->grid.n(); }

sbvp_status sbvp_path_sample(const sbvp_grid* g, uint64_t seed, uint64_t stream_id,
                             sbvp_path** out) {
    if (g == nullptr || out == nullptr) return fail(SBVP_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new sbvp_path{sbvp::sample_wiener(g->grid, sbvp::RngSpec{seed, stream_id})};
        return SBVP_OK;
    });
}

void sbvp_path_destroy(sbvp_path* p) { delete p; }

sbvp_status sbvp_path_values(const sbvp_path* p, double* values, size_t len) {
    if (p == nullptr || values == nullptr) return fail(SBVP_INVALID_ARGUMENT, "null argument");
    if (len != p->path.w.size())
        return fail(SBVP_INVALID_ARGUMENT, "values buffer must have grid_n + 1 entries");
    std::memcpy(values, p->path.w.data(), len * sizeof(double));
    return SBVP_OK;
}

sbvp_status sbvp_nonlinearity_create(const char* name, const double* params, size_t n_params,
                                     sbvp_nonlinearity** out) {
    if (name == nullptr || out == nullptr) return fail(SBVP_INVALID_ARGUMENT, "null argument");
    if (n_params > 0 && params == nullptr)
        return fail(SBVP_INVALID_ARGUMENT, "params is null with n_params > 0");
    return guarded([&] {
        std::vector<double> ps(params, params + n_params);
        *out = new sbvp_nonlinearity{sbvp::make_nonlinearity(name, ps)};
        return SBVP_OK;
    });
}

void sbvp_nonlinearity_destroy(sbvp_nonlinearity* f) { delete f; }

sbvp_status sbvp_solve(const sbvp_path* omega, const sbvp_nonlinearity* f, int method,
                       double tol, int max_iter, sbvp_solution** out) {
    if (omega == nullptr || f == nullptr || out == nullptr)
        return fail(SBVP_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> sbvp_status {
        if (method < 0 || method > 2)
            return fail(SBVP_INVALID_ARGUMENT, "method must be 0, 1 or 2");
        if (method == 2 && f->f.name != "linear")
            return fail(SBVP_INVALID_ARGUMENT,
                        "method 2 (linear) requires the 'linear' nonlinearity");
        sbvp::SolveReport rep = [&] {
            switch (method) {
                case 0: return sbvp::picard_solve(omega->path, f->f, tol, max_iter);
                case 1: return sbvp::newton_solve(omega->path, f->f, tol, max_iter);
                default: return sbvp::linear_solve(omega->path, f->f.fx(0.0, 0.0, 0.0));
            }
        }();
        if (rep.status == sbvp::SolveStatus::resonant_iterate) {
            return fail(SBVP_SINGULAR, "linearized system is numerically singular");
        }
        if (!rep.converged) {
            *out = new sbvp_solution{std::move(rep)};
            return fail(SBVP_NOT_CONVERGED, "solver did not reach tolerance");
        }
        *out = new sbvp_solution{std::move(rep)};
        return SBVP_OK;
    });
}

void sbvp_solution_destroy(sbvp_solution* s) { delete s; }

sbvp_status sbvp_solution_values(const sbvp_solution* s, double* x, double* xp, size_t len) {
    if (s == nullptr) return fail(SBVP_INVALID_ARGUMENT, "null solution");
    if (len != static_cast<size_t>(s->report.X.size()))
        return fail(SBVP_GRID_MISMATCH, "buffer length does not match solution grid");
    if (x != nullptr) std::memcpy(x, s->report.X.v.data(), len * sizeof(double));
    if (xp != nullptr) std::memcpy(xp, s->report.Xp.v.data(), len * sizeof(double));
    return SBVP_OK;
}

sbvp_status sbvp_solution_stats(const sbvp_solution* s, int* converged, int* iterations,
                                double* residual_sup) {
    if (s == nullptr) return fail(SBVP_INVALID_ARGUMENT, "null solution");
    if (converged != nullptr) *converged = s->report.converged ? 1 : 0;
    if (iterations != nullptr) *iterations = s->report.iterations;
    if (residual_sup != nullptr) *residual_sup = s->report.residual_sup;
    return SBVP_OK;
}

sbvp_status sbvp_eta(const sbvp_path* omega, const sbvp_nonlinearity* f,
                     sbvp_girsanov_sample* out) {
    if (omega == nullptr || f == nullptr || out == nullptr)
        return fail(SBVP_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const sbvp::GirsanovSample s = sbvp::eta_density(omega->path, f->f);
        out->delta_G = s.delta_G;
        out->det2 = s.det2;
        out->g_norm_sq = s.g_norm_sq;
        out->eta = s.eta;
        return SBVP_OK;
    });
}

sbvp_status sbvp_det2_constant(double a, double b, int n, int route, double* out) {
    if (out == nullptr) return fail(SBVP_INVALID_ARGUMENT, "out is null");
    return guarded([&]() -> sbvp_status {
        const sbvp::Grid grid(n);
        const sbvp::HSOperatorSpec spec = sbvp::constant_spec(grid, a, b);
        switch (route) {
            case 0: *out = sbvp::det2_closed_form(spec).value; return SBVP_OK;
            case 1: *out = sbvp::det2_eigen_product(spec).value; return SBVP_OK;
            default: return fail(SBVP_INVALID_ARGUMENT, "route must be 0 or 1");
        }
    });
}

double sbvp_alpha(double L, double K) { return sbvp::alpha(L, K); }

double sbvp_beta(double L, double K) { return sbvp::beta(L, K); }

sbvp_status sbvp_run(const char* config_text, int* exit_code, char* msg_buf, size_t msg_len) {
    if (config_text == nullptr || exit_code == nullptr)
        return fail(SBVP_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> sbvp_status {
        std::string messages;
        try {
            *exit_code = sbvp::run_from_text(config_text, messages);
        } catch (const std::runtime_error& e) {
            if (msg_buf != nullptr && msg_len > 0) {
                std::strncpy(msg_buf, e.what(), msg_len - 1);
                msg_buf[msg_len - 1] = '\0';
            }
            return fail(SBVP_IO_ERROR, e.what());
        }
        if (msg_buf != nullptr && msg_len > 0) {
            std::strncpy(msg_buf, messages.c_str(), msg_len - 1);
            msg_buf[msg_len - 1] = '\0';
        }
        return SBVP_OK;
    });
}

}  // extern "C"

/* C API for the stochastic Dirichlet BVP laboratory.
 *
 * All functions return sbvp_status (except destructors); results come back
 * through out-parameters. Handles are opaque and must be released with the
 * matching _destroy call. Error messages for the last failing call on the
 * current thread are available via sbvp_last_error().
 */
#ifndef SBVP_C_H
#define SBVP_C_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sbvp_status {
    SBVP_OK = 0,
    SBVP_INVALID_ARGUMENT = 1,
    SBVP_GRID_MISMATCH = 2,
    SBVP_SINGULAR = 3,
    SBVP_NOT_CONVERGED = 4,
    SBVP_IO_ERROR = 5,
    SBVP_INTERNAL_ERROR = 6
} sbvp_status;

typedef struct sbvp_grid sbvp_grid;
typedef struct sbvp_path sbvp_path;
typedef struct sbvp_nonlinearity sbvp_nonlinearity;
typedef struct sbvp_solution sbvp_solution;

typedef struct sbvp_girsanov_sample {
    double delta_G;
    double det2;
    double g_norm_sq;
    double eta;
} sbvp_girsanov_sample;

const char* sbvp_last_error(void);

/* grids and paths */
sbvp_status sbvp_grid_create(int n, sbvp_grid** out);
void sbvp_grid_destroy(sbvp_grid* g);
int sbvp_grid_n(const sbvp_grid* g);

sbvp_status sbvp_path_sample(const sbvp_grid* g, uint64_t seed, uint64_t stream_id,
                             sbvp_path** out);
void sbvp_path_destroy(sbvp_path* p);
/* values has grid_n+1 entries */
sbvp_status sbvp_path_values(const sbvp_path* p, double* values, size_t len);

/* nonlinearity catalog (see tools --help for names) */
sbvp_status sbvp_nonlinearity_create(const char* name, const double* params,
                                     size_t n_params, sbvp_nonlinearity** out);
void sbvp_nonlinearity_destroy(sbvp_nonlinearity* f);

/* solvers: method 0 = picard, 1 = newton, 2 = linear (params[0] = mu) */
sbvp_status sbvp_solve(const sbvp_path* omega, const sbvp_nonlinearity* f, int method,
                       double tol, int max_iter, sbvp_solution** out);
void sbvp_solution_destroy(sbvp_solution* s);
sbvp_status sbvp_solution_values(const sbvp_solution* s, double* x, double* xp, size_t len);
sbvp_status sbvp_solution_stats(const sbvp_solution* s, int* converged, int* iterations,
                                double* residual_sup);

/* Girsanov density for one path */
sbvp_status sbvp_eta(const sbvp_path* omega, const sbvp_nonlinearity* f,
                     sbvp_girsanov_sample* out);

/* Carleman-Fredholm determinant for constant coefficients a, b.
 * route 0 = closed form, 1 = eigen product. */
sbvp_status sbvp_det2_constant(double a, double b, int n, int route, double* out);

/* threshold functions (may return +inf) */
double sbvp_alpha(double L, double K);
double sbvp_beta(double L, double K);

/* Config-driven experiment runner: config_text is "key=value" lines.
 * Returns the CLI exit semantics in *exit_code: 0 ok, 1 config error,
 * 2 assertion failure. Messages (violations, warnings) are copied into
 * msg_buf (truncated to msg_len, always NUL-terminated when msg_len > 0). */
sbvp_status sbvp_run(const char* config_text, int* exit_code, char* msg_buf, size_t msg_len);

#ifdef __cplusplus
}
#endif

#endif /* SBVP_C_H */

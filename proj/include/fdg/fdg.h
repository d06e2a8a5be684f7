/* C interface to the fractional diffusion DG library.
 *
 * Every call returns an fdg_status; on failure fdg_last_error() holds a
 * message for the calling thread until its next failing call. Handles are
 * opaque and owned by the caller, who releases them with the matching
 * *_destroy function (which accepts NULL).
 */
#ifndef FDG_H
#define FDG_H

#include <stddef.h>

#if defined(FDG_BUILDING_LIBRARY)
#define FDG_API __attribute__((visibility("default")))
#else
#define FDG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fdg_status {
  FDG_OK = 0,
  FDG_E_INVALID = 1,     /* argument out of range or malformed configuration */
  FDG_E_DOMAIN = 2,      /* mathematically undefined input (pole, cut, ...) */
  FDG_E_CONVERGENCE = 3, /* quadrature or inversion missed its tolerance */
  FDG_E_NULL = 4,        /* required pointer was NULL */
  FDG_E_RANGE = 5,       /* index past the end of a result */
  FDG_E_INTERNAL = 6
} fdg_status;

FDG_API const char* fdg_version(void);
FDG_API const char* fdg_last_error(void);
FDG_API const char* fdg_status_name(fdg_status status);

/* ---- fractional order ---------------------------------------------------- */

typedef struct fdg_order fdg_order;

/* 0 < nu <= 1 */
FDG_API fdg_status fdg_order_create(double nu, fdg_order** out);
FDG_API void fdg_order_destroy(fdg_order* ord);
/* any of the output pointers may be NULL */
FDG_API fdg_status fdg_order_info(const fdg_order* ord, double* nu, double* gamma_1p,
                                  double* zeta_neg);

/* ---- special functions --------------------------------------------------- */

FDG_API fdg_status fdg_gamma(double x, double* out);
/* E_nu(-s), s >= 0 */
FDG_API fdg_status fdg_mittag_leffler(const fdg_order* ord, double s, double* out);

typedef enum fdg_psi_form {
  FDG_PSI_SERIES = 0,
  FDG_PSI_INTEGRAL = 1,
  FDG_PSI_ASYM_SMALL = 2,
  FDG_PSI_ASYM_DEEP = 3
} fdg_psi_form;

FDG_API fdg_status fdg_psi(const fdg_order* ord, fdg_psi_form form, double re, double im,
                           double* out_re, double* out_im);
/* boundary value psi(s e^{+i pi}) when upper != 0, psi(s e^{-i pi}) otherwise */
FDG_API fdg_status fdg_psi_cut(const fdg_order* ord, double s, int upper, double* out_re,
                               double* out_im);

/* u0m E_nu(-lambda t^nu) by contour inversion of the mode's transform */
FDG_API fdg_status fdg_invert_mode(const fdg_order* ord, double lambda, double u0m, double t,
                                   double* out);

/* ---- time stepping ------------------------------------------------------- */

/* beta_0 .. beta_{count-1} into beta[count] */
FDG_API fdg_status fdg_weights(const fdg_order* ord, int count, double* beta);
/* U^0 .. U^{n_steps} into out[n_steps + 1] */
FDG_API fdg_status fdg_step_mode(const fdg_order* ord, double lambda, double u0m, double dt,
                                 int n_steps, double* out);

/* ---- error analysis ------------------------------------------------------ */

typedef enum fdg_delta_route { FDG_DELTA_DIRECT = 0, FDG_DELTA_CONTOUR = 1 } fdg_delta_route;

FDG_API fdg_status fdg_delta(const fdg_order* ord, double mu, int n, fdg_delta_route route,
                             double* out);

typedef struct fdg_sweep fdg_sweep;

typedef struct fdg_sweep_summary {
  double worst_ratio; /* max |delta| / (n^{-1} min(rho^2, 1/rho)) */
  double worst_mu;
  int worst_n;
  double phi1;
  double phi2;
  double min_delta;
  int negative_points;
  int guarded_points;
  size_t point_count;
} fdg_sweep_summary;

typedef struct fdg_delta_point {
  double mu;
  int n;
  double rho;
  double delta;
  double bound_ratio;
} fdg_delta_point;

/* mu = 2^j for j_min <= j <= j_max, 1 <= n <= n_max */
FDG_API fdg_status fdg_sweep_run(const fdg_order* ord, int j_min, int j_max, int n_max,
                                 fdg_sweep** out);
FDG_API void fdg_sweep_destroy(fdg_sweep* sweep);
FDG_API fdg_status fdg_sweep_summary_get(const fdg_sweep* sweep, fdg_sweep_summary* out);
FDG_API fdg_status fdg_sweep_point(const fdg_sweep* sweep, size_t index, fdg_delta_point* out);

typedef struct fdg_lemma_scan {
  double below_max;
  double above_max;
  double sector_ratio_max;
} fdg_lemma_scan;

FDG_API fdg_status fdg_lemma_scan_bounds(fdg_lemma_scan* out);
/* requires 1/2 < nu < 1 */
FDG_API fdg_status fdg_lemma_integral_zero(const fdg_order* ord, double* out);

typedef struct fdg_psi_checks {
  double series_vs_integral;
  double periodicity;
  double conjugate;
  double small_z_ratio;
  double small_z_expected;
  double min_re_psi_margin;
  double min_psi_on_line;
  double max_im_psi_on_line;
  double min_abs_one_plus_mu_psi;
} fdg_psi_checks;

FDG_API fdg_status fdg_psi_identity_checks(const fdg_order* ord, fdg_psi_checks* out);

/* ||U^n - u(t_n)||^2 two ways for the spectral path, dt = 1/N */
FDG_API fdg_status fdg_parseval_check(const fdg_order* ord, int modes, int N, int n,
                                      double* field_norm_sq, double* modal_sum);

/* ---- convergence study --------------------------------------------------- */

typedef struct fdg_convergence_config {
  double nu;
  const int* Ns; /* doubling chain */
  size_t N_count;
  int M;         /* spatial subintervals, even */
  double gamma;  /* mesh grading exponent >= 1 */
  const double* alphas;
  size_t alpha_count;
  double t_end;  /* upper end of the error window */
  int half_nodes;
} fdg_convergence_config;

/* Fills the defaults; the array pointers refer to static storage. */
FDG_API void fdg_convergence_config_default(fdg_convergence_config* cfg);
FDG_API fdg_status fdg_convergence_validate(const fdg_convergence_config* cfg);

typedef void (*fdg_progress_fn)(const char* stage, double fraction, void* user);
typedef struct fdg_convergence fdg_convergence;

FDG_API fdg_status fdg_convergence_run(const fdg_convergence_config* cfg,
                                       fdg_progress_fn progress, void* user,
                                       fdg_convergence** out);
FDG_API void fdg_convergence_destroy(fdg_convergence* run);
/* rate is NaN for the first N */
FDG_API fdg_status fdg_convergence_entry(const fdg_convergence* run, size_t N_index,
                                         size_t alpha_index, int* N, double* E, double* rate);
FDG_API fdg_status fdg_convergence_curve_length(const fdg_convergence* run, size_t N_index,
                                                size_t* length);
FDG_API fdg_status fdg_convergence_curve_point(const fdg_convergence* run, size_t N_index,
                                               size_t i, double* t, double* err);
FDG_API double fdg_expected_rate(double nu, double alpha);

#ifdef __cplusplus
}
#endif

#endif /* FDG_H */

#include "fdg/fdg.h"

#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "fdg/certification.hpp"
#include "fdg/dg_stepper.hpp"
#include "fdg/errors.hpp"
#include "fdg/experiment.hpp"
#include "fdg/laplace_inversion.hpp"
#include "fdg/special_fn.hpp"

struct fdg_order {
  fdg::special::FractionalOrder ord;
};

struct fdg_sweep {
  fdg::cert::BoundReport bound;
  fdg::cert::PhiReport phi;
};

struct fdg_convergence {
  fdg::experiment::ConvergenceResult result;
};

namespace {

thread_local std::string last_error;

fdg_status fail(fdg_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Maps exceptions escaping the C++ core onto status codes.
template <class Fn>
fdg_status guarded(Fn&& fn) {
  try {
    fn();
    return FDG_OK;
  } catch (const fdg::ConvergenceError& e) {
    return fail(FDG_E_CONVERGENCE, e.what());
  } catch (const std::domain_error& e) {
    return fail(FDG_E_DOMAIN, e.what());
  } catch (const std::out_of_range& e) {
    return fail(FDG_E_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(FDG_E_INVALID, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FDG_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FDG_E_INTERNAL, e.what());
  } catch (...) {
    return fail(FDG_E_INTERNAL, "unknown error");
  }
}

#define FDG_REQUIRE(p)                                              \
  do {                                                              \
    if (!(p)) return fail(FDG_E_NULL, #p " must not be NULL");      \
  } while (0)

const int default_Ns[] = {80, 160, 320, 640, 1280};
const double default_alphas[] = {0.6, 0.7, 0.8125};

fdg::experiment::ConvergenceConfig to_cpp(const fdg_convergence_config& c) {
  fdg::experiment::ConvergenceConfig k;
  if ((c.N_count > 0 && !c.Ns) || (c.alpha_count > 0 && !c.alphas)) {
    throw std::invalid_argument("config: array pointer is NULL");
  }
  k.nu = c.nu;
  k.Ns.assign(c.Ns, c.Ns + c.N_count);
  k.M = c.M;
  k.gamma = c.gamma;
  k.alphas.assign(c.alphas, c.alphas + c.alpha_count);
  k.t_end = c.t_end;
  k.half_nodes = c.half_nodes;
  return k;
}

}  // namespace

extern "C" {

const char* fdg_version(void) { return FDG_VERSION_STRING; }

const char* fdg_last_error(void) { return last_error.c_str(); }

const char* fdg_status_name(fdg_status status) {
  switch (status) {
    case FDG_OK: return "ok";
    case FDG_E_INVALID: return "invalid argument";
    case FDG_E_DOMAIN: return "domain error";
    case FDG_E_CONVERGENCE: return "convergence failure";
    case FDG_E_NULL: return "null pointer";
    case FDG_E_RANGE: return "index out of range";
    case FDG_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

fdg_status fdg_order_create(double nu, fdg_order** out) {
  FDG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new fdg_order{fdg::special::FractionalOrder(nu)}; });
}

void fdg_order_destroy(fdg_order* ord) { delete ord; }

fdg_status fdg_order_info(const fdg_order* ord, double* nu, double* gamma_1p, double* zeta_neg) {
  FDG_REQUIRE(ord);
  if (nu) *nu = ord->ord.nu();
  if (gamma_1p) *gamma_1p = ord->ord.gamma_1p();
  if (zeta_neg) *zeta_neg = ord->ord.zeta_neg();
  return FDG_OK;
}

fdg_status fdg_gamma(double x, double* out) {
  FDG_REQUIRE(out);
  return guarded([&] { *out = fdg::special::gamma(x); });
}

fdg_status fdg_mittag_leffler(const fdg_order* ord, double s, double* out) {
  FDG_REQUIRE(ord);
  FDG_REQUIRE(out);
  return guarded([&] { *out = fdg::special::mittag_leffler_neg(ord->ord, s); });
}

fdg_status fdg_psi(const fdg_order* ord, fdg_psi_form form, double re, double im, double* out_re,
                   double* out_im) {
  FDG_REQUIRE(ord);
  FDG_REQUIRE(out_re);
  FDG_REQUIRE(out_im);
  return guarded([&] {
    const std::complex<double> z(re, im);
    std::complex<double> v;
    switch (form) {
      case FDG_PSI_SERIES: v = fdg::special::psi_series(ord->ord, z); break;
      case FDG_PSI_INTEGRAL: v = fdg::special::psi_integral(ord->ord, z); break;
      case FDG_PSI_ASYM_SMALL: v = fdg::special::psi_asym_small(ord->ord, z); break;
      case FDG_PSI_ASYM_DEEP: v = fdg::special::psi_asym_deep(ord->ord, z); break;
      default: throw std::invalid_argument("fdg_psi: unknown form");
    }
    *out_re = v.real();
    *out_im = v.imag();
  });
}

fdg_status fdg_psi_cut(const fdg_order* ord, double s, int upper, double* out_re, double* out_im) {
  FDG_REQUIRE(ord);
  FDG_REQUIRE(out_re);
  FDG_REQUIRE(out_im);
  return guarded([&] {
    const auto v = fdg::special::psi_cut(
        ord->ord, s, upper ? fdg::special::CutSide::upper : fdg::special::CutSide::lower);
    *out_re = v.real();
    *out_im = v.imag();
  });
}

fdg_status fdg_invert_mode(const fdg_order* ord, double lambda, double u0m, double t, double* out) {
  FDG_REQUIRE(ord);
  FDG_REQUIRE(out);
  return guarded([&] {
    const auto spec = fdg::laplace::ContourSpec::for_window(fdg::laplace::default_half_nodes, t, t);
    *out = fdg::laplace::reference_mode(ord->ord, lambda, u0m, t, spec);
  });
}

fdg_status fdg_weights(const fdg_order* ord, int count, double* beta) {
  FDG_REQUIRE(ord);
  FDG_REQUIRE(beta);
  return guarded([&] {
    const auto w = fdg::dg::weights(ord->ord, count);
    for (int j = 0; j < count; ++j) beta[j] = w.beta[j];
  });
}

fdg_status fdg_step_mode(const fdg_order* ord, double lambda, double u0m, double dt, int n_steps,
                         double* out) {
  FDG_REQUIRE(ord);
  FDG_REQUIRE(out);
  return guarded([&] {
    const auto u = fdg::dg::step_mode({ord->ord, lambda, u0m}, {dt, n_steps});
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i];
  });
}

fdg_status fdg_delta(const fdg_order* ord, double mu, int n, fdg_delta_route route, double* out) {
  FDG_REQUIRE(ord);
  FDG_REQUIRE(out);
  return guarded([&] {
    switch (route) {
      case FDG_DELTA_DIRECT: *out = fdg::cert::delta_direct(ord->ord, mu, n); break;
      case FDG_DELTA_CONTOUR: *out = fdg::cert::delta_contour(ord->ord, mu, n); break;
      default: throw std::invalid_argument("fdg_delta: unknown route");
    }
  });
}

fdg_status fdg_sweep_run(const fdg_order* ord, int j_min, int j_max, int n_max, fdg_sweep** out) {
  FDG_REQUIRE(ord);
  FDG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const auto grid = fdg::cert::power_of_two_grid(j_min, j_max);
    auto s = std::make_unique<fdg_sweep>();
    s->bound = fdg::cert::bound_check(ord->ord, grid, n_max);
    s->phi = fdg::cert::phi_sweep(ord->ord, grid, n_max);
    *out = s.release();
  });
}

void fdg_sweep_destroy(fdg_sweep* sweep) { delete sweep; }

fdg_status fdg_sweep_summary_get(const fdg_sweep* sweep, fdg_sweep_summary* out) {
  FDG_REQUIRE(sweep);
  FDG_REQUIRE(out);
  out->worst_ratio = sweep->bound.worst;
  out->worst_mu = sweep->bound.mu_at;
  out->worst_n = sweep->bound.n_at;
  out->phi1 = sweep->phi.phi1;
  out->phi2 = sweep->phi.phi2;
  out->min_delta = sweep->phi.min_delta;
  out->negative_points = sweep->phi.negative_points;
  out->guarded_points = sweep->phi.guarded_points;
  out->point_count = sweep->bound.points.size();
  return FDG_OK;
}

fdg_status fdg_sweep_point(const fdg_sweep* sweep, size_t index, fdg_delta_point* out) {
  FDG_REQUIRE(sweep);
  FDG_REQUIRE(out);
  if (index >= sweep->bound.points.size()) {
    return fail(FDG_E_RANGE, "fdg_sweep_point: index " + std::to_string(index) + " out of range");
  }
  const auto& p = sweep->bound.points[index];
  *out = {p.mu, p.n, p.rho, p.delta, p.bound_ratio};
  return FDG_OK;
}

fdg_status fdg_lemma_scan_bounds(fdg_lemma_scan* out) {
  FDG_REQUIRE(out);
  return guarded([&] {
    const auto r = fdg::cert::lemma_scan_bounds();
    *out = {r.below_max, r.above_max, r.sector_ratio_max};
  });
}

fdg_status fdg_lemma_integral_zero(const fdg_order* ord, double* out) {
  FDG_REQUIRE(ord);
  FDG_REQUIRE(out);
  return guarded([&] { *out = fdg::cert::lemma_integral_zero(ord->ord); });
}

fdg_status fdg_psi_identity_checks(const fdg_order* ord, fdg_psi_checks* out) {
  FDG_REQUIRE(ord);
  FDG_REQUIRE(out);
  return guarded([&] {
    const auto c = fdg::cert::psi_identity_checks(ord->ord);
    *out = {c.series_vs_integral, c.periodicity,      c.conjugate,
            c.small_z_ratio,      c.small_z_expected, c.min_re_psi_margin,
            c.min_psi_on_line,    c.max_im_psi_on_line, c.min_abs_one_plus_mu_psi};
  });
}

fdg_status fdg_parseval_check(const fdg_order* ord, int modes, int N, int n, double* field_norm_sq,
                              double* modal_sum) {
  FDG_REQUIRE(ord);
  FDG_REQUIRE(field_norm_sq);
  FDG_REQUIRE(modal_sum);
  return guarded([&] {
    const auto r = fdg::cert::parseval_check(ord->ord, modes, N, n);
    *field_norm_sq = r.field_norm_sq;
    *modal_sum = r.modal_sum;
  });
}

void fdg_convergence_config_default(fdg_convergence_config* cfg) {
  if (!cfg) return;
  const fdg::experiment::ConvergenceConfig d;
  cfg->nu = d.nu;
  cfg->Ns = default_Ns;
  cfg->N_count = sizeof(default_Ns) / sizeof(default_Ns[0]);
  cfg->M = d.M;
  cfg->gamma = d.gamma;
  cfg->alphas = default_alphas;
  cfg->alpha_count = sizeof(default_alphas) / sizeof(default_alphas[0]);
  cfg->t_end = d.t_end;
  cfg->half_nodes = d.half_nodes;
}

fdg_status fdg_convergence_validate(const fdg_convergence_config* cfg) {
  FDG_REQUIRE(cfg);
  return guarded([&] { to_cpp(*cfg).validate(); });
}

fdg_status fdg_convergence_run(const fdg_convergence_config* cfg, fdg_progress_fn progress,
                               void* user, fdg_convergence** out) {
  FDG_REQUIRE(cfg);
  FDG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    fdg::experiment::Progress hook;
    if (progress) hook = [=](const char* what, double f) { progress(what, f, user); };
    auto run = std::make_unique<fdg_convergence>();
    run->result = fdg::experiment::run_convergence(to_cpp(*cfg), hook);
    *out = run.release();
  });
}

void fdg_convergence_destroy(fdg_convergence* run) { delete run; }

fdg_status fdg_convergence_entry(const fdg_convergence* run, size_t N_index, size_t alpha_index,
                                 int* N, double* E, double* rate) {
  FDG_REQUIRE(run);
  const auto& t = run->result.table;
  if (N_index >= t.Ns.size() || alpha_index >= t.alphas.size()) {
    return fail(FDG_E_RANGE, "fdg_convergence_entry: index out of range");
  }
  if (N) *N = t.Ns[N_index];
  if (E) *E = t.E[N_index][alpha_index];
  if (rate) *rate = t.rate[N_index][alpha_index];
  return FDG_OK;
}

fdg_status fdg_convergence_curve_length(const fdg_convergence* run, size_t N_index,
                                        size_t* length) {
  FDG_REQUIRE(run);
  FDG_REQUIRE(length);
  if (N_index >= run->result.curves.size()) {
    return fail(FDG_E_RANGE, "fdg_convergence_curve_length: index out of range");
  }
  *length = run->result.curves[N_index].t.size();
  return FDG_OK;
}

fdg_status fdg_convergence_curve_point(const fdg_convergence* run, size_t N_index, size_t i,
                                       double* t, double* err) {
  FDG_REQUIRE(run);
  if (N_index >= run->result.curves.size() || i >= run->result.curves[N_index].t.size()) {
    return fail(FDG_E_RANGE, "fdg_convergence_curve_point: index out of range");
  }
  if (t) *t = run->result.curves[N_index].t[i];
  if (err) *err = run->result.curves[N_index].err[i];
  return FDG_OK;
}

double fdg_expected_rate(double nu, double alpha) {
  return fdg::experiment::expected_rate(nu, alpha);
}

}  // extern "C"

// fdg: command-line driver for the fractional diffusion DG library.
//
//   fdg converge [--nu 0.75] [--N 80,160,...] [--M 1000] [--gamma 3] [--alpha 0.6,...]
//   fdg phi      [--nu 0.1,...,0.9] [--jmin -18] [--jmax 20] [--nmax 200]
//   fdg delta    [--nu 0.75] [--mu 1] [--n 1] [--oracle direct|contour|both]
//   fdg lemmas
//
// Shared flags: --out DIR, --quick, --config FILE, --dry-run.
// Exit status: 0 all checks pass, 2 a check failed, 1 usage or runtime error.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>

#include "csv_writer.hpp"
#include "fdg/fdg.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_check_failed = 2;

struct Settings {
  std::string command;
  std::vector<double> nu;
  std::vector<int> N;
  int M = 1000;
  double gamma = 3.0;
  std::vector<double> alpha;
  std::string out = ".";
  bool quick = false;
  bool dry_run = false;
  std::vector<double> mu;
  std::vector<int> n;
  std::string oracle = "both";
  int jmin = -18;
  int jmax = 20;
  int nmax = 200;
  int half_nodes = 40;
  double tolerance = 0.03;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(fdg_status s, const char* what) {
  if (s != FDG_OK) {
    throw ApiError(std::string(what) + ": " + fdg_status_name(s) + ": " + fdg_last_error());
  }
}

// RAII holder for an fdg_order handle.
class Order {
 public:
  explicit Order(double nu) {
    fdg_status s = fdg_order_create(nu, &h_);
    if (s == FDG_E_INVALID) throw UsageError(fdg_last_error());
    check(s, "fdg_order_create");
  }
  ~Order() { fdg_order_destroy(h_); }
  Order(const Order&) = delete;
  Order& operator=(const Order&) = delete;
  const fdg_order* get() const { return h_; }

 private:
  fdg_order* h_ = nullptr;
};

// shortest text that reads back to the same double
std::string real17(double v) {
  char b[40];
  auto r = std::to_chars(b, b + sizeof b, v);
  return std::string(b, r.ptr);
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s << ',';
    if constexpr (std::is_floating_point_v<T>) {
      s << real17(v[i]);
    } else {
      s << v[i];
    }
  }
  return s.str();
}

// Fills command-specific defaults and rejects out-of-range values.
void resolve(Settings& s) {
  if (s.command == "converge") {
    if (s.nu.empty()) s.nu = {0.75};
    if (s.N.empty()) s.N = s.quick ? std::vector<int>{80, 160, 320} : std::vector<int>{80, 160, 320, 640, 1280};
    if (s.alpha.empty()) s.alpha = {0.6, 0.7, 0.8125};
    if (s.nu.size() != 1) throw UsageError("converge takes a single --nu");
  } else if (s.command == "phi") {
    if (s.nu.empty()) {
      s.nu = s.quick ? std::vector<double>{0.75}
                     : std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    }
    if (s.jmax < s.jmin) throw UsageError("--jmax must be >= --jmin");
    if (s.nmax < 1) throw UsageError("--nmax must be >= 1");
  } else if (s.command == "delta") {
    if (s.nu.empty()) s.nu = {0.75};
    if (s.mu.empty()) s.mu = {1.0};
    if (s.n.empty()) s.n = {1};
    if (s.oracle != "direct" && s.oracle != "contour" && s.oracle != "both") {
      throw UsageError("--oracle must be direct, contour or both");
    }
    for (double m : s.mu) {
      if (!(m >= 0.0) || !std::isfinite(m)) throw UsageError("--mu values must be finite and >= 0");
    }
    for (int k : s.n) {
      if (k < 1) throw UsageError("--n values must be >= 1");
    }
  }
  for (double v : s.nu) {
    if (!(v > 0.0 && v <= 1.0)) throw UsageError("--nu must lie in (0, 1], got " + real17(v));
  }
  if (!(s.tolerance > 0.0)) throw UsageError("--tolerance must be positive");
}

std::string canonical(const Settings& s) {
  std::ostringstream c;
  c << "command=" << s.command << '\n';
  if (s.command == "converge") {
    c << "nu=" << join(s.nu) << "\nN=" << join(s.N) << "\nM=" << s.M << "\ngamma=" << real17(s.gamma)
      << "\nalpha=" << join(s.alpha) << "\nhalf_nodes=" << s.half_nodes
      << "\ntolerance=" << real17(s.tolerance) << '\n';
  } else if (s.command == "phi") {
    c << "nu=" << join(s.nu) << "\njmin=" << s.jmin << "\njmax=" << s.jmax << "\nnmax=" << s.nmax
      << '\n';
  } else if (s.command == "delta") {
    c << "nu=" << join(s.nu) << "\nmu=" << join(s.mu) << "\nn=" << join(s.n)
      << "\noracle=" << s.oracle << '\n';
  }
  return c.str();
}

struct Context {
  Settings s;
  std::string hash;
  std::string metadata() const {
    return std::string("fdg ") + fdg_version() + " command=" + s.command + " config_hash=" + hash;
  }
  std::string path(const std::string& file) const {
    return (std::filesystem::path(s.out) / file).string();
  }
};

void report(bool pass, const std::string& line, bool& all) {
  std::cout << (pass ? "PASS " : "FAIL ") << line << '\n';
  all = all && pass;
}

void progress_to_stderr(const char* stage, double fraction, void*) {
  std::fprintf(stderr, "  %s: %3.0f%%\n", stage, 100.0 * fraction);
}

int cmd_converge(const Context& ctx) {
  const Settings& s = ctx.s;
  fdg_convergence_config cfg;
  fdg_convergence_config_default(&cfg);
  cfg.nu = s.nu[0];
  cfg.Ns = s.N.data();
  cfg.N_count = s.N.size();
  cfg.M = s.M;
  cfg.gamma = s.gamma;
  cfg.alphas = s.alpha.data();
  cfg.alpha_count = s.alpha.size();
  cfg.half_nodes = s.half_nodes;
  if (fdg_convergence_validate(&cfg) != FDG_OK) throw UsageError(fdg_last_error());
  if (s.dry_run) return exit_ok;

  fdg_convergence* run = nullptr;
  check(fdg_convergence_run(&cfg, progress_to_stderr, nullptr, &run), "fdg_convergence_run");
  std::unique_ptr<fdg_convergence, decltype(&fdg_convergence_destroy)> guard(run,
                                                                             fdg_convergence_destroy);

  CsvWriter table(ctx.path("converge_table.csv"), ctx.metadata(), {"N", "alpha", "E_N", "rho_N"});
  std::printf("%6s", "N");
  for (double a : s.alpha) std::printf("   alpha=%-8.4g  rate ", a);
  std::printf("\n");
  for (std::size_t i = 0; i < s.N.size(); ++i) {
    std::printf("%6d", s.N[i]);
    for (std::size_t a = 0; a < s.alpha.size(); ++a) {
      int N = 0;
      double E = 0.0, rate = 0.0;
      check(fdg_convergence_entry(run, i, a, &N, &E, &rate), "fdg_convergence_entry");
      table.cell(N).cell(s.alpha[a]).cell(E).cell(rate);
      table.end_row();
      if (std::isnan(rate)) {
        std::printf("   %.3e      -   ", E);
      } else {
        std::printf("   %.3e  %6.3f ", E, rate);
      }
    }
    std::printf("\n");
  }
  CsvWriter curves(ctx.path("converge_curves.csv"), ctx.metadata(), {"N", "t_n", "error"});
  for (std::size_t i = 0; i < s.N.size(); ++i) {
    std::size_t len = 0;
    check(fdg_convergence_curve_length(run, i, &len), "fdg_convergence_curve_length");
    for (std::size_t k = 0; k < len; ++k) {
      double t = 0.0, e = 0.0;
      check(fdg_convergence_curve_point(run, i, k, &t, &e), "fdg_convergence_curve_point");
      curves.cell(s.N[i]).cell(t).cell(e);
      curves.end_row();
    }
  }

  bool all = true;
  if (s.N.size() >= 2) {
    for (std::size_t a = 0; a < s.alpha.size(); ++a) {
      double rate = 0.0;
      check(fdg_convergence_entry(run, s.N.size() - 1, a, nullptr, nullptr, &rate),
            "fdg_convergence_entry");
      const double want = fdg_expected_rate(s.nu[0], s.alpha[a]);
      char line[160];
      std::snprintf(line, sizeof line, "alpha=%.4g final rate %.4f, expected %.4f +- %.3g",
                    s.alpha[a], rate, want, s.tolerance);
      report(std::abs(rate - want) <= s.tolerance, line, all);
    }
  }
  return all ? exit_ok : exit_check_failed;
}

int cmd_phi(const Context& ctx) {
  const Settings& s = ctx.s;
  for (double v : s.nu) Order check_range(v);
  if (s.dry_run) return exit_ok;
  CsvWriter summary(ctx.path("phi.csv"), ctx.metadata(),
                    {"nu", "Phi1", "Phi2", "bound_ratio_max", "mu_at_max", "n_at_max",
                     "min_delta", "negative_points", "guarded_points"});
  CsvWriter points(ctx.path("phi_points.csv"), ctx.metadata(),
                   {"nu", "mu", "n", "rho", "delta", "bound_ratio"});
  bool all = true;
  for (double v : s.nu) {
    Order ord(v);
    fdg_sweep* sweep = nullptr;
    check(fdg_sweep_run(ord.get(), s.jmin, s.jmax, s.nmax, &sweep), "fdg_sweep_run");
    std::unique_ptr<fdg_sweep, decltype(&fdg_sweep_destroy)> guard(sweep, fdg_sweep_destroy);
    fdg_sweep_summary sum;
    check(fdg_sweep_summary_get(sweep, &sum), "fdg_sweep_summary_get");
    summary.cell(v).cell(sum.phi1).cell(sum.phi2).cell(sum.worst_ratio).cell(sum.worst_mu)
        .cell(sum.worst_n).cell(sum.min_delta).cell(sum.negative_points).cell(sum.guarded_points);
    summary.end_row();
    for (std::size_t i = 0; i < sum.point_count; ++i) {
      fdg_delta_point p;
      check(fdg_sweep_point(sweep, i, &p), "fdg_sweep_point");
      points.cell(v).cell(p.mu).cell(p.n).cell(p.rho).cell(p.delta).cell(p.bound_ratio);
      points.end_row();
    }
    char line[200];
    std::snprintf(line, sizeof line,
                  "nu=%.3g Phi1=%.4f Phi2=%.4f max bound ratio %.4f (mu=2^%d, n=%d) <= 1.1",
                  v, sum.phi1, sum.phi2, sum.worst_ratio,
                  static_cast<int>(std::lround(std::log2(sum.worst_mu))), sum.worst_n);
    report(sum.worst_ratio <= 1.1, line, all);
    if (sum.negative_points > 0) {
      std::printf("     note: %d grid points with delta < -1e-12 (min %.3e)\n", sum.negative_points,
                  sum.min_delta);
    }
  }
  return all ? exit_ok : exit_check_failed;
}

int cmd_delta(const Context& ctx) {
  const Settings& s = ctx.s;
  for (double v : s.nu) Order check_range(v);
  if (s.dry_run) return exit_ok;
  std::unique_ptr<CsvWriter> csv;
  if (s.out != ".") {
    csv = std::make_unique<CsvWriter>(ctx.path("delta.csv"), ctx.metadata(),
                                      std::vector<std::string>{"nu", "mu", "n", "direct", "second"});
  }
  bool all = true;
  for (double v : s.nu) {
    Order ord(v);
    for (double mu : s.mu) {
      for (int n : s.n) {
        double direct = NAN, second = NAN;
        std::string second_name = (v == 1.0) ? "closed form" : "contour";
        if (s.oracle != "contour") {
          check(fdg_delta(ord.get(), mu, n, FDG_DELTA_DIRECT, &direct), "fdg_delta");
        }
        if (s.oracle != "direct") {
          if (v == 1.0) {
            second = std::pow(1.0 + mu, -n) - std::exp(-n * mu);
          } else if (mu == 0.0) {
            second = 0.0;
          } else {
            check(fdg_delta(ord.get(), mu, n, FDG_DELTA_CONTOUR, &second), "fdg_delta");
          }
        }
        std::printf("nu=%.6g mu=%.6g n=%d", v, mu, n);
        if (!std::isnan(direct)) std::printf("  direct=%s", format_real(direct).c_str());
        if (!std::isnan(second)) std::printf("  %s=%s", second_name.c_str(), format_real(second).c_str());
        std::printf("\n");
        if (csv) {
          csv->cell(v).cell(mu).cell(n).cell(direct).cell(second);
          csv->end_row();
        }
        if (s.oracle == "both") {
          const double limit = (v == 1.0) ? 1e-12 : std::max(1e-6, 1e-4 * std::abs(direct));
          char line[160];
          std::snprintf(line, sizeof line, "routes agree: |difference| %.3e <= %.3e",
                        std::abs(direct - second), limit);
          report(std::abs(direct - second) <= limit, line, all);
        }
      }
    }
  }
  return all ? exit_ok : exit_check_failed;
}

int cmd_lemmas(const Context& ctx) {
  if (ctx.s.dry_run) return exit_ok;
  CsvWriter csv(ctx.path("lemmas.csv"), ctx.metadata(), {"check", "nu", "value", "limit", "pass"});
  bool all = true;
  auto row = [&](const std::string& name, double nu, double value, double limit, bool pass) {
    csv.cell(name).cell(nu).cell(value).cell(limit).cell(pass ? 1 : 0);
    csv.end_row();
    char line[200];
    std::snprintf(line, sizeof line, "%-28s nu=%-5.3g value=%.3e limit=%.3e", name.c_str(), nu,
                  value, limit);
    report(pass, line, all);
  };

  for (double v : {0.6, 0.75, 0.9, 0.51}) {
    Order ord(v);
    double I = 0.0;
    check(fdg_lemma_integral_zero(ord.get(), &I), "fdg_lemma_integral_zero");
    const double limit = (v < 0.55) ? 1e-6 : 1e-8;
    row("vanishing_integral", v, std::abs(I), limit, std::abs(I) <= limit);
  }
  fdg_lemma_scan scan;
  check(fdg_lemma_scan_bounds(&scan), "fdg_lemma_scan_bounds");
  row("power_integral_below_max", NAN, scan.below_max, 3.0, scan.below_max <= 3.0);
  row("power_integral_above_max", NAN, scan.above_max, 3.0, scan.above_max <= 3.0);
  row("sector_ratio_max", NAN, scan.sector_ratio_max, 1.0, scan.sector_ratio_max <= 1.0 + 1e-12);

  for (double v : {0.3, 0.5, 0.75}) {
    Order ord(v);
    fdg_psi_checks c;
    check(fdg_psi_identity_checks(ord.get(), &c), "fdg_psi_identity_checks");
    row("psi_series_vs_integral", v, c.series_vs_integral, 1e-10, c.series_vs_integral <= 1e-10);
    row("psi_periodicity", v, c.periodicity, 1e-13, c.periodicity <= 1e-13);
    row("psi_conjugate_symmetry", v, c.conjugate, 1e-13, c.conjugate <= 1e-13);
    const double rel = std::abs(c.small_z_ratio / c.small_z_expected - 1.0);
    row("psi_small_z_order", v, c.small_z_ratio, c.small_z_expected, rel <= 0.15);
    row("psi_re_lower_bound_margin", v, c.min_re_psi_margin, 0.0, c.min_re_psi_margin >= 0.0);
    row("psi_positive_on_im_pi", v, c.min_psi_on_line, 0.0,
        c.min_psi_on_line > 0.0 && c.max_im_psi_on_line <= 1e-12);
    row("one_plus_mu_psi_nonzero", v, c.min_abs_one_plus_mu_psi, 0.0,
        c.min_abs_one_plus_mu_psi > 0.0);
  }
  return all ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional diffusion DG time stepping: convergence, error-constant and lemma checks"};
  app.set_config("--config", "", "flat key=value file; command-line flags override it");
  app.require_subcommand(1);

  Settings s;
  app.add_option("--nu", s.nu, "fractional exponent(s) in (0, 1]")->delimiter(',');
  app.add_option("--N", s.N, "time-step counts, a doubling chain")->delimiter(',');
  app.add_option("--M", s.M, "spatial subintervals (even)");
  app.add_option("--gamma", s.gamma, "mesh grading exponent >= 1");
  app.add_option("--alpha", s.alpha, "error weights t^alpha")->delimiter(',');
  app.add_option("--out", s.out, "output directory for CSV files");
  app.add_flag("--quick", s.quick, "smaller default grids");
  app.add_flag("--dry-run", s.dry_run, "validate and print the resolved configuration only");
  app.add_option("--mu", s.mu, "mu values for delta")->delimiter(',');
  app.add_option("--n", s.n, "step indices for delta")->delimiter(',');
  app.add_option("--oracle", s.oracle, "delta route: direct, contour or both");
  app.add_option("--jmin", s.jmin, "smallest exponent j in mu = 2^j");
  app.add_option("--jmax", s.jmax, "largest exponent j in mu = 2^j");
  app.add_option("--nmax", s.nmax, "largest step index in sweeps");
  app.add_option("--half-nodes", s.half_nodes, "contour nodes per half for the reference solution");
  app.add_option("--tolerance", s.tolerance, "allowed deviation of the final observed rate");

  for (const char* name : {"converge", "phi", "delta", "lemmas"}) {
    app.add_subcommand(name)->fallthrough();
  }
  app.get_subcommand("converge")->description("weighted errors and observed rates against a reference solution");
  app.get_subcommand("phi")->description("error constants over mu = 2^j and 1 <= n <= nmax");
  app.get_subcommand("delta")->description("per-mode error delta^n(mu) by one or both routes");
  app.get_subcommand("lemmas")->description("lemma inequalities and psi identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_ok : exit_usage;
  }
  s.command = app.get_subcommands().front()->get_name();

  try {
    resolve(s);
    Context ctx{s, fnv1a_hex(canonical(s))};
    if (s.dry_run) {
      std::cout << canonical(s) << "out=" << s.out << "\nconfig_hash=" << ctx.hash << '\n';
    } else {
      std::filesystem::create_directories(s.out);
    }
    if (s.command == "converge") return cmd_converge(ctx);
    if (s.command == "phi") return cmd_phi(ctx);
    if (s.command == "delta") return cmd_delta(ctx);
    return cmd_lemmas(ctx);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

#include "fdg/fem1d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

namespace fdg::fem {
namespace {

struct Rule {
  std::vector<double> x;  // on [-1, 1]
  std::vector<double> w;
};

template <unsigned P>
Rule make_rule() {
  using G = boost::math::quadrature::gauss<double, P>;
  Rule r;
  const auto& a = G::abscissa();
  const auto& w = G::weights();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) {
      r.x.push_back(0.0);
      r.w.push_back(w[i]);
    } else {
      r.x.push_back(-a[i]);
      r.w.push_back(w[i]);
      r.x.push_back(a[i]);
      r.w.push_back(w[i]);
    }
  }
  // ascending order so sampled points run left to right within an element
  std::vector<std::size_t> idx(r.x.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto i, auto j) { return r.x[i] < r.x[j]; });
  Rule s;
  for (auto i : idx) {
    s.x.push_back(r.x[i]);
    s.w.push_back(r.w[i]);
  }
  return s;
}

const Rule& rule(int order) {
  static const std::array<Rule, 10> rules = {
      make_rule<1>(), make_rule<2>(), make_rule<3>(), make_rule<4>(), make_rule<5>(),
      make_rule<6>(), make_rule<7>(), make_rule<8>(), make_rule<9>(), make_rule<10>()};
  if (order < 1 || order > 10) {
    throw std::invalid_argument("Gauss order must be in [1, 10], got " + std::to_string(order));
  }
  return rules[order - 1];
}

// coefficient of the hat at mesh node k (0 at the boundary nodes)
double node_value(std::span<const double> coeffs, int k, int M) {
  return (k == 0 || k == M) ? 0.0 : coeffs[k - 1];
}

}  // namespace

Mesh1D::Mesh1D(std::vector<double> nodes, double grading)
    : nodes_(std::move(nodes)), grading_(grading) {
  const std::size_t n = nodes_.size();
  if (n < 3 || (n - 1) % 2 != 0) {
    throw std::invalid_argument("Mesh1D: need an even number (>= 2) of intervals");
  }
  if (nodes_.front() != -1.0 || nodes_.back() != 1.0) {
    throw std::invalid_argument("Mesh1D: nodes must run from -1 to 1");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(nodes_[i] > nodes_[i - 1])) {
      throw std::invalid_argument("Mesh1D: nodes must be strictly increasing");
    }
  }
}

double Mesh1D::min_spacing() const {
  double m = HUGE_VAL;
  for (int k = 0; k < intervals(); ++k) m = std::min(m, h(k));
  return m;
}

Mesh1D graded_mesh(int M, double gamma) {
  if (M < 2 || M % 2 != 0) {
    throw std::invalid_argument("graded_mesh: M must be even and >= 2, got " + std::to_string(M));
  }
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("graded_mesh: gamma must be >= 1");
  }
  const int half = M / 2;
  std::vector<double> x(M + 1);
  for (int k = 0; k <= half; ++k) {
    const double d = std::pow(static_cast<double>(k) / half, gamma);
    x[k] = -1.0 + d;
    x[M - k] = 1.0 - d;
  }
  x[half] = 0.0;
  return Mesh1D(std::move(x), gamma);
}

FemMatrices assemble(double kappa, const Mesh1D& mesh, bool dirichlet) {
  if (!(kappa > 0.0)) throw std::invalid_argument("assemble: kappa must be positive");
  const int M = mesh.intervals();
  std::vector<double> md(M + 1, 0.0), mo(M, 0.0), kd(M + 1, 0.0), ko(M, 0.0);
  for (int e = 0; e < M; ++e) {
    const double h = mesh.h(e);
    md[e] += h / 3.0;
    md[e + 1] += h / 3.0;
    mo[e] = h / 6.0;
    kd[e] += kappa / h;
    kd[e + 1] += kappa / h;
    ko[e] = -kappa / h;
  }
  FemMatrices f;
  if (!dirichlet) {
    f.mass = {md, mo};
    f.stiff = {kd, ko};
    return f;
  }
  f.mass.diag.assign(md.begin() + 1, md.end() - 1);
  f.mass.off.assign(mo.begin() + 1, mo.end() - 1);
  f.stiff.diag.assign(kd.begin() + 1, kd.end() - 1);
  f.stiff.off.assign(ko.begin() + 1, ko.end() - 1);
  return f;
}

std::vector<double> gauss_points(const Mesh1D& mesh, int order) {
  const Rule& r = rule(order);
  const auto x = mesh.nodes();
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(mesh.intervals()) * r.x.size());
  for (int e = 0; e < mesh.intervals(); ++e) {
    const double mid = 0.5 * (x[e] + x[e + 1]);
    const double half = 0.5 * (x[e + 1] - x[e]);
    for (double q : r.x) pts.push_back(mid + half * q);
  }
  return pts;
}

std::vector<double> l2_project(const Field& f, const Mesh1D& mesh, int order) {
  if (order < 3) throw std::invalid_argument("l2_project: need at least 3 Gauss points");
  const Rule& r = rule(order);
  const int M = mesh.intervals();
  const auto x = mesh.nodes();
  std::vector<double> load(M + 1, 0.0);
  for (int e = 0; e < M; ++e) {
    const double half = 0.5 * mesh.h(e);
    const double mid = 0.5 * (x[e] + x[e + 1]);
    for (std::size_t q = 0; q < r.x.size(); ++q) {
      const double fx = f(mid + half * r.x[q]) * r.w[q] * half;
      load[e] += fx * 0.5 * (1.0 - r.x[q]);
      load[e + 1] += fx * 0.5 * (1.0 + r.x[q]);
    }
  }
  std::vector<double> c(load.begin() + 1, load.end() - 1);
  const FemMatrices m = assemble(1.0, mesh);
  TridiagFactor(m.mass).solve(c);
  return c;
}

double evaluate(std::span<const double> coeffs, const Mesh1D& mesh, double x) {
  const int M = mesh.intervals();
  if (static_cast<int>(coeffs.size()) != M - 1) {
    throw std::invalid_argument("evaluate: coefficient count does not match mesh");
  }
  const auto nodes = mesh.nodes();
  if (x <= -1.0 || x >= 1.0) return 0.0;
  const auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
  const int e = static_cast<int>(it - nodes.begin()) - 1;
  const double s = (x - nodes[e]) / mesh.h(e);
  return (1.0 - s) * node_value(coeffs, e, M) + s * node_value(coeffs, e + 1, M);
}

double l2_error(std::span<const double> coeffs, const Mesh1D& mesh, const Field& reference,
                int order) {
  if (order < 4) throw std::invalid_argument("l2_error: need at least 4 Gauss points");
  const auto pts = gauss_points(mesh, order);
  std::vector<double> ref(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) ref[i] = reference(pts[i]);
  return l2_error_sampled(coeffs, mesh, ref, order);
}

double l2_error_sampled(std::span<const double> coeffs, const Mesh1D& mesh,
                        std::span<const double> reference_at_points, int order) {
  const Rule& r = rule(order);
  const int M = mesh.intervals();
  if (static_cast<int>(coeffs.size()) != M - 1) {
    throw std::invalid_argument("l2_error: coefficient count does not match mesh");
  }
  if (reference_at_points.size() != static_cast<std::size_t>(M) * r.x.size()) {
    throw std::invalid_argument("l2_error: reference sample count does not match mesh");
  }
  double sum = 0.0;
  std::size_t i = 0;
  for (int e = 0; e < M; ++e) {
    const double half = 0.5 * mesh.h(e);
    const double a = node_value(coeffs, e, M);
    const double b = node_value(coeffs, e + 1, M);
    double local = 0.0;
    for (std::size_t q = 0; q < r.x.size(); ++q, ++i) {
      const double uh = 0.5 * (1.0 - r.x[q]) * a + 0.5 * (1.0 + r.x[q]) * b;
      const double d = uh - reference_at_points[i];
      local += r.w[q] * d * d;
    }
    sum += half * local;
  }
  return std::sqrt(sum);
}

}  // namespace fdg::fem

#include "fdg/laplace_inversion.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fdg/errors.hpp"

namespace fdg::laplace {
namespace {

constexpr double pi = std::numbers::pi;

// Error exponent per node pair and the derived (step, scale) for a given angle.
struct Balance {
  double rate;
  double step;
  double scale;
};

Balance balance(double angle, int half_nodes, double t_min, double ratio) {
  // Discretisation error above the contour ~ exp(-pi (pi - 2 angle) / step),
  // below it ~ exp(scale t_max - 2 pi angle / step), truncation
  // ~ exp(scale t_min (1 - sin(angle) cosh(step K))). Equating all three:
  const double a = 4.0 * pi * angle - pi * pi;
  const double c = (1.0 + ratio * pi * (pi - 2.0 * angle) / a) / std::sin(angle);
  const double step = std::acosh(c) / half_nodes;
  const double scale = a / (step * ratio * t_min);
  return {pi * (pi - 2.0 * angle) / step, step, scale};
}

struct Shape {
  double angle;
  Balance balance;
  double predicted;
};

// golden-section search for the angle with the fastest decay
Shape tune(int half_nodes, double t_min, double ratio) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 0.25 * pi + 1e-6;
  double hi = 0.5 * pi - 1e-6;
  double x1 = hi - g * (hi - lo);
  double x2 = lo + g * (hi - lo);
  double f1 = balance(x1, half_nodes, t_min, ratio).rate;
  double f2 = balance(x2, half_nodes, t_min, ratio).rate;
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = balance(x2, half_nodes, t_min, ratio).rate;
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = balance(x1, half_nodes, t_min, ratio).rate;
    }
  }
  const double angle = 0.5 * (lo + hi);
  const Balance b = balance(angle, half_nodes, t_min, ratio);
  const double vertex = b.scale * (1.0 - std::sin(angle)) * ratio * t_min;
  const double roundoff = std::numeric_limits<double>::epsilon() * std::exp(vertex);
  return {angle, b, std::exp(-b.rate) + roundoff};
}

}  // namespace

void ContourSpec::validate() const {
  if (half_nodes < 4) {
    throw std::invalid_argument("contour: node_count must be odd and >= 9, got " +
                                std::to_string(node_count()));
  }
  if (!(scale > 0.0) || !(step > 0.0)) {
    throw std::invalid_argument("contour: scale and step must be positive");
  }
  if (!(angle > 0.0 && angle < 0.5 * pi)) {
    throw std::invalid_argument("contour: angle must lie in (0, pi/2)");
  }
  if (!(t_min > 0.0 && t_max >= t_min)) {
    throw std::invalid_argument("contour: time window must satisfy 0 < t_min <= t_max");
  }
}

ContourSpec ContourSpec::for_window(int half_nodes, double t_min, double t_max) {
  if (half_nodes < 4) {
    throw std::invalid_argument("contour: need at least 9 nodes");
  }
  if (!(t_min > 0.0 && t_max >= t_min)) {
    throw std::invalid_argument("contour: time window must satisfy 0 < t_min <= t_max");
  }
  const double ratio = t_max / t_min;
  if (ratio > max_window_ratio * (1.0 + 1e-12)) {
    throw std::invalid_argument("contour: window ratio " + std::to_string(ratio) +
                                " exceeds " + std::to_string(max_window_ratio));
  }
  // Past some node count the discretisation error drops below the round-off
  // carried by exp(z t) at the vertex, so the shape is tuned for the best
  // effective count and any extra nodes only add (negligible) tail terms.
  Shape best = tune(4, t_min, ratio);
  for (int k = 5; k <= half_nodes; ++k) {
    const Shape cand = tune(k, t_min, ratio);
    if (cand.predicted < best.predicted) best = cand;
  }
  const double angle = best.angle;
  const Balance b = best.balance;
  ContourSpec spec;
  spec.half_nodes = half_nodes;
  spec.scale = b.scale;
  spec.angle = angle;
  spec.step = b.step;
  spec.t_min = t_min;
  spec.t_max = t_max;
  return spec;
}

ContourRule::ContourRule(const ContourSpec& spec) : spec_(spec) {
  spec_.validate();
  const int k_max = spec_.half_nodes;
  nodes_.reserve(k_max + 1);
  weights_.reserve(k_max + 1);
  const cplx i(0.0, 1.0);
  for (int k = 0; k <= k_max; ++k) {
    const double u = k * spec_.step;
    const cplx w = i * u - spec_.angle;
    nodes_.push_back(spec_.scale * (1.0 + std::sin(w)));
    cplx dz = i * spec_.scale * std::cos(w);
    dz *= spec_.step / pi;
    if (k == 0) dz *= 0.5;
    weights_.push_back(dz);
  }
}

std::vector<cplx> ContourRule::kernel(double t) const {
  std::vector<cplx> out(nodes_.size());
  for (std::size_t k = 0; k < nodes_.size(); ++k) out[k] = weights_[k] * std::exp(nodes_[k] * t);
  return out;
}

double ContourRule::combine(std::span<const cplx> transform_at_nodes, double t) const {
  if (transform_at_nodes.size() != nodes_.size()) {
    throw std::invalid_argument("contour: transform sample count does not match node count");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    sum += (weights_[k] * std::exp(nodes_[k] * t) * transform_at_nodes[k]).imag();
  }
  return sum;
}

double invert(const Transform& transform, double t, const ContourSpec& spec) {
  spec.validate();
  const double slack = 1e-12 * spec.t_max;
  if (!(t >= spec.t_min - slack && t <= spec.t_max + slack)) {
    throw std::invalid_argument("contour: t = " + std::to_string(t) + " outside window [" +
                                std::to_string(spec.t_min) + ", " + std::to_string(spec.t_max) +
                                "]");
  }
  const ContourRule rule(spec);
  std::vector<cplx> values;
  values.reserve(rule.nodes().size());
  for (const cplx& z : rule.nodes()) values.push_back(transform(z));
  return rule.combine(values, t);
}

double invert_converged(const Transform& transform, double t, double tol) {
  int k = 12;
  double prev = invert(transform, t, ContourSpec::for_window(k, t, t));
  double prev_diff = HUGE_VAL;
  while (true) {
    k *= 2;
    const double cur = invert(transform, t, ContourSpec::for_window(k, t, t));
    const double diff = std::abs(cur - prev);
    if (diff <= tol) return cur;
    if (k >= 192 || diff > 0.5 * prev_diff) {
      throw ConvergenceError("contour inversion stalled", diff);
    }
    prev = cur;
    prev_diff = diff;
  }
}

double reference_mode(const special::FractionalOrder& ord, double lambda, double u0m, double t,
                      const ContourSpec& spec) {
  if (!(lambda >= 0.0)) {
    throw std::invalid_argument("reference_mode: lambda must be >= 0");
  }
  if (lambda == 0.0) return u0m;
  const double nu = ord.nu();
  auto transform = [=](cplx z) -> cplx {
    if (nu == 1.0) return u0m / (z + lambda);
    const cplx zn = std::pow(z, nu);
    return u0m * zn / (z * (zn + lambda));
  };
  return invert(transform, t, spec);
}

std::vector<ContourSpec> window_specs(int half_nodes, double t_min, double t_max) {
  if (!(t_min > 0.0 && t_max >= t_min)) {
    throw std::invalid_argument("window_specs: need 0 < t_min <= t_max");
  }
  const double total = t_max / t_min;
  const int count =
      std::max(1, static_cast<int>(std::ceil(std::log(total) / std::log(max_window_ratio) - 1e-12)));
  const double r = std::pow(total, 1.0 / count);
  std::vector<ContourSpec> specs;
  double lo = t_min;
  for (int w = 0; w < count; ++w) {
    const double hi = (w + 1 == count) ? t_max : lo * r;
    specs.push_back(ContourSpec::for_window(half_nodes, lo, hi));
    lo = hi;
  }
  return specs;
}

}  // namespace fdg::laplace

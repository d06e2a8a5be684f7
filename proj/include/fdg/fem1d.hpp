#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fdg/tridiagonal.hpp"

namespace fdg::fem {

/// Partition -1 = x_0 < ... < x_M = 1, symmetric about 0.
class Mesh1D {
 public:
  /// Takes ownership of explicit nodes; throws std::invalid_argument unless they
  /// are strictly increasing from -1 to 1 with an even number of intervals.
  Mesh1D(std::vector<double> nodes, double grading);

  std::span<const double> nodes() const noexcept { return nodes_; }
  int intervals() const noexcept { return static_cast<int>(nodes_.size()) - 1; }
  int interior_count() const noexcept { return intervals() - 1; }
  double grading() const noexcept { return grading_; }
  double h(int k) const { return nodes_[k + 1] - nodes_[k]; }
  double min_spacing() const;

 private:
  std::vector<double> nodes_;
  double grading_;
};

/// x_k = -1 + (k / (M/2))^gamma for k <= M/2, mirrored to the right half;
/// nodes cluster at +-1 for gamma > 1 and gamma = 1 is uniform.
/// Throws unless M is even and >= 2 and gamma >= 1.
Mesh1D graded_mesh(int M, double gamma);

/// P1 mass and stiffness (kappa-weighted) matrices.
struct FemMatrices {
  SymTridiag mass;
  SymTridiag stiff;
};

/// Interior degrees of freedom only (homogeneous Dirichlet rows and columns
/// removed) when `dirichlet` is set, otherwise all M + 1 nodes.
FemMatrices assemble(double kappa, const Mesh1D& mesh, bool dirichlet = true);

using Field = std::function<double(double)>;

/// Gauss-Legendre points mapped onto every element, element by element
/// (`order` points each, 1 <= order <= 10).
std::vector<double> gauss_points(const Mesh1D& mesh, int order);

/// L2 projection onto interior hat functions: solves mass c = load with an
/// `order`-point Gauss rule (>= 3) per element for the load.
std::vector<double> l2_project(const Field& f, const Mesh1D& mesh, int order = 5);

/// Value at x of the P1 function with interior coefficients `coeffs`
/// (zero at +-1).
double evaluate(std::span<const double> coeffs, const Mesh1D& mesh, double x);

/// || U_h - reference ||_{L2(-1,1)} by an `order`-point Gauss rule (>= 4).
double l2_error(std::span<const double> coeffs, const Mesh1D& mesh, const Field& reference,
                int order = 5);

/// Same with the reference pre-sampled at gauss_points(mesh, order).
double l2_error_sampled(std::span<const double> coeffs, const Mesh1D& mesh,
                        std::span<const double> reference_at_points, int order = 5);

}  // namespace fdg::fem

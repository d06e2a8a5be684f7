#pragma once

#include <span>
#include <vector>

namespace fdg {

/// Symmetric tridiagonal matrix: `diag` has n entries, `off` has n - 1
/// (off[i] couples rows i and i + 1).
struct SymTridiag {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const noexcept { return diag.size(); }

  /// y = A x. Sizes must match.
  void apply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> apply(std::span<const double> x) const;

  /// x^T A x
  double quadratic_form(std::span<const double> x) const;

  /// A + c B, both of the same size.
  SymTridiag plus_scaled(double c, const SymTridiag& b) const;
};

/// LDL^T factorisation of a symmetric tridiagonal matrix, kept for repeated
/// solves. Throws std::domain_error on a non-positive pivot.
class TridiagFactor {
 public:
  explicit TridiagFactor(const SymTridiag& a);

  /// Solves A x = b in place.
  void solve(std::span<double> b) const;

 private:
  std::vector<double> d_;  // pivots
  std::vector<double> l_;  // unit lower multipliers
};

}  // namespace fdg

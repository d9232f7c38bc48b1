#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace fraclap {

/// Parameters of the principal-value quadrature for kernels |z|^{-n-2t}.
///
/// The integral is split at `split_radius` into a near field, where the
/// symmetrized second difference removes the principal value, and a far
/// field of geometrically graded Gauss-Legendre panels between the singular
/// points of the integrand, closed by a tail beyond `far_truncation`.
struct QuadratureSpec {
  /// Near/far boundary. Default: half the distance to the nearest singular point.
  std::optional<double> split_radius;
  /// Uniform panels in the near field.
  int near_panels = 8;
  /// Start of the tail. Default: twice the farthest singular distance.
  std::optional<double> far_truncation;
  /// Accuracy the caller asks for; sets the default grading depth.
  double target_tol = 1e-4;
  /// Gauss-Legendre points per panel. Default: 20 in 1-D, 10 in 2-D.
  std::optional<int> gauss_order;
  /// Geometric grading levels toward every singular point.
  std::optional<int> grading_levels;
  double grading_ratio = 0.2;

  [[nodiscard]] int resolved_order(int dim) const;
  [[nodiscard]] int resolved_levels(int dim) const;
  /// Spec with every panel count doubled; used for refinement checks.
  [[nodiscard]] QuadratureSpec refined() const;
};

/// ∫_0^∞ S(z) z^{-1-2t} dz for a symmetrized difference S with S(z) = O(z^2)
/// at the origin.
struct KernelIntegrand {
  std::function<double(double)> difference;
  double order = 0.5;
  /// Radii z > 0 where S is not smooth; panels are graded toward them.
  std::vector<double> breaks;
  /// Radii where S is C² only; panel edges without grading.
  std::vector<double> smooth_breaks;
  /// S(z) equals `tail_value` for every z >= constant_beyond.
  std::optional<double> constant_beyond;
  double tail_value = 0.0;
  /// S(z) = O(z^growth) at infinity; must stay below 2t.
  double growth_exponent = 0.0;
  int dim = 1;
};

[[nodiscard]] double integrate_kernel(const KernelIntegrand& integrand, const QuadratureSpec& spec);

/// ∫_a^b g with Gauss-Legendre panels graded geometrically toward the
/// flagged endpoints.
[[nodiscard]] double integrate_graded(const std::function<double(double)>& g, double a, double b, bool grade_left,
                                      bool grade_right, int order, int levels, double ratio);

}  // namespace fraclap

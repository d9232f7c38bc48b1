#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fraclap/geometry.hpp"

namespace fraclap {

/// Order t of (-Δ)^t, validated to lie strictly inside (0,1).
class FracOrder {
 public:
  explicit FracOrder(double t);
  [[nodiscard]] double value() const { return t_; }
  [[nodiscard]] FracOrder half() const { return FracOrder(0.5 * t_); }

 private:
  double t_;
};

enum class Smoothness {
  C2NearX,    ///< smooth around any evaluation point; singular points only guide panel placement
  CAlphaOnly  ///< genuinely non-smooth at the listed singular points
};

/// A scalar function on R (dim 1) or a radial function on R^2 (dim 2),
/// together with the metadata the singular-integral quadrature needs.
///
/// For dim 2 the profile receives |x|; `singular_points` are then radii.
struct FunctionHandle {
  int dim = 1;
  std::function<double(double)> profile;
  /// f(x) = O(|x|^growth_exponent) at infinity.
  double growth_exponent = 0.0;
  Smoothness smoothness = Smoothness::C2NearX;
  /// Points (dim 1) or radii (dim 2) where f fails to be smooth.
  std::vector<double> singular_points;
  /// Points (dim 1) or radii (dim 2) where f is C² but not smoother; used as
  /// panel edges without grading.
  std::vector<double> smooth_joins;
  /// f vanishes for |x| >= support_radius.
  std::optional<double> support_radius;

  [[nodiscard]] double operator()(Point p) const { return profile(dim == 1 ? p.x : p.norm()); }
  [[nodiscard]] double at(double coordinate) const { return profile(coordinate); }

  static FunctionHandle on_line(std::function<double(double)> f, std::vector<double> singular = {},
                                double growth = 0.0, std::optional<double> support = std::nullopt,
                                Smoothness smoothness = Smoothness::C2NearX);
  static FunctionHandle radial(std::function<double(double)> profile, std::vector<double> singular_radii = {},
                               double growth = 0.0, std::optional<double> support = std::nullopt,
                               Smoothness smoothness = Smoothness::C2NearX);
  static FunctionHandle constant(double value, int dim = 1);
};

// Combinators. Metadata is merged conservatively: singular sets are united,
// growth exponents add for products and take the max for sums.
[[nodiscard]] FunctionHandle scaled(double a, const FunctionHandle& f);
[[nodiscard]] FunctionHandle sum(const FunctionHandle& f, const FunctionHandle& g);
[[nodiscard]] FunctionHandle linear_combination(double a, const FunctionHandle& f, double b, const FunctionHandle& g);
[[nodiscard]] FunctionHandle product(const FunctionHandle& f, const FunctionHandle& g);
/// x -> f(x - shift), dim 1 only.
[[nodiscard]] FunctionHandle translated(const FunctionHandle& f, double shift);
/// x -> f(lambda x), lambda > 0.
[[nodiscard]] FunctionHandle dilated(const FunctionHandle& f, double lambda);

}  // namespace fraclap

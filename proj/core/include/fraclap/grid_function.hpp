#pragma once

#include <functional>
#include <vector>

#include "fraclap/geometry.hpp"

namespace fraclap {

/// Samples of a scalar function at ordered nodes of a one-dimensional domain.
///
/// Between nodes the function is interpolated linearly. Outside the closed
/// domain it is zero, and between the boundary and the outermost interior
/// node it is interpolated toward zero (extension by zero).
class GridFunction {
 public:
  GridFunction(Domain dom, std::vector<double> nodes, std::vector<double> values);

  /// Nodes a + i h, i = 1..N-1, with h = (b - a)/N.
  static GridFunction sample_interior(const Domain& dom, int N, const std::function<double(double)>& f);
  /// Nodes a + i h, i = 0..N.
  static GridFunction sample_closed(const Domain& dom, int N, const std::function<double(double)>& f);

  [[nodiscard]] const Domain& domain() const { return dom_; }
  [[nodiscard]] const std::vector<double>& nodes() const { return nodes_; }
  [[nodiscard]] const std::vector<double>& values() const { return values_; }
  [[nodiscard]] std::size_t size() const { return nodes_.size(); }
  /// Smallest gap between consecutive nodes.
  [[nodiscard]] double spacing() const;
  /// Distance of node i to the boundary of the domain.
  [[nodiscard]] double distance(std::size_t i) const { return dom_.distance(Point(nodes_[i])); }
  [[nodiscard]] double max_abs() const;

  [[nodiscard]] double operator()(double x) const;

  /// Nodes satisfying `keep`, on the same domain.
  [[nodiscard]] GridFunction restrict(const std::function<bool(double)>& keep) const;
  /// Same nodes, values transformed by `op(x, value)`.
  [[nodiscard]] GridFunction map(const std::function<double(double, double)>& op) const;

 private:
  Domain dom_;
  std::vector<double> nodes_;
  std::vector<double> values_;
};

}  // namespace fraclap

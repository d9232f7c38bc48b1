#pragma once

#include <cmath>

namespace fraclap {

/// A point of R^1 or R^2. One-dimensional code only reads `x`.
struct Point {
  double x = 0.0;
  double y = 0.0;

  constexpr Point() = default;
  constexpr Point(double x_) : x(x_) {}  // NOLINT(google-explicit-constructor)
  constexpr Point(double x_, double y_) : x(x_), y(y_) {}

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double k, Point a) { return {k * a.x, k * a.y}; }
  friend constexpr bool operator==(Point a, Point b) = default;

  [[nodiscard]] constexpr double dot(Point o) const { return x * o.x + y * o.y; }
  [[nodiscard]] double norm() const { return std::hypot(x, y); }
};

/// Bounded domain: an interval (a,b) of R or an open ball of R^n, n in {1,2}.
///
/// Both shapes satisfy the interior and exterior ball condition with radius
/// rho0(): the half-width for intervals, the radius for balls.
class Domain {
 public:
  enum class Kind { Interval, Ball };

  static Domain interval(double a, double b);
  static Domain ball(Point center, double radius, int dim);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] Point center() const { return center_; }
  /// Half-width (interval) or radius (ball).
  [[nodiscard]] double radius() const { return radius_; }
  [[nodiscard]] double lower() const { return center_.x - radius_; }
  [[nodiscard]] double upper() const { return center_.x + radius_; }
  [[nodiscard]] double rho0() const { return radius_; }
  [[nodiscard]] double diameter() const { return 2.0 * radius_; }

  /// Open-set membership.
  [[nodiscard]] bool contains(Point p) const;

  /// dist(p, boundary), valid on both sides of the boundary.
  [[nodiscard]] double distance(Point p) const;

  /// Closest boundary point. At the center of a ball the choice is
  /// center + radius * e1.
  [[nodiscard]] Point project(Point p) const;

  /// Unit outward normal at a boundary point (the point is projected first).
  [[nodiscard]] Point outward_normal(Point boundary_point) const;

 private:
  Domain(Kind kind, Point center, double radius, int dim)
      : kind_(kind), center_(center), radius_(radius), dim_(dim) {}

  Kind kind_;
  Point center_;
  double radius_;
  int dim_;
};

/// delta_0(x)^s: the s-th power of the distance inside the domain, zero outside.
[[nodiscard]] double delta0_pow(const Domain& dom, double s, Point x);

struct BoundaryPoint {
  Point x0;
  Point nu;  ///< unit outward normal at x0
};

/// Builds the boundary point nearest to `p` together with its normal.
[[nodiscard]] BoundaryPoint boundary_point(const Domain& dom, Point p);

/// Boundary-anchored sets D_R(x0) = B_R(x0) ∩ Ω and
/// D+_{κ'R}(x0) = B_{κ'R}(x0) ∩ {x ∈ Ω : (x0 - x)·ν ≥ 2κR}.
struct KrylovSetSpec {
  BoundaryPoint x0;
  double R = 0.0;
  double kappa = 1.0 / 16.0;
  double kappa_prime = 5.0 / 8.0;

  KrylovSetSpec(BoundaryPoint x0_, double R_, double kappa_ = 1.0 / 16.0);
};

/// Throws InvalidArgument if spec.R exceeds rho0(dom).
[[nodiscard]] bool in_DR(const KrylovSetSpec& spec, const Domain& dom, Point x);
[[nodiscard]] bool in_DR_plus(const KrylovSetSpec& spec, const Domain& dom, Point x);

}  // namespace fraclap

#include "fraclap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fraclap/error.hpp"

namespace fraclap {

Domain Domain::interval(double a, double b) {
  if (!(a < b)) {
    throw InvalidArgument("interval requires a < b");
  }
  return Domain(Kind::Interval, Point{0.5 * (a + b)}, 0.5 * (b - a), 1);
}

Domain Domain::ball(Point center, double radius, int dim) {
  if (!(radius > 0.0)) {
    throw InvalidArgument("ball radius must be positive");
  }
  if (dim != 1 && dim != 2) {
    throw InvalidArgument("only dimensions 1 and 2 are supported, got " + std::to_string(dim));
  }
  if (dim == 1) {
    center.y = 0.0;
  }
  return Domain(Kind::Ball, center, radius, dim);
}

bool Domain::contains(Point p) const {
  if (dim_ == 1) {
    return std::abs(p.x - center_.x) < radius_;
  }
  return (p - center_).norm() < radius_;
}

double Domain::distance(Point p) const {
  if (dim_ == 1) {
    return std::abs(radius_ - std::abs(p.x - center_.x));
  }
  return std::abs(radius_ - (p - center_).norm());
}

Point Domain::project(Point p) const {
  if (dim_ == 1) {
    return Point{p.x >= center_.x ? center_.x + radius_ : center_.x - radius_};
  }
  const Point d = p - center_;
  const double r = d.norm();
  if (r == 0.0) {
    return center_ + Point{radius_, 0.0};
  }
  return center_ + (radius_ / r) * d;
}

Point Domain::outward_normal(Point boundary_point) const {
  const Point q = project(boundary_point);
  if (dim_ == 1) {
    return Point{q.x >= center_.x ? 1.0 : -1.0};
  }
  return (1.0 / radius_) * (q - center_);
}

double delta0_pow(const Domain& dom, double s, Point x) {
  if (!dom.contains(x)) {
    return 0.0;
  }
  return std::pow(dom.distance(x), s);
}

BoundaryPoint boundary_point(const Domain& dom, Point p) {
  const Point x0 = dom.project(p);
  return BoundaryPoint{x0, dom.outward_normal(x0)};
}

KrylovSetSpec::KrylovSetSpec(BoundaryPoint x0_, double R_, double kappa_)
    : x0(x0_), R(R_), kappa(kappa_), kappa_prime(0.5 + 2.0 * kappa_) {
  if (!(R > 0.0)) {
    throw InvalidArgument("Krylov set radius must be positive");
  }
  if (!(kappa > 0.0 && kappa < 0.25)) {
    throw InvalidArgument("kappa must lie in (0, 1/4)");
  }
  if (std::abs(x0.nu.norm() - 1.0) > 1e-12) {
    throw InvalidArgument("boundary normal must have unit length");
  }
}

namespace {

void check_radius(const KrylovSetSpec& spec, const Domain& dom) {
  if (spec.R > dom.rho0()) {
    throw InvalidArgument("Krylov set radius R exceeds rho0 of the domain");
  }
}

}  // namespace

bool in_DR(const KrylovSetSpec& spec, const Domain& dom, Point x) {
  check_radius(spec, dom);
  return (x - spec.x0.x0).norm() < spec.R && dom.contains(x);
}

bool in_DR_plus(const KrylovSetSpec& spec, const Domain& dom, Point x) {
  check_radius(spec, dom);
  const double depth = (spec.x0.x0 - x).dot(spec.x0.nu);
  return (x - spec.x0.x0).norm() < spec.kappa_prime * spec.R && dom.contains(x) &&
         depth >= 2.0 * spec.kappa * spec.R;
}

}  // namespace fraclap

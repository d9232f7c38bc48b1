#include "fraclap/function_handle.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fraclap/error.hpp"

namespace fraclap {

FracOrder::FracOrder(double t) : t_(t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw InvalidArgument("fractional order must lie in (0,1)");
  }
}

namespace {

FunctionHandle make(int dim, std::function<double(double)> f, std::vector<double> singular, double growth,
                    std::optional<double> support, Smoothness smoothness) {
  FunctionHandle h;
  h.dim = dim;
  h.profile = std::move(f);
  h.singular_points = std::move(singular);
  h.growth_exponent = growth;
  h.support_radius = support;
  h.smoothness = smoothness;
  return h;
}

std::vector<double> merged(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Smoothness worse(Smoothness a, Smoothness b) {
  return (a == Smoothness::CAlphaOnly || b == Smoothness::CAlphaOnly) ? Smoothness::CAlphaOnly
                                                                       : Smoothness::C2NearX;
}

void require_same_dim(const FunctionHandle& f, const FunctionHandle& g) {
  if (f.dim != g.dim) {
    throw InvalidArgument("cannot combine functions of different dimension");
  }
}

}  // namespace

FunctionHandle FunctionHandle::on_line(std::function<double(double)> f, std::vector<double> singular, double growth,
                                       std::optional<double> support, Smoothness smoothness) {
  return make(1, std::move(f), std::move(singular), growth, support, smoothness);
}

FunctionHandle FunctionHandle::radial(std::function<double(double)> profile, std::vector<double> singular_radii,
                                      double growth, std::optional<double> support, Smoothness smoothness) {
  return make(2, std::move(profile), std::move(singular_radii), growth, support, smoothness);
}

FunctionHandle FunctionHandle::constant(double value, int dim) {
  return make(dim, [value](double) { return value; }, {}, 0.0, std::nullopt, Smoothness::C2NearX);
}

FunctionHandle scaled(double a, const FunctionHandle& f) {
  FunctionHandle h = f;
  h.profile = [a, p = f.profile](double x) { return a * p(x); };
  return h;
}

FunctionHandle sum(const FunctionHandle& f, const FunctionHandle& g) { return linear_combination(1.0, f, 1.0, g); }

FunctionHandle linear_combination(double a, const FunctionHandle& f, double b, const FunctionHandle& g) {
  require_same_dim(f, g);
  std::optional<double> support;
  if (f.support_radius && g.support_radius) {
    support = std::max(*f.support_radius, *g.support_radius);
  }
  FunctionHandle h = make(
      f.dim, [a, b, pf = f.profile, pg = g.profile](double x) { return a * pf(x) + b * pg(x); },
      merged(f.singular_points, g.singular_points), std::max(f.growth_exponent, g.growth_exponent), support,
      worse(f.smoothness, g.smoothness));
  h.smooth_joins = merged(f.smooth_joins, g.smooth_joins);
  return h;
}

FunctionHandle product(const FunctionHandle& f, const FunctionHandle& g) {
  require_same_dim(f, g);
  std::optional<double> support;
  if (f.support_radius && g.support_radius) {
    support = std::min(*f.support_radius, *g.support_radius);
  } else if (f.support_radius) {
    support = f.support_radius;
  } else {
    support = g.support_radius;
  }
  const double growth = support ? 0.0 : f.growth_exponent + g.growth_exponent;
  FunctionHandle h = make(
      f.dim, [pf = f.profile, pg = g.profile](double x) { return pf(x) * pg(x); },
      merged(f.singular_points, g.singular_points), growth, support, worse(f.smoothness, g.smoothness));
  h.smooth_joins = merged(f.smooth_joins, g.smooth_joins);
  return h;
}

FunctionHandle translated(const FunctionHandle& f, double shift) {
  if (f.dim != 1) {
    throw InvalidArgument("translation is only defined for functions on the line");
  }
  FunctionHandle h = f;
  h.profile = [shift, p = f.profile](double x) { return p(x - shift); };
  for (double& s : h.singular_points) {
    s += shift;
  }
  for (double& s : h.smooth_joins) {
    s += shift;
  }
  if (h.support_radius) {
    *h.support_radius += std::abs(shift);
  }
  return h;
}

FunctionHandle dilated(const FunctionHandle& f, double lambda) {
  if (!(lambda > 0.0)) {
    throw InvalidArgument("dilation factor must be positive");
  }
  FunctionHandle h = f;
  h.profile = [lambda, p = f.profile](double x) { return p(lambda * x); };
  for (double& s : h.singular_points) {
    s /= lambda;
  }
  for (double& s : h.smooth_joins) {
    s /= lambda;
  }
  if (h.support_radius) {
    *h.support_radius /= lambda;
  }
  return h;
}

}  // namespace fraclap

#include "fraclap/operator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fraclap/error.hpp"

namespace fraclap {

double c_constant(int n, FracOrder t) {
  if (n != 1 && n != 2) {
    throw InvalidArgument("dimension must be 1 or 2");
  }
  const double s = t.value();
  return std::pow(4.0, s) * std::tgamma(0.5 * n + s) /
         (std::pow(std::numbers::pi, 0.5 * n) * std::abs(std::tgamma(-s)));
}

namespace {

// Singular set of f as seen from x: distances (1-D) or radii (2-D) at which
// the integrand in z (or ρ) loses smoothness.
struct Geometry {
  std::vector<double> breaks;
  std::vector<double> joins;
  double nearest = INFINITY;  // distance from x to the closest declared singularity
};

Geometry singular_geometry(const FunctionHandle& f, double x) {
  Geometry g;
  std::vector<double> pts = f.singular_points;
  if (f.support_radius) {
    if (f.dim == 1) {
      pts.push_back(-*f.support_radius);
    }
    pts.push_back(*f.support_radius);
  }
  for (double p : pts) {
    if (f.dim == 1) {
      g.breaks.push_back(std::abs(x - p));
    } else {
      g.breaks.push_back(std::abs(x - p));
      g.breaks.push_back(x + p);
    }
  }
  for (double p : f.smooth_joins) {
    g.joins.push_back(std::abs(x - p));
    if (f.dim == 2) {
      g.joins.push_back(x + p);
    }
  }
  for (double p : f.singular_points) {
    g.nearest = std::min(g.nearest, std::abs(x - (f.dim == 1 ? p : std::abs(p))));
  }
  return g;
}

double effective_growth(const FunctionHandle& f) { return f.support_radius ? 0.0 : f.growth_exponent; }

void check_evaluation_point(const FunctionHandle& f, const Geometry& g, const QuadratureSpec& q) {
  if (f.smoothness != Smoothness::CAlphaOnly) {
    return;
  }
  if (g.nearest <= 0.0) {
    throw NonSmoothEvaluationPoint("evaluation point coincides with a singular point of the function");
  }
  if (q.split_radius && *q.split_radius >= g.nearest) {
    throw NonSmoothEvaluationPoint("a singular point of the function lies inside the near-field radius");
  }
}

// 2 ∫_0^{π/2} h(θ) dθ with panels split at the angles where |x ± ρ e_θ|
// crosses one of the radii, graded toward each split. The endpoints are graded
// only when a crossing is at or near them (tangential circles, or θ = π/2).
template <class H>
double angular(const H& h, double r0, double rho, const std::vector<double>& radii,
               const std::vector<double>& smooth_radii, const QuadratureSpec& q) {
  const double half_pi = 0.5 * std::numbers::pi;
  std::vector<double> cuts{0.0, half_pi};
  for (double b : smooth_radii) {
    const double c = std::abs((b * b - r0 * r0 - rho * rho) / (2.0 * r0 * rho));
    if (c < 1.0) {
      cuts.push_back(std::acos(c));
    }
  }
  std::vector<double> graded_cuts;
  bool grade_zero = false;
  bool grade_right = false;
  for (double b : radii) {
    const double c = std::abs((b * b - r0 * r0 - rho * rho) / (2.0 * r0 * rho));
    if (c > 0.9 && c < 1.1) {
      grade_zero = true;
    }
    if (c < 0.1) {
      grade_right = true;
    }
    if (c < 1.0) {
      const double a = std::acos(c);
      if (a > 0.0 && a < half_pi) {
        cuts.push_back(a);
        graded_cuts.push_back(a);
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  const int order = q.resolved_order(2);
  const int levels = q.resolved_levels(2);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    auto is_graded = [&](double a) {
      return std::find(graded_cuts.begin(), graded_cuts.end(), a) != graded_cuts.end();
    };
    const bool left = i == 0 ? grade_zero : is_graded(cuts[i]);
    const bool right = i + 2 == cuts.size() ? grade_right : is_graded(cuts[i + 1]);
    acc += integrate_graded(h, cuts[i], cuts[i + 1], left, right, order, levels, q.grading_ratio);
  }
  return 2.0 * acc;
}

KernelIntegrand base_integrand(int n, double t, const Geometry& g) {
  KernelIntegrand k;
  k.order = t;
  k.dim = n;
  k.breaks = g.breaks;
  k.smooth_breaks = g.joins;
  return k;
}

void require_dim(const FunctionHandle& f, int n) {
  if (n != 1 && n != 2) {
    throw InvalidArgument("dimension must be 1 or 2");
  }
  if (f.dim != n) {
    throw InvalidArgument("function dimension does not match n");
  }
}

}  // namespace

double frac_laplacian(const FunctionHandle& f, int n, FracOrder t, Point x, const QuadratureSpec& q) {
  require_dim(f, n);
  const double s = t.value();
  if (effective_growth(f) >= 2.0 * s) {
    throw NonIntegrableTail("growth exponent must stay below 2t");
  }
  const double r0 = n == 1 ? x.x : x.norm();
  const Geometry g = singular_geometry(f, r0);
  check_evaluation_point(f, g, q);
  const double fx = f.at(r0);

  KernelIntegrand k = base_integrand(n, s, g);
  k.growth_exponent = effective_growth(f);
  if (n == 1) {
    k.difference = [&](double z) { return 2.0 * fx - f.at(r0 + z) - f.at(r0 - z); };
    if (f.support_radius) {
      k.constant_beyond = std::abs(r0) + *f.support_radius;
      k.tail_value = 2.0 * fx;
    }
  } else {
    if (r0 == 0.0) {
      k.difference = [&](double rho) { return 2.0 * std::numbers::pi * (fx - f.at(rho)); };
    } else {
      std::vector<double> radii = f.singular_points;
      if (f.support_radius) {
        radii.push_back(*f.support_radius);
      }
      k.difference = [&, radii](double rho) {
        auto h = [&](double th) {
          const double a = rho * std::cos(th);
          const double b = rho * std::sin(th);
          return 2.0 * fx - f.at(std::hypot(r0 + a, b)) - f.at(std::hypot(r0 - a, b));
        };
        return angular(h, r0, rho, radii, f.smooth_joins, q);
      };
    }
    if (f.support_radius) {
      k.constant_beyond = r0 + *f.support_radius;
      k.tail_value = 2.0 * std::numbers::pi * fx;
    }
  }
  return c_constant(n, t) * integrate_kernel(k, q);
}

double bilinear_I(const FunctionHandle& w1, const FunctionHandle& w2, int n, FracOrder t, Point x,
                  const QuadratureSpec& q) {
  require_dim(w1, n);
  require_dim(w2, n);
  const double s = t.value();
  const double growth = effective_growth(w1) + effective_growth(w2);
  if (growth >= 2.0 * s) {
    throw NonIntegrableTail("combined growth of the two factors must stay below 2t");
  }
  const double r0 = n == 1 ? x.x : x.norm();
  const Geometry g1 = singular_geometry(w1, r0);
  const Geometry g2 = singular_geometry(w2, r0);
  check_evaluation_point(w1, g1, q);
  check_evaluation_point(w2, g2, q);
  Geometry g = g1;
  g.breaks.insert(g.breaks.end(), g2.breaks.begin(), g2.breaks.end());
  g.joins.insert(g.joins.end(), g2.joins.begin(), g2.joins.end());

  const double a = w1.at(r0);
  const double b = w2.at(r0);
  KernelIntegrand k = base_integrand(n, s, g);
  k.growth_exponent = growth;
  // The integrand vanishes identically once both factors sit outside their supports.
  if (w1.support_radius && w2.support_radius) {
    k.constant_beyond = std::abs(r0) + std::max(*w1.support_radius, *w2.support_radius);
    k.tail_value = (n == 1 ? 2.0 : 2.0 * std::numbers::pi) * a * b;
  }
  auto pair = [&](double y) { return (a - w1.at(y)) * (b - w2.at(y)); };
  if (n == 1) {
    k.difference = [&](double z) { return pair(r0 + z) + pair(r0 - z); };
  } else if (r0 == 0.0) {
    k.difference = [&](double rho) { return 2.0 * std::numbers::pi * pair(rho); };
  } else {
    std::vector<double> radii = w1.singular_points;
    radii.insert(radii.end(), w2.singular_points.begin(), w2.singular_points.end());
    std::vector<double> joins = w1.smooth_joins;
    joins.insert(joins.end(), w2.smooth_joins.begin(), w2.smooth_joins.end());
    for (const FunctionHandle* w : {&w1, &w2}) {
      if (w->support_radius) {
        radii.push_back(*w->support_radius);
      }
    }
    k.difference = [&, radii](double rho) {
      auto h = [&](double th) {
        const double a = rho * std::cos(th);
        const double b = rho * std::sin(th);
        return pair(std::hypot(r0 + a, b)) + pair(std::hypot(r0 - a, b));
      };
      return angular(h, r0, rho, radii, joins, q);
    };
  }
  return c_constant(n, t) * integrate_kernel(k, q);
}

double product_rule_residual(const FunctionHandle& w1, const FunctionHandle& w2, int n, FracOrder t, Point x,
                             const QuadratureSpec& q) {
  const double r0 = n == 1 ? x.x : x.norm();
  const double lhs = frac_laplacian(product(w1, w2), n, t, x, q);
  const double rhs = w1.at(r0) * frac_laplacian(w2, n, t, x, q) + w2.at(r0) * frac_laplacian(w1, n, t, x, q) -
                     bilinear_I(w1, w2, n, t, x, q);
  return std::abs(lhs - rhs);
}

}  // namespace fraclap

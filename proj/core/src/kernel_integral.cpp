#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "fraclap/error.hpp"
#include "fraclap/gauss.hpp"
#include "fraclap/quadrature.hpp"

namespace fraclap {

int QuadratureSpec::resolved_order(int dim) const {
  if (gauss_order) {
    return *gauss_order;
  }
  return dim == 1 ? 20 : 10;
}

int QuadratureSpec::resolved_levels(int dim) const {
  if (grading_levels) {
    return *grading_levels;
  }
  // Smallest graded panel ~ target_tol * 1e-8 (1-D) or target_tol * 1e-1 (2-D)
  // relative to the interval.
  const double floor = dim == 1 ? target_tol * 1e-8 : target_tol * 1e-1;
  return std::max(4, static_cast<int>(std::ceil(std::log(floor) / std::log(grading_ratio))));
}

QuadratureSpec QuadratureSpec::refined() const {
  QuadratureSpec r = *this;
  r.near_panels = 2 * near_panels;
  r.gauss_order = 2 * resolved_order(1);
  r.grading_levels = resolved_levels(1) + 4;
  return r;
}

namespace {

template <class F>
double panel(const F& g, double a, double b, const GaussRule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * g(mid + half * rule.nodes[i]);
  }
  return acc * half;
}

// Panels [e + w r^{j+1}, e + w r^j] (direction +1) or mirrored, j < levels,
// plus the innermost panel touching e. Grading stops before panels shrink to
// a few ulps of e, where nodes would round onto e itself.
template <class F>
double graded_half(const F& g, double e, double w, int dir, const GaussRule& rule, int levels, double ratio) {
  const double min_width = 1e4 * std::numeric_limits<double>::epsilon() * std::abs(e);
  double acc = 0.0;
  double outer = w;
  for (int j = 0; j < levels; ++j) {
    const double inner = outer * ratio;
    if (inner < min_width) {
      break;
    }
    acc += dir > 0 ? panel(g, e + inner, e + outer, rule) : panel(g, e - outer, e - inner, rule);
    outer = inner;
  }
  acc += dir > 0 ? panel(g, e, e + outer, rule) : panel(g, e - outer, e, rule);
  return acc;
}

template <class F>
double graded(const F& g, double a, double b, bool left, bool right, const GaussRule& rule, int levels,
              double ratio) {
  if (!(b > a)) {
    return 0.0;
  }
  if (!left && !right) {
    return panel(g, a, b, rule);
  }
  if (left && right) {
    const double m = 0.5 * (a + b);
    return graded_half(g, a, m - a, +1, rule, levels, ratio) + graded_half(g, b, b - m, -1, rule, levels, ratio);
  }
  if (left) {
    return graded_half(g, a, b - a, +1, rule, levels, ratio);
  }
  return graded_half(g, b, b - a, -1, rule, levels, ratio);
}

}  // namespace

double integrate_graded(const std::function<double(double)>& g, double a, double b, bool grade_left,
                        bool grade_right, int order, int levels, double ratio) {
  return graded(g, a, b, grade_left, grade_right, gauss_legendre(order), levels, ratio);
}

double integrate_kernel(const KernelIntegrand& in, const QuadratureSpec& spec) {
  const double t = in.order;
  if (!(t > 0.0 && t < 1.0)) {
    throw InvalidArgument("kernel order must lie in (0,1)");
  }
  const bool exact_tail = in.constant_beyond.has_value();
  if (!exact_tail && in.growth_exponent >= 2.0 * t) {
    throw NonIntegrableTail("growth exponent must stay below 2t for the tail to converge");
  }
  const GaussRule& rule = gauss_legendre(spec.resolved_order(in.dim));
  const int levels = spec.resolved_levels(in.dim);
  const double ratio = spec.grading_ratio;

  auto clean = [](const std::vector<double>& in_breaks) {
    std::vector<double> out;
    for (double b : in_breaks) {
      if (b > 0.0 && std::isfinite(b)) {
        out.push_back(b);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const std::vector<double> breaks = clean(in.breaks);
  const std::vector<double> joins = clean(in.smooth_breaks);

  double r = 0.5;
  if (spec.split_radius) {
    r = *spec.split_radius;
  } else if (!breaks.empty() || !joins.empty()) {
    r = 0.5 * std::min(breaks.empty() ? INFINITY : breaks.front(), joins.empty() ? INFINITY : joins.front());
  }
  if (!(r > 0.0)) {
    throw InvalidArgument("split radius must be positive");
  }

  // Near field: with z = r v^m, m = 1/(2-2t), the weight z^{1-2t} dz becomes
  // r^{2-2t} m dv and S(z)/z^2 is bounded. S/z^2 is frozen below z_c to keep
  // the second difference out of cancellation.
  const double m = 1.0 / (2.0 - 2.0 * t);
  const double z_clamp = 1e-3 * r;
  const double d_clamp = in.difference(z_clamp) / (z_clamp * z_clamp);
  auto near = [&](double v) {
    const double z = r * std::pow(v, m);
    if (z <= z_clamp) {
      return d_clamp;
    }
    return in.difference(z) / (z * z);
  };
  double near_sum = 0.0;
  const int P = std::max(1, spec.near_panels);
  for (int p = 0; p < P; ++p) {
    near_sum += panel(near, static_cast<double>(p) / P, static_cast<double>(p + 1) / P, rule);
  }
  double total = std::pow(r, 2.0 - 2.0 * t) * m * near_sum;

  // Far field: edges carry a flag telling whether panels grade toward them.
  auto kernel = [&](double z) { return in.difference(z) * std::pow(z, -1.0 - 2.0 * t); };
  std::vector<std::pair<double, bool>> edges;
  for (double b : breaks) {
    edges.emplace_back(b, true);
  }
  for (double b : joins) {
    edges.emplace_back(b, false);
  }
  std::sort(edges.begin(), edges.end());
  std::vector<std::pair<double, bool>> kept{{r, false}};
  for (const auto& e : edges) {
    if (e.first <= r * (1.0 + 1e-12)) {
      continue;
    }
    if (e.first <= kept.back().first * (1.0 + 1e-12)) {
      kept.back().second = kept.back().second || e.second;
    } else {
      kept.push_back(e);
    }
  }
  const double last = kept.back().first;
  double T = 0.0;
  if (exact_tail) {
    T = std::max(*in.constant_beyond, last);
  } else if (spec.far_truncation) {
    T = std::max(*spec.far_truncation, last);
  } else {
    T = 2.0 * last;
  }
  if (T > last * (1.0 + 1e-12)) {
    kept.emplace_back(T, false);
  }
  for (std::size_t i = 0; i + 1 < kept.size(); ++i) {
    total += graded(kernel, kept[i].first, kept[i + 1].first, kept[i].second, kept[i + 1].second, rule, levels,
                    ratio);
  }
  T = kept.back().first;

  // Tail.
  if (exact_tail) {
    total += in.tail_value * std::pow(T, -2.0 * t) / (2.0 * t);
  } else {
    // u = T/z, u = v^q with q = 1/(2t - g+) flattens the algebraic behavior at v -> 0.
    const double g = std::max(in.growth_exponent, 0.0);
    const double q = 1.0 / (2.0 * t - g);
    auto tail = [&](double v) {
      const double z = T * std::pow(v, -q);
      if (!std::isfinite(z)) {
        return 0.0;
      }
      return in.difference(z) * q * std::pow(v, q * 2.0 * t - 1.0);
    };
    total += std::pow(T, -2.0 * t) * graded(tail, 0.0, 1.0, true, false, rule, levels, ratio);
  }
  return total;
}

}  // namespace fraclap

#include "fraclap/closed_forms.hpp"

#include <algorithm>
#include <cmath>

#include "fraclap/error.hpp"
#include "fraclap/operator.hpp"

namespace fraclap {

double ball_coefficient(int n, FracOrder s) {
  const double t = s.value();
  return std::pow(2.0, -2.0 * t) * std::tgamma(0.5 * n) / (std::tgamma(0.5 * (n + 2.0 * t)) * std::tgamma(1.0 + t));
}

FunctionHandle ball_solution(int n, FracOrder s, double r, double x0) {
  if (!(r > 0.0)) {
    throw InvalidArgument("ball radius must be positive");
  }
  const double coeff = ball_coefficient(n, s);
  const double t = s.value();
  if (n == 1) {
    auto f = [=](double x) {
      const double d = (r - (x - x0)) * (r + (x - x0));
      return d > 0.0 ? coeff * std::pow(d, t) : 0.0;
    };
    return FunctionHandle::on_line(f, {x0 - r, x0 + r}, 0.0, std::abs(x0) + r, Smoothness::CAlphaOnly);
  }
  if (n == 2) {
    auto f = [=](double rho) {
      const double d = (r - rho) * (r + rho);
      return d > 0.0 ? coeff * std::pow(d, t) : 0.0;
    };
    return FunctionHandle::radial(f, {r}, 0.0, r, Smoothness::CAlphaOnly);
  }
  throw InvalidArgument("dimension must be 1 or 2");
}

FunctionHandle halfspace_profile(FracOrder s) {
  const double t = s.value();
  return FunctionHandle::on_line([t](double x) { return x > 0.0 ? std::pow(x, t) : 0.0; }, {0.0}, t, std::nullopt,
                                 Smoothness::CAlphaOnly);
}

FunctionHandle kelvin_transform(const FunctionHandle& u, int n, FracOrder s) {
  if (u.dim != n) {
    throw InvalidArgument("function dimension does not match n");
  }
  const double w = 2.0 * s.value() - n;
  FunctionHandle k;
  k.dim = n;
  k.profile = [w, p = u.profile](double x) {
    if (x == 0.0) {
      throw EvaluationAtOrigin("the Kelvin transform is undefined at the origin");
    }
    return std::pow(std::abs(x), w) * p(1.0 / x);
  };
  k.smoothness = u.smoothness;
  k.singular_points.push_back(0.0);
  for (double p : u.singular_points) {
    if (p != 0.0) {
      k.singular_points.push_back(1.0 / p);
    }
  }
  std::sort(k.singular_points.begin(), k.singular_points.end());
  // Near infinity u* behaves like |x|^{2s-n} u(0).
  k.growth_exponent = std::max(w, 0.0);
  return k;
}

namespace {

double smoothstep(double r) {
  const double t = r - 4.0;
  if (t <= 0.0) {
    return 0.0;
  }
  if (t >= 1.0) {
    return 1.0;
  }
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

std::vector<double> mirrored(int n, const std::vector<double>& radii) {
  if (n == 2) {
    return radii;
  }
  std::vector<double> pts;
  for (double r : radii) {
    pts.push_back(-r);
    pts.push_back(r);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

FunctionHandle radial_handle(int n, std::function<double(double)> f, std::vector<double> radii, double growth,
                             std::optional<double> support, Smoothness smooth, std::vector<double> joins = {}) {
  FunctionHandle h;
  if (n == 1) {
    h = FunctionHandle::on_line([f = std::move(f)](double x) { return f(std::abs(x)); }, mirrored(n, radii),
                                growth, support, smooth);
  } else if (n == 2) {
    h = FunctionHandle::radial(std::move(f), radii, growth, support, smooth);
  } else {
    throw InvalidArgument("dimension must be 1 or 2");
  }
  h.smooth_joins = mirrored(n, joins);
  return h;
}

// `count` points a + (b - a)(i + shift)/count.
std::vector<double> grid(double a, double b, int count, double shift) {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = a + (b - a) * (i + shift) / count;
  }
  return out;
}

constexpr int kGridPoints = 200;

}  // namespace

FunctionHandle smooth_cutoff(int n) {
  return radial_handle(n, smoothstep, {}, 0.0, std::nullopt, Smoothness::C2NearX, {4.0, 5.0});
}

FunctionHandle ball_indicator(int n, double r) {
  return radial_handle(n, [r](double x) { return x <= r ? 1.0 : 0.0; }, {r}, 0.0, r, Smoothness::CAlphaOnly);
}

Barrier supersolution_phi1(int n, FracOrder s, const QuadratureSpec& q) {
  const double t = s.value();
  const double coeff = ball_coefficient(n, s);
  const double w = 2.0 * t - n;
  auto kelvin_profile = [=](double r) {
    if (r <= 1.0) {
      return 0.0;
    }
    return std::pow(r, w) * coeff * std::pow((1.0 - 1.0 / r) * (1.0 + 1.0 / r), t);
  };
  const double growth = std::max(w, 0.0);
  const FunctionHandle K = radial_handle(n, kelvin_profile, {1.0}, growth, std::nullopt, Smoothness::CAlphaOnly);
  const FunctionHandle xi = smooth_cutoff(n);

  double A = 0.0;
  double C2 = 0.0;
  for (double r : grid(1.0, 4.0, kGridPoints, 0.5)) {
    const double lk = frac_laplacian(K, n, s, Point(r), q);
    const double lxi = frac_laplacian(xi, n, s, Point(r), q);
    if (!(lk > 0.0)) {
      throw CalibrationFailed("Kelvin profile is not s-superharmonic on the calibration grid");
    }
    C2 = std::max(C2, -lxi);
    A = std::max(A, (1.0 - lxi) / lk);
  }
  A *= 1.02;
  if (A > 10.0 * std::pow(4.0, 2.0 * t + n)) {
    throw CalibrationFailed("supersolution amplitude exceeds 10*4^(2s+n)");
  }

  Barrier b;
  b.kind = Barrier::Kind::SupersolutionPhi1;
  b.n = n;
  b.s = t;
  b.amplitude = A;
  b.C2 = C2;
  b.function = radial_handle(
      n, [=](double r) { return A * kelvin_profile(r) + smoothstep(r); }, {1.0}, growth, std::nullopt,
      Smoothness::CAlphaOnly, {4.0, 5.0});

  double lo = INFINITY;
  for (double r : grid(1.0, 4.0, kGridPoints, 0.25)) {
    lo = std::min(lo, frac_laplacian(b.function, n, s, Point(r), q));
  }
  b.verified_extreme = lo;
  b.verification_points = kGridPoints;

  double c1 = 0.0;
  for (double r : grid(1.0, 4.0, 4 * kGridPoints, 1.0)) {
    c1 = std::max(c1, b.function.at(r) / std::pow(r - 1.0, t));
  }
  double outside = INFINITY;
  for (double r : grid(4.0, 40.0, 4 * kGridPoints, 0.0)) {
    const double v = b.function.at(r);
    c1 = std::max(c1, v);
    outside = std::min(outside, v);
  }
  b.C1 = c1;
  b.min_outside = outside;
  return b;
}

Barrier subsolution_psi(int n, FracOrder s, const QuadratureSpec& q) {
  const double t = s.value();
  auto psi1 = [t](double r) {
    const double d = (1.0 - r) * (1.0 + r);
    return d > 0.0 ? std::pow(d, t) : 0.0;
  };
  const FunctionHandle P = radial_handle(n, psi1, {1.0}, 0.0, 1.0, Smoothness::CAlphaOnly);
  const FunctionHandle chi = ball_indicator(n, 0.25);

  double C = 0.0;
  for (int i = 0; i < kGridPoints; ++i) {
    const double r = 0.3 + 0.65 * i / (kGridPoints - 1);
    const double lp = frac_laplacian(P, n, s, Point(r), q);
    const double lc = frac_laplacian(chi, n, s, Point(r), q);
    if (!(lc < 0.0)) {
      throw CalibrationFailed("indicator term is not negative on the calibration grid");
    }
    C = std::max(C, lp / -lc);
  }
  C = std::max(C, 0.0);
  C *= 1.02;
  if (C > 10.0 * std::pow(4.0, 2.0 * t + n)) {
    throw CalibrationFailed("subsolution amplitude exceeds 10*4^(2s+n)");
  }

  Barrier b;
  b.kind = Barrier::Kind::SubsolutionPsi;
  b.n = n;
  b.s = t;
  b.amplitude = C;
  b.function = radial_handle(
      n, [=](double r) { return psi1(r) + (r <= 0.25 ? C : 0.0); }, {0.25, 1.0}, 0.0, 1.0, Smoothness::CAlphaOnly);

  double hi = -INFINITY;
  for (double r : grid(0.3, 0.95, kGridPoints, 0.5)) {
    hi = std::max(hi, frac_laplacian(b.function, n, s, Point(r), q));
  }
  b.verified_extreme = hi;
  b.verification_points = kGridPoints;

  double c = INFINITY;
  for (double r : grid(0.0, 1.0, 4 * kGridPoints, 0.5)) {
    c = std::min(c, b.function.at(r) / std::pow(1.0 - r, t));
  }
  b.C2 = c;
  return b;
}

}  // namespace fraclap

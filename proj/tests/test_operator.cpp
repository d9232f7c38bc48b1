#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fraclap/closed_forms.hpp"
#include "fraclap/error.hpp"
#include "fraclap/operator.hpp"

using namespace fraclap;

namespace {

constexpr double kTol = 1e-4;

FunctionHandle gaussian(double center = 0.0, double width = 1.0) {
  return FunctionHandle::on_line([=](double x) { return std::exp(-(x - center) * (x - center) / (width * width)); });
}

// (-Δ)^t e^{-x²} through its Fourier symbol:
// (1/π) ∫_0^∞ ξ^{2t} √π e^{-ξ²/4} cos(ξx) dξ, integrated with ξ = u² by Simpson.
double gaussian_oracle(double t, double x) {
  const int m = 40000;
  const double U = 4.5;
  const double h = U / m;
  auto g = [&](double u) {
    const double xi = u * u;
    return 2.0 * u * std::pow(xi, 2.0 * t) * std::exp(-xi * xi / 4.0) * std::cos(xi * x);
  };
  double acc = g(0.0) + g(U);
  for (int i = 1; i < m; ++i) {
    acc += (i % 2 == 1 ? 4.0 : 2.0) * g(i * h);
  }
  return acc * h / 3.0 * std::sqrt(std::numbers::pi) / std::numbers::pi;
}

FunctionHandle smooth_bump() {
  return FunctionHandle::on_line(
      [](double x) { return std::abs(x) < 1.0 ? std::exp(-1.0 / ((1.0 - x) * (1.0 + x))) : 0.0; }, {}, 0.0, 1.0);
}

}  // namespace

TEST(CConstant, OneDimensionalHalf) { EXPECT_NEAR(c_constant(1, FracOrder(0.5)), 1.0 / std::numbers::pi, 1e-15); }

TEST(CConstant, TwoDimensionalHalf) {
  EXPECT_NEAR(c_constant(2, FracOrder(0.5)), 1.0 / (2.0 * std::numbers::pi), 1e-15);
}

TEST(CConstant, VanishesLinearlyAtOneAndKeepsBallIdentity) {
  // |Γ(-t)| ~ 1/(1-t), so c_{1,t} ~ 4 Γ(3/2)/√π (1-t) = 2(1-t).
  double prev = INFINITY;
  for (double t : {0.7, 0.8, 0.9, 0.99}) {
    const FracOrder s(t);
    const double c = c_constant(1, s);
    EXPECT_LT(c, prev);
    prev = c;
    EXPECT_NEAR(frac_laplacian(ball_solution(1, s), 1, s, Point(0.0)), 1.0, 1e-3) << "t=" << t;
  }
  EXPECT_NEAR(c_constant(1, FracOrder(0.999)) / 0.001, 2.0, 0.01);
}

TEST(FracOrder, RejectsOutOfRange) {
  EXPECT_THROW(FracOrder(0.0), InvalidArgument);
  EXPECT_THROW(FracOrder(1.0), InvalidArgument);
  EXPECT_THROW(FracOrder(-0.2), InvalidArgument);
  EXPECT_DOUBLE_EQ(FracOrder(0.6).half().value(), 0.3);
}

TEST(FracLaplacian, BallProfileAtCentre) {
  const FracOrder s(0.5);
  const FunctionHandle f = FunctionHandle::on_line(
      [](double x) { return std::abs(x) < 1.0 ? std::sqrt(1.0 - x * x) : 0.0; }, {-1.0, 1.0}, 0.0, 1.0,
      Smoothness::CAlphaOnly);
  EXPECT_NEAR(frac_laplacian(f, 1, s, Point(0.0)), 1.0, kTol);
}

TEST(FracLaplacian, ConstantGivesZero) {
  for (int n : {1, 2}) {
    EXPECT_EQ(frac_laplacian(FunctionHandle::constant(3.5, n), n, FracOrder(0.4), Point(0.3)), 0.0);
  }
}

TEST(FracLaplacian, HalfspaceProfileIsHarmonic) {
  const FracOrder s(0.3);
  EXPECT_NEAR(frac_laplacian(halfspace_profile(s), 1, s, Point(1.0)), 0.0, kTol);
}

TEST(FracLaplacian, ScaledBallSolution) {
  const FracOrder s(0.35);
  const FunctionHandle u = ball_solution(1, s, 2.0, 0.5);
  for (double x : {-1.3, 0.0, 0.5, 1.9, 2.3}) {
    EXPECT_NEAR(frac_laplacian(u, 1, s, Point(x)), 1.0, 1e-3) << "x=" << x;
  }
}

TEST(FracLaplacian, TwoDimensionalBall) {
  const FracOrder s(0.5);
  const FunctionHandle u = ball_solution(2, s);
  for (double r : {0.0, 0.3, 0.7, 0.95}) {
    EXPECT_NEAR(frac_laplacian(u, 2, s, Point(r, 0.0)), 1.0, 5e-3) << "r=" << r;
  }
  // Radial: only |x| matters.
  EXPECT_NEAR(frac_laplacian(u, 2, s, Point(0.3, 0.4)), frac_laplacian(u, 2, s, Point(0.5, 0.0)), 1e-12);
}

TEST(FracLaplacian, IndicatorMatchesClosedForm) {
  // Inside (-1,1): (-Δ)^t χ(x) = c/(2t) ((1-x)^{-2t} + (1+x)^{-2t}).
  for (double t : {0.25, 0.5, 0.75}) {
    const FracOrder s(t);
    const FunctionHandle chi = ball_indicator(1, 1.0);
    for (double x : {0.0, 0.4, -0.7}) {
      const double exact =
          c_constant(1, s) / (2.0 * t) * (std::pow(1.0 - x, -2.0 * t) + std::pow(1.0 + x, -2.0 * t));
      EXPECT_NEAR(frac_laplacian(chi, 1, s, Point(x)) / exact, 1.0, 1e-8) << "t=" << t << " x=" << x;
    }
  }
}

TEST(FracLaplacian, GaussianMatchesFourierSymbol) {
  for (double t : {0.2, 0.5, 0.8}) {
    const FracOrder s(t);
    for (double x : {0.0, 0.7, 2.0}) {
      EXPECT_NEAR(frac_laplacian(gaussian(), 1, s, Point(x)), gaussian_oracle(t, x), kTol) << "t=" << t << " x=" << x;
    }
  }
  EXPECT_NEAR(gaussian_oracle(0.5, 0.0), 2.0 / std::sqrt(std::numbers::pi), 1e-9);
}

TEST(FracLaplacian, RejectsFastGrowth) {
  EXPECT_THROW((void)frac_laplacian(halfspace_profile(FracOrder(0.5)), 1, FracOrder(0.25), Point(1.0)),
               NonIntegrableTail);
}

TEST(FracLaplacian, RejectsSingularityInNearField) {
  const FracOrder s(0.5);
  const FunctionHandle u = ball_solution(1, s);
  EXPECT_THROW((void)frac_laplacian(u, 1, s, Point(1.0)), NonSmoothEvaluationPoint);
  QuadratureSpec q;
  q.split_radius = 0.5;
  EXPECT_THROW((void)frac_laplacian(u, 1, s, Point(0.8), q), NonSmoothEvaluationPoint);
}

TEST(FracLaplacianProperty, Linearity) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int trial = 0; trial < 6; ++trial) {
    const FracOrder s(0.5 + 0.4 * U(rng));
    const FunctionHandle f = gaussian(U(rng), 0.6 + 0.4 * U(rng));
    const FunctionHandle g = gaussian(U(rng), 1.0 + 0.5 * U(rng));
    const double a = 2.0 * U(rng);
    const double b = 2.0 * U(rng);
    const Point x(0.5 * U(rng));
    const double lhs = frac_laplacian(linear_combination(a, f, b, g), 1, s, x);
    const double rhs = a * frac_laplacian(f, 1, s, x) + b * frac_laplacian(g, 1, s, x);
    EXPECT_NEAR(lhs, rhs, 2.0 * kTol);
  }
}

TEST(FracLaplacianProperty, TranslationInvariance) {
  const FracOrder s(0.4);
  const FunctionHandle u = ball_solution(1, s);
  const FunctionHandle g = gaussian(0.2, 0.8);
  for (double shift : {-0.75, 0.3, 2.0}) {
    EXPECT_NEAR(frac_laplacian(translated(u, shift), 1, s, Point(0.25 + shift)),
                frac_laplacian(u, 1, s, Point(0.25)), kTol);
    EXPECT_NEAR(frac_laplacian(translated(g, shift), 1, s, Point(-0.4 + shift)),
                frac_laplacian(g, 1, s, Point(-0.4)), kTol);
  }
}

TEST(FracLaplacianProperty, Scaling) {
  for (double t : {0.3, 0.7}) {
    const FracOrder s(t);
    const FunctionHandle g = gaussian(0.1, 0.9);
    for (double lambda : {0.5, 2.0, 3.0}) {
      const double x = 0.2;
      const double lhs = frac_laplacian(dilated(g, lambda), 1, s, Point(x));
      const double rhs = std::pow(lambda, 2.0 * t) * frac_laplacian(g, 1, s, Point(lambda * x));
      EXPECT_NEAR(lhs, rhs, kTol * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST(FracLaplacianProperty, RefinementContracts) {
  const FracOrder s(0.6);
  for (const FunctionHandle& f : {gaussian(0.0, 0.7), smooth_bump()}) {
    QuadratureSpec q;
    double prev = frac_laplacian(f, 1, s, Point(0.1), q);
    double prev_change = INFINITY;
    for (int k = 0; k < 3; ++k) {
      q.near_panels *= 2;
      const double v = frac_laplacian(f, 1, s, Point(0.1), q);
      const double change = std::abs(v - prev);
      EXPECT_LE(change, std::max(prev_change / 2.0, 1e-10 * std::max(1.0, std::abs(v))));
      prev_change = change;
      prev = v;
    }
  }
}

TEST(Bilinear, ConstantFactorVanishes) {
  const FracOrder s(0.4);
  EXPECT_NEAR(bilinear_I(ball_solution(1, s), FunctionHandle::constant(2.0), 1, s, Point(0.3)), 0.0, 1e-14);
}

TEST(Bilinear, SquareIsNonNegative) {
  const FracOrder s(0.4);
  for (double x : {-0.5, 0.0, 0.3, 0.9}) {
    EXPECT_GE(bilinear_I(ball_solution(1, s), ball_solution(1, s), 1, s, Point(x)), 0.0);
    EXPECT_GE(bilinear_I(gaussian(), gaussian(), 1, s, Point(x)), 0.0);
  }
}

TEST(Bilinear, BallProfileMatchesProductRuleOracle) {
  const FracOrder s(0.4);
  const FunctionHandle w = FunctionHandle::on_line(
      [](double x) {
        const double d = (1.0 - x) * (1.0 + x);
        return d > 0.0 ? std::pow(d, 0.4) : 0.0;
      },
      {-1.0, 1.0}, 0.0, 1.0, Smoothness::CAlphaOnly);
  const Point x(0.3);
  const double oracle = 2.0 * w(x) * frac_laplacian(w, 1, s, x) - frac_laplacian(product(w, w), 1, s, x);
  EXPECT_NEAR(bilinear_I(w, w, 1, s, x), oracle, kTol);
}

TEST(Bilinear, Symmetric) {
  const FracOrder s(0.55);
  const FunctionHandle a = ball_solution(1, s);
  const FunctionHandle b = gaussian(0.3, 0.5);
  for (double x : {-0.4, 0.2, 0.6}) {
    const double ab = bilinear_I(a, b, 1, s, Point(x));
    const double ba = bilinear_I(b, a, 1, s, Point(x));
    EXPECT_NEAR(ab, ba, 1e-13 * std::max(1.0, std::abs(ab)));
  }
}

TEST(ProductRule, IdentityFactor) {
  const FracOrder s(0.3);
  EXPECT_LE(product_rule_residual(FunctionHandle::constant(1.0), gaussian(), 1, s, Point(0.2)), kTol);
}

TEST(ProductRule, SmoothBump) {
  const FracOrder s(0.4);
  EXPECT_LE(product_rule_residual(smooth_bump(), smooth_bump(), 1, s, Point(0.0)), 10.0 * kTol);
}

TEST(ProductRule, HalfspaceTimesCutoff) {
  const FracOrder s(0.4);
  FunctionHandle cutoff = FunctionHandle::on_line(
      [](double x) {
        const double t = std::clamp(std::abs(x) - 2.0, 0.0, 1.0);
        return 1.0 - t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
      },
      {}, 0.0, 3.0);
  cutoff.smooth_joins = {-3.0, -2.0, 2.0, 3.0};
  for (double x : {0.5, 1.0, 1.5}) {
    EXPECT_LE(product_rule_residual(halfspace_profile(s), cutoff, 1, s, Point(x)), kTol) << "x=" << x;
  }
}

#include <gtest/gtest.h>

#include <cmath>

#include "fraclap/error.hpp"
#include "fraclap/gauss.hpp"
#include "fraclap/quadrature.hpp"

using namespace fraclap;

TEST(GaussLegendre, ExactForPolynomials) {
  for (int n : {1, 2, 5, 10, 20}) {
    const GaussRule& g = gauss_legendre(n);
    ASSERT_EQ(g.nodes.size(), static_cast<std::size_t>(n));
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double q = 0.0;
      for (int i = 0; i < n; ++i) {
        q += g.weights[i] * std::pow(g.nodes[i], p);
      }
      const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
      EXPECT_NEAR(q, exact, 1e-13) << "n=" << n << " p=" << p;
    }
  }
}

TEST(GaussLegendre, CachedReferenceIsStable) {
  const GaussRule* a = &gauss_legendre(12);
  (void)gauss_legendre(13);
  EXPECT_EQ(a, &gauss_legendre(12));
  EXPECT_THROW((void)gauss_legendre(0), InvalidArgument);
}

TEST(GaussJacobi, MatchesBetaMoments) {
  // ∫_{-1}^{1} (1-x)^a (1+x)^b dx = 2^{a+b+1} B(a+1, b+1).
  for (auto [a, b] : {std::pair{0.0, 0.5}, {-0.5, 0.0}, {0.3, -0.7}, {1.5, 2.0}}) {
    const GaussRule g = gauss_jacobi(16, a, b);
    double q = 0.0;
    double q1 = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      q += g.weights[i];
      q1 += g.weights[i] * (1.0 + g.nodes[i]);
    }
    const double beta = std::exp(std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2));
    EXPECT_NEAR(q, std::pow(2.0, a + b + 1) * beta, 1e-12);
    const double beta1 = std::exp(std::lgamma(a + 1) + std::lgamma(b + 2) - std::lgamma(a + b + 3));
    EXPECT_NEAR(q1, std::pow(2.0, a + b + 2) * beta1, 1e-12);
  }
  EXPECT_THROW((void)gauss_jacobi(4, -1.0, 0.0), InvalidArgument);
}

TEST(IntegrateGraded, EndpointSingularities) {
  const double inv_sqrt = integrate_graded([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, true, false, 20, 20,
                                           0.2);
  // The innermost panel [0, 0.2^20] carries 2e-7 of mass and is integrated to about 2%.
  EXPECT_NEAR(inv_sqrt, 2.0, 1e-8);
  const double log_right =
      integrate_graded([](double x) { return std::log(1.0 - x); }, 0.0, 1.0, false, true, 20, 20, 0.2);
  EXPECT_NEAR(log_right, -1.0, 1e-10);
  const double smooth = integrate_graded([](double x) { return std::exp(x); }, -1.0, 2.0, false, false, 20, 0, 0.2);
  EXPECT_NEAR(smooth, std::exp(2.0) - std::exp(-1.0), 1e-13);
}

TEST(IntegrateKernel, GaussianDifferenceClosedForm) {
  // ∫_0^∞ (1 - e^{-z²}) z^{-1-2t} dz = Γ(1-t) / (2t).
  for (double t : {0.2, 0.5, 0.8}) {
    KernelIntegrand k;
    k.difference = [](double z) { return -std::expm1(-z * z); };
    k.order = t;
    k.breaks = {1.0};
    k.tail_value = 1.0;
    k.growth_exponent = 0.0;
    const double exact = std::tgamma(1.0 - t) / (2.0 * t);
    EXPECT_NEAR(integrate_kernel(k, {}) / exact, 1.0, 1e-6) << "t=" << t;
  }
}

TEST(IntegrateKernel, ConstantTailIsExact) {
  // S = z² below 1 and 1 above: 1/(2-2t) + 1/(2t).
  for (double t : {0.25, 0.5, 0.75}) {
    KernelIntegrand k;
    k.difference = [](double z) { return z < 1.0 ? z * z : 1.0; };
    k.order = t;
    k.breaks = {1.0};
    k.constant_beyond = 1.0;
    k.tail_value = 1.0;
    EXPECT_NEAR(integrate_kernel(k, {}), 1.0 / (2.0 - 2.0 * t) + 1.0 / (2.0 * t), 1e-9) << "t=" << t;
  }
}

TEST(IntegrateKernel, RejectsDivergentTail) {
  KernelIntegrand k;
  k.difference = [](double z) { return z; };
  k.order = 0.3;
  k.growth_exponent = 0.6;
  EXPECT_THROW((void)integrate_kernel(k, {}), NonIntegrableTail);
}

TEST(QuadratureSpec, Refinement) {
  QuadratureSpec q;
  const QuadratureSpec r = q.refined();
  EXPECT_EQ(r.near_panels, 2 * q.near_panels);
  EXPECT_EQ(r.resolved_order(1), 2 * q.resolved_order(1));
  EXPECT_GT(r.resolved_levels(1), q.resolved_levels(1));
  EXPECT_EQ(q.resolved_order(1), 20);
  EXPECT_EQ(q.resolved_order(2), 10);
}

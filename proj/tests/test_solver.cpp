#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fraclap/closed_forms.hpp"
#include "fraclap/error.hpp"
#include "fraclap/operator.hpp"
#include "fraclap/solver.hpp"

using namespace fraclap;

namespace {

const Domain kUnit = Domain::interval(-1.0, 1.0);

FunctionHandle smooth_bump(double width) {
  return FunctionHandle::on_line(
      [=](double x) {
        const double y = x / width;
        return std::abs(y) < 1.0 ? std::exp(-1.0 / ((1.0 - y) * (1.0 + y))) : 0.0;
      },
      {}, 0.0, width);
}

}  // namespace

TEST(Assemble, ShapeAndDiagonal) {
  const CollocationSystem sys = assemble(kUnit, FracOrder(0.5), 32);
  EXPECT_EQ(sys.nodes.size(), 31u);
  EXPECT_EQ(sys.matrix.rows(), 31);
  EXPECT_EQ(sys.matrix.cols(), 31);
  for (int i = 0; i < 31; ++i) {
    EXPECT_GT(sys.matrix(i, i), 0.0);
  }
  EXPECT_NEAR(sys.nodes.front(), -1.0 + 2.0 / 32, 1e-15);
  EXPECT_THROW((void)assemble(kUnit, FracOrder(0.5), 4), InvalidArgument);
}

TEST(Assemble, ReproducesOperatorOnSmoothBump) {
  // Matrix times samples of a compactly supported smooth f against the
  // quadrature value of (-Δ)^s f at the nodes.
  for (double t : {0.3, 0.5, 0.7}) {
    const FracOrder s(t);
    const FunctionHandle f = smooth_bump(0.6);
    std::vector<double> err;
    for (int N : {32, 64, 128}) {
      const CollocationSystem sys = assemble(kUnit, s, N);
      Eigen::VectorXd v(sys.nodes.size());
      for (std::size_t i = 0; i < sys.nodes.size(); ++i) {
        v[i] = f.at(sys.nodes[i]);
      }
      const Eigen::VectorXd Av = sys.matrix * v;
      double e = 0.0;
      for (std::size_t i = 0; i < sys.nodes.size(); ++i) {
        e = std::max(e, std::abs(Av[i] - frac_laplacian(f, 1, s, Point(sys.nodes[i]))));
      }
      err.push_back(e);
    }
    EXPECT_LT(err[1], err[0]) << "t=" << t;
    EXPECT_LT(err[2], err[1]) << "t=" << t;
  }
}

TEST(SolveDirichlet, CentreValue) {
  const NumericalSolution sol = solve_dirichlet(kUnit, FracOrder(0.5), FunctionHandle::constant(1.0), 256);
  EXPECT_NEAR(sol.u(0.0), 1.0, 0.01);
  EXPECT_LE(sol.achieved_residual, 1e-10);
  EXPECT_EQ(sol.N, 256);
  EXPECT_EQ(sol.u(1.0), 0.0);
  EXPECT_EQ(sol.u(-1.5), 0.0);
}

TEST(SolveDirichlet, ZeroRightHandSide) {
  const NumericalSolution sol = solve_dirichlet(kUnit, FracOrder(0.4), FunctionHandle::constant(0.0), 64);
  for (double v : sol.u.values()) {
    EXPECT_EQ(v, 0.0);
  }
}

TEST(SolveDirichlet, Linearity) {
  const FracOrder s(0.6);
  const NumericalSolution one = solve_dirichlet(kUnit, s, FunctionHandle::constant(1.0), 128);
  const NumericalSolution two = solve_dirichlet(kUnit, s, FunctionHandle::constant(2.0), 128);
  for (std::size_t i = 0; i < one.u.size(); ++i) {
    EXPECT_NEAR(two.u.values()[i], 2.0 * one.u.values()[i], 1e-12);
  }
}

TEST(SolveDirichlet, EvenDataGivesEvenSolution) {
  const FunctionHandle g = FunctionHandle::on_line([](double x) { return std::cos(3.0 * x) + x * x; });
  for (double t : {0.25, 0.75}) {
    const NumericalSolution sol = solve_dirichlet(kUnit, FracOrder(t), g, 128);
    const auto& v = sol.u.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_NEAR(v[i], v[v.size() - 1 - i], 1e-10);
    }
  }
}

TEST(SolveDirichlet, NonNegativeDataGivesNonNegativeSolution) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int trial = 0; trial < 4; ++trial) {
    const double a = U(rng);
    const double w = 1.0 + 8.0 * U(rng);
    const FunctionHandle g = FunctionHandle::on_line([=](double x) { return a * (1.0 + std::sin(w * x)); });
    const NumericalSolution sol = solve_dirichlet(kUnit, FracOrder(0.2 + 0.6 * U(rng)), g, 128);
    for (double v : sol.u.values()) {
      EXPECT_GE(v, -1e-8 * 2.0 * a);
    }
  }
}

TEST(SolveDirichlet, NestedGridsConverge) {
  const FracOrder s(0.5);
  const FunctionHandle g = FunctionHandle::on_line([](double x) { return 1.0 + x; });
  const NumericalSolution fine = solve_dirichlet(kUnit, s, g, 256);
  double prev = INFINITY;
  for (int N : {8, 16, 32, 64}) {
    const NumericalSolution coarse = solve_dirichlet(kUnit, s, g, N);
    double d = 0.0;
    for (std::size_t i = 0; i < fine.u.size(); ++i) {
      d = std::max(d, std::abs(coarse.u(fine.u.nodes()[i]) - fine.u.values()[i]));
    }
    EXPECT_LT(d, prev) << "N=" << N;
    prev = d;
  }
}

TEST(SolveDirichlet, ShiftedInterval) {
  const FracOrder s(0.3);
  const Domain dom = Domain::interval(2.0, 6.0);
  const NumericalSolution sol = solve_dirichlet(dom, s, FunctionHandle::constant(1.0), 128);
  const FunctionHandle exact = ball_solution(1, s, 2.0, 4.0);
  EXPECT_NEAR(sol.u(4.0), exact.at(4.0), 0.01 * exact.at(4.0));
}

TEST(ConvergenceStudy, ClosedFormReference) {
  const FracOrder s(0.5);
  const ConvergenceStudy st =
      convergence_study(kUnit, s, FunctionHandle::constant(1.0), {32, 64, 128, 256}, ball_solution(1, s));
  EXPECT_GT(st.global.slope, 0.5);
  EXPECT_GE(st.global.r_squared, 0.95);
  EXPECT_GT(st.interior.slope, st.global.slope);
  EXPECT_TRUE(st.monotone);
  EXPECT_LE(st.max_error.back(), 1e-2);
}

TEST(ConvergenceStudy, SelfReference) {
  const FracOrder s(0.5);
  const ConvergenceStudy st = convergence_study(kUnit, s, FunctionHandle::constant(1.0), {16, 32, 64, 128});
  EXPECT_GT(st.global.slope, 0.5);
  EXPECT_TRUE(st.monotone);
}

TEST(ConvergenceStudy, Preconditions) {
  const FracOrder s(0.5);
  EXPECT_THROW((void)convergence_study(kUnit, s, FunctionHandle::constant(1.0), {32, 64}), InvalidArgument);
  EXPECT_THROW((void)convergence_study(kUnit, s, FunctionHandle::constant(1.0), {1024, 2048, 4096}),
               ReferenceUnavailable);
}

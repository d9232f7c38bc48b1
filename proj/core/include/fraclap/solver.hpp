#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "fraclap/function_handle.hpp"
#include "fraclap/geometry.hpp"
#include "fraclap/grid_function.hpp"
#include "fraclap/norms.hpp"

namespace fraclap {

/// Knobs of the collocation scheme.
struct SolverOptions {
  /// Cells at each end where u is interpolated as δ^s times a linear function.
  int boundary_layer_cells = 4;
  /// Nodes at each end whose near field is fitted on δ^{s+m} terms.
  int near_fit_nodes = 3;
};

/// Dense collocation system on the uniform grid a + i h, i = 1..N-1.
///
/// Away from the boundary the scheme is the quadratic-near-field /
/// hat-far-field discretization of the singular integral. Within the boundary
/// layer the far-field moments are taken against δ^s-weighted interpolants
/// and the near field of the first nodes is fitted on δ^{s+m}.
struct CollocationSystem {
  Domain domain;
  double s = 0.5;
  int N = 0;
  std::vector<double> nodes;
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
};

[[nodiscard]] CollocationSystem assemble(const Domain& dom, FracOrder s, int N, const SolverOptions& opts = {});

struct NumericalSolution {
  GridFunction u;
  double s = 0.5;
  Domain domain;
  /// ||A u - g||_∞ of the linear solve.
  double achieved_residual = 0.0;
  int N = 0;
};

/// Solves (-Δ)^s u = g in the interval, u = 0 outside. Throws SingularSystem
/// if the residual exceeds 1e-10 ||g||_∞.
[[nodiscard]] NumericalSolution solve_dirichlet(const Domain& dom, FracOrder s, const FunctionHandle& g, int N,
                                                const SolverOptions& opts = {});

struct ConvergenceStudy {
  std::vector<int> N;
  std::vector<double> h;
  std::vector<double> max_error;
  /// Max error over nodes with δ >= interior_delta.
  std::vector<double> interior_error;
  double interior_delta = 0.25;
  RateFit global;
  RateFit interior;
  /// max_error is non-increasing in N.
  bool monotone = true;
};

/// Max-node errors against `reference` (or, without one, against a solve on a
/// grid twice as fine as the finest requested, which must not exceed 4096).
/// Needs at least three grid sizes.
[[nodiscard]] ConvergenceStudy convergence_study(const Domain& dom, FracOrder s, const FunctionHandle& g,
                                                 const std::vector<int>& N_list,
                                                 const std::optional<FunctionHandle>& reference = std::nullopt,
                                                 double interior_delta = 0.25, const SolverOptions& opts = {});

}  // namespace fraclap

#pragma once

#include <vector>

namespace fraclap {

/// Nodes and weights of an interpolatory rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule. Rules are cached; the reference stays valid
/// for the lifetime of the program.
const GaussRule& gauss_legendre(int n);

/// n-point Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b, a, b > -1,
/// built with the Golub-Welsch eigenvalue method.
GaussRule gauss_jacobi(int n, double a, double b);

}  // namespace fraclap

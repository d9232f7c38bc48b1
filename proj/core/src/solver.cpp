#include "fraclap/solver.hpp"

#include <algorithm>
#include <cmath>

#include "fraclap/error.hpp"
#include "fraclap/gauss.hpp"
#include "fraclap/operator.hpp"
#include "fraclap/quadrature.hpp"

namespace fraclap {

namespace {

// ∫_a^b z^p dz, 0 < a < b.
double power_integral(double p, double a, double b) {
  if (std::abs(p + 1.0) < 1e-14) {
    return std::log(b / a);
  }
  return (std::pow(b, p + 1.0) - std::pow(a, p + 1.0)) / (p + 1.0);
}

// ∫ hat_j(t) t^{-1-2s} dt for the hat centred at j >= 2: the second difference
// of F(t) = t^a / (a(a-1)), a = 1 - 2s, written to avoid cancellation.
double hat_moment(int j, double s) {
  const double a = 1.0 - 2.0 * s;
  const double up = std::log1p(1.0 / j);
  const double down = std::log1p(-1.0 / j);
  if (std::abs(a) < 1e-12) {
    return -(up + down);
  }
  return std::pow(static_cast<double>(j), a) / (a * (a - 1.0)) * (std::expm1(a * up) + std::expm1(a * down));
}

// Far part (distance 1..2) of the neighbour hat: ∫_1^2 (2 - z) z^{-1-2s} dz.
double neighbour_moment(double s) {
  const double q = -1.0 - 2.0 * s;
  return 2.0 * power_integral(q, 1.0, 2.0) - power_integral(q + 1.0, 1.0, 2.0);
}

// ∫_a^b shape(t) |k - t|^{-1-2s} dt for the linear shape that is 1 at `one`
// and 0 at the other end of the cell [a, b]; k lies outside (a, b).
double linear_moment(double k, double a, double b, double one, double s) {
  const double q = -1.0 - 2.0 * s;
  const double other = one == a ? b : a;
  // shape(t) = (t - other)/(one - other); write t = k ∓ z.
  const double sign = b <= k ? -1.0 : 1.0;  // t = k + sign z
  const double z0 = std::abs(k - a);
  const double z1 = std::abs(k - b);
  const double lo = std::min(z0, z1);
  const double hi = std::max(z0, z1);
  const double alpha = (k - other) / (one - other);
  const double beta = sign / (one - other);
  return alpha * power_integral(q, lo, hi) + beta * power_integral(q + 1.0, lo, hi);
}

// ∫_a^b t^s shape(t) |k - t|^{-1-2s} dt on a cell with a >= 1.
double weighted_moment(double k, double a, double b, double one, double s) {
  const GaussRule& g = gauss_legendre(24);
  const double other = one == a ? b : a;
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const double t = mid + half * g.nodes[i];
    acc += g.weights[i] * std::pow(t, s) * (t - other) / (one - other) * std::pow(std::abs(k - t), -1.0 - 2.0 * s);
  }
  return acc * half;
}

// ∫_0^1 t^s |k - t|^{-1-2s} dt, k >= 2.
double first_cell_moment(double k, double s, const GaussRule& jacobi) {
  double acc = 0.0;
  for (std::size_t i = 0; i < jacobi.nodes.size(); ++i) {
    const double t = 0.5 * (1.0 + jacobi.nodes[i]);
    acc += jacobi.weights[i] * std::pow(k - t, -1.0 - 2.0 * s);
  }
  return acc * std::pow(2.0, -s - 1.0);
}

// ∫_0^1 (2k^p - (k+z)^p - (k-z)_+^p) z^{-1-2s} dz on the unit grid.
double near_moment(double p, double k, double s) {
  // D(z) = S(z)/z², by its Taylor series where the direct form cancels.
  auto D = [&](double z) {
    if (z <= 0.5 * k) {
      double acc = 0.0;
      double binom = 1.0;  // binom(p, 2j)
      double r = 1.0;      // (z/k)^{2j-2}
      const double zk2 = (z / k) * (z / k);
      for (int j = 1; j <= 200; ++j) {
        binom *= (p - (2 * j - 2)) * (p - (2 * j - 1)) / ((2.0 * j - 1) * (2.0 * j));
        const double term = binom * r;
        acc += term;
        if (std::abs(term) < 1e-18 * std::abs(acc)) {
          break;
        }
        r *= zk2;
      }
      return -2.0 * std::pow(k, p - 2.0) * acc;
    }
    const double minus = k - z > 0.0 ? std::pow(k - z, p) : 0.0;
    return (2.0 * std::pow(k, p) - std::pow(k + z, p) - minus) / (z * z);
  };
  // z = v^m turns z^{1-2s} dz into m dv.
  const double m = 1.0 / (2.0 - 2.0 * s);
  auto g = [&](double v) { return m * D(std::pow(v, m)); };
  return integrate_graded(g, 0.0, 1.0, true, true, 30, 24, 0.2);
}

}  // namespace

CollocationSystem assemble(const Domain& dom, FracOrder order, int N, const SolverOptions& opts) {
  if (dom.dim() != 1) {
    throw InvalidArgument("the solver works on one-dimensional domains");
  }
  if (N < 8) {
    throw InvalidArgument("need at least 8 cells");
  }
  const double s = order.value();
  const int n = N - 1;
  const double h = (dom.upper() - dom.lower()) / N;

  std::vector<double> row(n, 0.0);
  row[0] = 2.0 / (2.0 - 2.0 * s) + 1.0 / s;
  if (n > 1) {
    row[1] = -1.0 / (2.0 - 2.0 * s) - neighbour_moment(s);
  }
  for (int j = 2; j < n; ++j) {
    row[j] = -hat_moment(j, s);
  }
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      A(i, j) = row[std::abs(i - j)];
    }
  }

  // Node k, column p on the unit grid, mirrored onto the right boundary.
  auto add = [&](int k, int p, double v) {
    if (p >= 1 && p <= n) {
      A(k - 1, p - 1) += v;
      A(n - k, n - p) += v;
    }
  };

  const int L = std::clamp(opts.boundary_layer_cells, 0, N / 2);
  const int K = std::clamp(opts.near_fit_nodes, 0, N / 2);
  const GaussRule jacobi = gauss_jacobi(24, 0.0, s);
  for (int k = 1; k <= n; ++k) {
    for (int j = 0; j < L; ++j) {
      if (j == k - 1 || j == k) {
        continue;
      }
      const double a = j;
      const double b = j + 1;
      // Undo the hat contribution of this cell, then add the δ^s-weighted one.
      if (j >= 1) {
        add(k, j, linear_moment(k, a, b, a, s));
      }
      add(k, j + 1, linear_moment(k, a, b, b, s));
      if (j == 0) {
        add(k, 1, -first_cell_moment(k, s, jacobi));
      } else {
        add(k, j, -weighted_moment(k, a, b, a, s) / std::pow(a, s));
        add(k, j + 1, -weighted_moment(k, a, b, b, s) / std::pow(b, s));
      }
    }
  }
  for (int k = 1; k <= K; ++k) {
    std::vector<int> pts;
    for (int p : {k - 1, k, k + 1}) {
      if (p >= 1) {
        pts.push_back(p);
      }
    }
    const int m = static_cast<int>(pts.size());
    Eigen::MatrixXd V(m, m);
    Eigen::VectorXd nv(m);
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < m; ++i) {
        V(i, j) = std::pow(static_cast<double>(pts[i]), s + j);
      }
      nv(j) = near_moment(s + j, k, s);
    }
    const Eigen::VectorXd w = V.transpose().fullPivLu().solve(nv);
    add(k, k - 1, 1.0 / (2.0 - 2.0 * s));
    add(k, k, -2.0 / (2.0 - 2.0 * s));
    add(k, k + 1, 1.0 / (2.0 - 2.0 * s));
    for (int i = 0; i < m; ++i) {
      add(k, pts[i], w(i));
    }
  }

  CollocationSystem sys{dom, s, N, {}, {}, {}};
  sys.matrix = A * (c_constant(1, order) * std::pow(h, -2.0 * s));
  sys.nodes.resize(n);
  for (int i = 0; i < n; ++i) {
    sys.nodes[i] = dom.lower() + (i + 1) * h;
  }
  sys.rhs = Eigen::VectorXd::Zero(n);
  return sys;
}

NumericalSolution solve_dirichlet(const Domain& dom, FracOrder s, const FunctionHandle& g, int N,
                                  const SolverOptions& opts) {
  if (g.dim != 1) {
    throw InvalidArgument("right-hand side must be a function on the line");
  }
  CollocationSystem sys = assemble(dom, s, N, opts);
  const int n = static_cast<int>(sys.nodes.size());
  for (int i = 0; i < n; ++i) {
    sys.rhs(i) = g.at(sys.nodes[i]);
  }
  const double gnorm = sys.rhs.lpNorm<Eigen::Infinity>();
  Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
  double residual = 0.0;
  if (gnorm > 0.0) {
    u = sys.matrix.partialPivLu().solve(sys.rhs);
    residual = (sys.matrix * u - sys.rhs).lpNorm<Eigen::Infinity>();
    if (!u.allFinite() || !(residual <= 1e-10 * gnorm)) {
      throw SingularSystem("collocation solve did not reach the residual bound");
    }
  }
  std::vector<double> values(u.data(), u.data() + n);
  return {GridFunction(dom, sys.nodes, std::move(values)), s.value(), dom, residual, N};
}

ConvergenceStudy convergence_study(const Domain& dom, FracOrder s, const FunctionHandle& g,
                                   const std::vector<int>& N_list, const std::optional<FunctionHandle>& reference,
                                   double interior_delta, const SolverOptions& opts) {
  if (N_list.size() < 3) {
    throw InvalidArgument("a convergence study needs at least three grid sizes");
  }
  const int Nmax = *std::max_element(N_list.begin(), N_list.end());
  std::optional<NumericalSolution> fine;
  if (!reference) {
    if (2 * Nmax > 4096) {
      throw ReferenceUnavailable("no closed form and the reference grid would exceed 4096 cells");
    }
    fine = solve_dirichlet(dom, s, g, 2 * Nmax, opts);
  }
  ConvergenceStudy out;
  out.interior_delta = interior_delta;
  for (int N : N_list) {
    const NumericalSolution sol = solve_dirichlet(dom, s, g, N, opts);
    double err = 0.0;
    double ierr = 0.0;
    for (std::size_t i = 0; i < sol.u.size(); ++i) {
      const double x = sol.u.nodes()[i];
      double ref;
      if (reference) {
        ref = reference->at(x);
      } else {
        if ((2 * Nmax) % N != 0) {
          throw ReferenceUnavailable("grid sizes must divide the reference grid");
        }
        ref = fine->u.values()[(i + 1) * (2 * Nmax / N) - 1];
      }
      const double e = std::abs(sol.u.values()[i] - ref);
      err = std::max(err, e);
      if (sol.u.distance(i) >= interior_delta) {
        ierr = std::max(ierr, e);
      }
    }
    if (!out.max_error.empty() && err > out.max_error.back()) {
      out.monotone = false;
    }
    out.N.push_back(N);
    out.h.push_back((dom.upper() - dom.lower()) / N);
    out.max_error.push_back(err);
    out.interior_error.push_back(ierr);
  }
  out.global = fit_power_law(out.h, out.max_error);
  out.interior = fit_power_law(out.h, out.interior_error);
  return out;
}

}  // namespace fraclap

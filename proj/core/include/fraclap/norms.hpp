#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fraclap/function_handle.hpp"
#include "fraclap/grid_function.hpp"

namespace fraclap {

/// Order β = k + β' of a Hölder space, with k the greatest integer below β
/// and β' in (0,1], plus the weight exponent σ.
struct HolderSpec {
  double beta = 0.5;
  double sigma = 0.0;

  HolderSpec(double beta_, double sigma_ = 0.0);
  [[nodiscard]] int k() const;
  [[nodiscard]] double beta_prime() const { return beta - k(); }
};

struct HolderEstimate {
  double value = 0.0;
  std::pair<double, double> argmax_pair{0.0, 0.0};
  std::size_t pairs_scanned = 0;
  double min_separation = 0.0;
};

struct PairScanOptions {
  /// Smallest |x - y| admitted. Default: 4 grid spacings.
  std::optional<double> min_separation;
  /// Above this many nodes the scan runs on a stratified subsample.
  std::size_t max_nodes = 4000;
  std::size_t min_pairs = 10;
};

/// k-th derivative (k <= 2) at every node by second-order finite differences:
/// centred inside, one-sided at the two ends.
[[nodiscard]] std::vector<double> derivative(const GridFunction& f, int k);

/// sup |D^k f(x) - D^k f(y)| / |x - y|^{β'} over admissible node pairs.
/// Throws GridTooCoarse when fewer than `min_pairs` pairs qualify.
[[nodiscard]] HolderEstimate holder_seminorm(const GridFunction& f, double beta, const PairScanOptions& opts = {});

/// sup d_{x,y}^{β+σ} |D^k f(x) - D^k f(y)| / |x - y|^{β'} with
/// d_{x,y} = min(d_x, d_y) and d the distance to the boundary of f's domain.
[[nodiscard]] HolderEstimate weighted_seminorm(const GridFunction& f, const HolderSpec& spec,
                                               const PairScanOptions& opts = {});

/// Full weighted norm: for σ >= 0 the sum over l = 0..k of sup d^{l+σ}|D^l f|
/// plus the weighted seminorm; for -1 < σ < 0 the l = 0 term is replaced by
/// the C^{-σ} norm of f over the closed set.
[[nodiscard]] double weighted_norm(const GridFunction& f, const HolderSpec& spec, const PairScanOptions& opts = {});

/// min{ min_z (w(z) + L|z - x|^α), ||w||_∞ } with L the C^α seminorm of the
/// samples over every pair. Returns the sample itself at sample nodes. The
/// result is a function on the line.
[[nodiscard]] FunctionHandle extension_E(const GridFunction& w, double alpha);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// NaN when the data are degenerate.
  double r_squared = 0.0;
  std::size_t count = 0;
  /// All values equal: slope 0, R² undefined.
  bool degenerate = false;
};

/// Least-squares fit of log(value) against log(rho). Requires at least two
/// positive samples.
[[nodiscard]] RateFit fit_power_law(const std::vector<double>& rho, const std::vector<double>& value);

/// fit_power_law with the stricter precondition of at least 4 samples
/// spanning one decade in rho.
[[nodiscard]] RateFit rate_fit(const std::vector<double>& rho, const std::vector<double>& value);

}  // namespace fraclap

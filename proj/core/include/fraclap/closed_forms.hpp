#pragma once

#include "fraclap/function_handle.hpp"
#include "fraclap/quadrature.hpp"

namespace fraclap {

/// 2^{-2s} Γ(n/2) / (Γ((n+2s)/2) Γ(1+s)): the amplitude for which
/// coeff·(r² - |x - x0|²)^s_+ solves (-Δ)^s u = 1 in B_r(x0).
[[nodiscard]] double ball_coefficient(int n, FracOrder s);

/// coeff·(r² - |x - x0|²)^s inside B_r(x0), zero outside. In two dimensions
/// the ball is centred at the origin and x0 is ignored.
[[nodiscard]] FunctionHandle ball_solution(int n, FracOrder s, double r = 1.0, double x0 = 0.0);

/// (x_+)^s on the line.
[[nodiscard]] FunctionHandle halfspace_profile(FracOrder s);

/// u*(x) = |x|^{2s-n} u(x / |x|²). The evaluator throws EvaluationAtOrigin at 0.
[[nodiscard]] FunctionHandle kelvin_transform(const FunctionHandle& u, int n, FracOrder s);

/// Radial quintic smoothstep: 0 for |x| <= 4, 1 for |x| >= 5, C² in between.
[[nodiscard]] FunctionHandle smooth_cutoff(int n);

/// Indicator of the closed ball of radius r about the origin.
[[nodiscard]] FunctionHandle ball_indicator(int n, double r);

struct Barrier {
  enum class Kind { SupersolutionPhi1, SubsolutionPsi };

  Kind kind = Kind::SupersolutionPhi1;
  int n = 1;
  double s = 0.5;
  /// Calibrated amplitude: A in front of the Kelvin profile, or C in front of the indicator.
  double amplitude = 0.0;
  /// Supersolution: upper envelope φ₁ <= C1 (|x|-1)^s on (1,4] and φ₁ <= C1 outside B₄.
  /// Subsolution: unused (zero).
  double C1 = 0.0;
  /// Supersolution: max of -(-Δ)^s ξ on the calibration grid.
  /// Subsolution: fitted c in ψ >= c (1-|x|)^s on B₁.
  double C2 = 0.0;
  /// min (supersolution) or max (subsolution) of (-Δ)^s over the verification grid.
  double verified_extreme = 0.0;
  /// Smallest value of φ₁ sampled outside B₄ (supersolution only).
  double min_outside = 0.0;
  int verification_points = 0;
  FunctionHandle function;
};

/// φ₁ = A·|x|^{2s-n}·coeff·(1 - |x|^{-2})^s_+ + ξ with A calibrated so that
/// (-Δ)^s φ₁ >= 1 on 200 points of B₄∖B₁, then checked on a shifted grid.
/// Throws CalibrationFailed if A would exceed 10·4^{2s+n}.
[[nodiscard]] Barrier supersolution_phi1(int n, FracOrder s, const QuadratureSpec& q = {});

/// ψ = (1 - |x|²)^s_+ + C·χ_{|x| <= 1/4} with C calibrated so that
/// (-Δ)^s ψ <= 0 on 200 points with 0.3 <= |x| <= 0.95.
[[nodiscard]] Barrier subsolution_psi(int n, FracOrder s, const QuadratureSpec& q = {});

}  // namespace fraclap

#pragma once

#include "fraclap/function_handle.hpp"
#include "fraclap/geometry.hpp"
#include "fraclap/quadrature.hpp"

namespace fraclap {

/// c_{n,t} = 4^t Γ(n/2 + t) / (π^{n/2} |Γ(-t)|), the constant for which the
/// singular integral has Fourier symbol |ξ|^{2t}.
[[nodiscard]] double c_constant(int n, FracOrder t);

/// (-Δ)^t f(x) by principal-value quadrature. In two dimensions f must be
/// radial and the result depends on |x| only.
///
/// Throws NonIntegrableTail when f grows like |x|^{2t} or faster and
/// NonSmoothEvaluationPoint when a declared singularity of a CAlphaOnly
/// function falls inside the near field.
[[nodiscard]] double frac_laplacian(const FunctionHandle& f, int n, FracOrder t, Point x,
                                    const QuadratureSpec& q = {});

/// I_t(w1, w2)(x) = c_{n,t} ∫ (w1(x) - w1(y)) (w2(x) - w2(y)) |x - y|^{-n-2t} dy.
[[nodiscard]] double bilinear_I(const FunctionHandle& w1, const FunctionHandle& w2, int n, FracOrder t, Point x,
                                const QuadratureSpec& q = {});

/// |L(w1 w2) - w1 L w2 - w2 L w1 + I(w1, w2)| at x, with L = (-Δ)^t and every
/// term computed on the same quadrature spec.
[[nodiscard]] double product_rule_residual(const FunctionHandle& w1, const FunctionHandle& w2, int n, FracOrder t,
                                           Point x, const QuadratureSpec& q = {});

}  // namespace fraclap

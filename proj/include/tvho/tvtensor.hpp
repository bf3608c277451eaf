#pragma once

#include "tvho/bcdiff.hpp"
#include "tvho/tensor.hpp"

namespace tvho {

/// Directional derivatives of a volume along its three axes.
struct GradientField {
  VideoTensor gx, gy, gt;

  GradientField() = default;
  GradientField(int m, int n, int frames)
      : gx(m, n, frames), gy(m, n, frames), gt(m, n, frames) {}
};

enum class TvNorm { Anisotropic, Isotropic };

/// Kronecker-factored 3D gradient: D_m along rows, D_n along columns,
/// D_N along frames, applied as mode-wise products.
GradientField gradient(const VideoTensor& f, const DerivativeOperator& dm,
                       const DerivativeOperator& dn, const DerivativeOperator& dN);

/// Adjoint of gradient: Dm^T-mode1(gx) + Dn^T-mode2(gy) + DN^T-mode3(gt).
VideoTensor gradient_adjoint(const GradientField& g, const DerivativeOperator& dm,
                             const DerivativeOperator& dn, const DerivativeOperator& dN);

/// Anisotropic: sum |gx|+|gy|+|gt|; isotropic: sum sqrt(gx^2+gy^2+gt^2).
double tv_norm(const GradientField& g, TvNorm norm);

/// Elementwise sgn(s) * max(|s| - tau, 0).
Eigen::VectorXd soft_threshold(const Eigen::VectorXd& s, double tau);

/// Per-site Euclidean shrinkage of the (gx, gy, gt) 3-vector by tau.
GradientField vector_soft_threshold(const GradientField& g, double tau);

/// Componentwise soft threshold of a gradient field (anisotropic TV prox).
GradientField soft_threshold(const GradientField& g, double tau);

}  // namespace tvho

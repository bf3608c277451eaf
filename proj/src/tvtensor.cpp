#include "tvho/tvtensor.hpp"

#include <cmath>
#include <stdexcept>

#include "tvho/kernels.hpp"

namespace tvho {

namespace {
void check_axes(const VideoTensor& f, const DerivativeOperator& dm,
                const DerivativeOperator& dn, const DerivativeOperator& dN) {
  if (dm.n != f.m || dn.n != f.n || dN.n != f.frames)
    throw std::invalid_argument("gradient: operator sizes do not match volume shape");
}
}  // namespace

GradientField gradient(const VideoTensor& f, const DerivativeOperator& dm,
                       const DerivativeOperator& dn, const DerivativeOperator& dN) {
  check_axes(f, dm, dn, dN);
  GradientField g;
  g.gx = mode1_product(f, dm.mat);
  g.gy = mode2_product(f, dn.mat);
  g.gt = mode3_product(f, dN.mat);
  return g;
}

VideoTensor gradient_adjoint(const GradientField& g, const DerivativeOperator& dm,
                             const DerivativeOperator& dn, const DerivativeOperator& dN) {
  check_axes(g.gx, dm, dn, dN);
  VideoTensor out = mode1_product(g.gx, dm.mat.transpose());
  out.data += mode2_product(g.gy, dn.mat.transpose()).data;
  out.data += mode3_product(g.gt, dN.mat.transpose()).data;
  return out;
}

double tv_norm(const GradientField& g, TvNorm norm) {
  const std::size_t n = g.gx.size();
  const double* a = g.gx.data.data();
  const double* b = g.gy.data.data();
  const double* c = g.gt.data.data();
  double acc = 0.0;
  if (norm == TvNorm::Anisotropic) {
    for (std::size_t i = 0; i < n; ++i)
      acc += std::fabs(a[i]) + std::fabs(b[i]) + std::fabs(c[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      acc += std::sqrt(a[i] * a[i] + b[i] * b[i] + c[i] * c[i]);
  }
  return acc;
}

Eigen::VectorXd soft_threshold(const Eigen::VectorXd& s, double tau) {
  if (tau < 0.0) throw std::invalid_argument("soft_threshold: tau must be nonnegative");
  Eigen::VectorXd out(s.size());
  kern::soft_threshold(s.data(), out.data(), static_cast<std::size_t>(s.size()), tau);
  return out;
}

GradientField soft_threshold(const GradientField& g, double tau) {
  if (tau < 0.0) throw std::invalid_argument("soft_threshold: tau must be nonnegative");
  GradientField out(g.gx.m, g.gx.n, g.gx.frames);
  const std::size_t n = g.gx.size();
  kern::soft_threshold(g.gx.data.data(), out.gx.data.data(), n, tau);
  kern::soft_threshold(g.gy.data.data(), out.gy.data.data(), n, tau);
  kern::soft_threshold(g.gt.data.data(), out.gt.data.data(), n, tau);
  return out;
}

GradientField vector_soft_threshold(const GradientField& g, double tau) {
  if (tau < 0.0) throw std::invalid_argument("vector_soft_threshold: tau must be nonnegative");
  GradientField out(g.gx.m, g.gx.n, g.gx.frames);
  kern::vector_soft_threshold(g.gx.data.data(), g.gy.data.data(), g.gt.data.data(),
                              out.gx.data.data(), out.gy.data.data(), out.gt.data.data(),
                              g.gx.size(), tau);
  return out;
}

}  // namespace tvho

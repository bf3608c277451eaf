#pragma once

#include <optional>
#include <vector>

#include "tvho/spectral.hpp"
#include "tvho/transforms.hpp"
#include "tvho/tvtensor.hpp"

namespace tvho {

/// Full parameterization of one reconstruction run.
struct SolverConfig {
  double c1 = 80.0, c2 = 10.0, c3 = 1000.0;   // regularization weights
  double mu1 = 4.0, mu2 = 4.0, mu3 = 40.0;    // augmented Lagrangian penalties
  double rho = 1.618033988749894848;          // dual step, in (0, (sqrt5+1)/2]
  double eps = 1e-4;                          // relative-change tolerance
  int max_iter = 500;
  TvNorm tv = TvNorm::Anisotropic;
  BoundaryCondition bc_x{BcKind::AntiReflective, 1};
  BoundaryCondition bc_y{BcKind::AntiReflective, 1};
  BoundaryCondition bc_t{BcKind::AntiReflective, 1};
  int kernel_length = 27;
  int kernel_accuracy = 25;
  double dt_x = 1.0, dt_y = 1.0, dt_t = 1.0;
  WaveletFamily wavelet = WaveletFamily::Symmlet10;
  int wavelet_levels = 4;

  void validate() const;
};

/// Prebuilt operators shared by every iteration of a run.
struct SolverOperators {
  DerivativeOperator dm, dn, dN;
  WaveletOperator psi;
  MeasurementOperator phi;
  SamplingPlan plan;
  SpectralFactorization spectral;
  Eigen::VectorXd mask;  // diag(P^T P)
  Eigen::VectorXd ptb;   // P^T b

  static SolverOperators build(int m, int n, int frames, const SolverConfig& cfg,
                               const MeasurementOperator& phi, const SamplingPlan& plan,
                               const Eigen::VectorXd& b);
};

struct SolverState {
  VideoTensor f;
  GradientField y1;
  VideoTensor y2;          // wavelet domain
  Eigen::VectorXd y3;      // full measurement domain (mnN)
  GradientField u1;
  VideoTensor u2;
  Eigen::VectorXd u3;
  int k = 0;
  std::vector<double> rel_change;

  static SolverState zero(int m, int n, int frames);
};

struct ConvergenceReport {
  int iterations = 0;
  std::vector<double> rel_change;
  double wall_time_s = 0.0;
  double final_objective = 0.0;
  bool converged = false;
};

/// One BC-ADMM iteration: f-solve from zeta = y - u, three prox updates,
/// scaled dual ascent with step rho. Throws on non-finite values.
void step(SolverState& state, const SolverConfig& cfg, const SolverOperators& ops,
          const Eigen::VectorXd& b);

/// Iterates step() until the relative f-change drops below cfg.eps or
/// max_iter is reached.
std::pair<VideoTensor, ConvergenceReport> solve(
    const std::optional<VideoTensor>& warm_start, const Eigen::VectorXd& b,
    const SolverConfig& cfg, const SolverOperators& ops);

/// Eq-style objective: c1*TV(F) + c2*||Psi f||_1 + c3*||Phi_Omega f - b||_2^2.
double objective(const VideoTensor& f, const Eigen::VectorXd& b,
                 const SolverConfig& cfg, const SolverOperators& ops);

}  // namespace tvho

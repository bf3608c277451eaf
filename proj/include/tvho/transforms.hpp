#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "tvho/tensor.hpp"

namespace tvho {

enum class MeasurementKind { GaussianOrthonormal, WalshHadamard };

MeasurementKind measurement_from_name(const std::string& name);
const char* measurement_name(MeasurementKind kind);

/// Per-frame measurement operator b = (I_N (x) Phi_n (x) Phi_m) vec(F),
/// with orthonormal Phi factors.
struct MeasurementOperator {
  MeasurementKind kind = MeasurementKind::GaussianOrthonormal;
  std::uint64_t seed = 0;
  Eigen::MatrixXd phi_m, phi_n;

  VideoTensor measure(const VideoTensor& f) const;
  VideoTensor measure_adjoint(const VideoTensor& b) const;
};

MeasurementOperator make_measurement(MeasurementKind kind, int m, int n,
                                     std::uint64_t seed);

/// Sorted, unique sample indices into the mnN-length measurement vector.
struct SamplingPlan {
  std::vector<std::size_t> omega;
  std::uint64_t seed = 0;
  double rate = 1.0;
  bool per_frame = true;
  std::size_t total = 0;  // mnN

  Eigen::VectorXd select(const Eigen::VectorXd& y) const;
  Eigen::VectorXd select_adjoint(const Eigen::VectorXd& b) const;
  /// Diagonal of P^T P as a 0/1 vector of length total.
  Eigen::VectorXd mask() const;
};

SamplingPlan make_sampling_plan(int m, int n, int frames, double rate,
                                std::uint64_t seed, bool per_frame);

enum class WaveletFamily { Haar, Symmlet10 };

WaveletFamily wavelet_from_name(const std::string& name);
const char* wavelet_name(WaveletFamily family);

/// Scaling (lowpass) filter coefficients; sum = sqrt(2).
std::vector<double> wavelet_scaling_filter(WaveletFamily family);

/// Separable orthonormal 2D DWT applied per frame with periodic extension.
/// The per-axis transforms are materialized as orthogonal matrices (the
/// composition of the per-level periodized analysis steps).
struct WaveletOperator {
  WaveletFamily family = WaveletFamily::Symmlet10;
  int levels = 1;
  int m = 0, n = 0;
  Eigen::MatrixXd wm, wn;  // orthogonal analysis matrices

  VideoTensor analysis(const VideoTensor& f) const;
  VideoTensor synthesis(const VideoTensor& c) const;
};

WaveletOperator make_wavelet(WaveletFamily family, int m, int n, int levels);

/// Largest feasible decomposition level <= requested for an (m, n) frame:
/// both dimensions must stay even through every level.
int max_wavelet_levels(int m, int n, int requested);

}  // namespace tvho

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tvho/solver.hpp"

namespace tvho {

/// Piecewise test signal: constant / quadratic / linear segments separated
/// by jump discontinuities at the breakpoints.
struct SyntheticSignalSpec {
  double a = 1.0, b = 2.5, c = 3.6, d = 8.0, e = 9.0, f = 11.0, g = 12.0;
  // segment levels; named to avoid collision with the regularization weights
  double level_lo = 0.05;   // alpha_s
  double level_hi = 0.5;    // beta_s
  double level_mid = 0.09;  // mu_s, quadratic vertex value
};

double synth_signal(const SyntheticSignalSpec& spec, double x);

/// Npts uniform samples x_i = x0 + i * (x1 - x0) / Npts.
std::vector<double> sample_signal(const SyntheticSignalSpec& spec, int npts,
                                  double x0, double x1);

/// Exact total variation: closed-form smooth-piece contributions plus jump
/// magnitudes at the breakpoints.
double tv_ground_truth(const SyntheticSignalSpec& spec);

/// Discrete TV estimate of 1D samples: T * sum |D f| with a derivative
/// matrix built from (length, accuracy) under bc, spacing dt.
double tv_estimate_1d(const std::vector<double>& samples, int length, int accuracy,
                      const BoundaryCondition& bc, double dt);

double psnr_db(const VideoTensor& ref, const VideoTensor& est, double peak);
double nmse(const VideoTensor& ref, const VideoTensor& est);
/// Peak convention: 255 for 8-bit sources, max|ref| for float phantoms.
double dynamic_peak(const VideoTensor& ref);

/// Piecewise-constant phantom: two nested bright boxes translating one pixel
/// per frame (wrapping around), background zero.
VideoTensor translating_boxes_phantom(int m, int n, int frames);

struct ExperimentSpec {
  VideoTensor volume;
  std::vector<double> rates;
  std::vector<std::uint64_t> seeds;
  MeasurementKind transform = MeasurementKind::GaussianOrthonormal;
  SolverConfig config;
  bool per_frame_rows = false;  // emit one row per frame index as well
};

struct MetricsRow {
  double rate = 0.0;
  std::uint64_t seed = 0;
  int frame_index = -1;  // -1 denotes the mean row
  double psnr_db = 0.0;
  double nmse = 0.0;
  int iterations = 0;
  double wall_time_s = 0.0;
  bool diverged = false;
};

/// Full sweep: for each (rate, seed) build plan, measure, reconstruct and
/// collect metrics. Cells run in parallel when TVHO_THREADS > 1.
std::vector<MetricsRow> run_sweep(const ExperimentSpec& spec);

std::string metrics_csv(const std::vector<MetricsRow>& rows);

struct NoiseSensitivityRow {
  double snr_db = 0.0;      // infinity = clean
  std::uint64_t seed = 0;
  int kernel_length = 0;
  int kernel_accuracy = 0;
  double tv_estimate = 0.0;
  double tv_truth = 0.0;
};

/// Adds seeded white Gaussian noise to the sampled synthetic signal at each
/// SNR and reports the TV estimate per kernel against ground truth.
std::vector<NoiseSensitivityRow> noise_sensitivity(
    const SyntheticSignalSpec& spec, int npts, double x0, double x1,
    const std::vector<double>& snr_db_list, const std::vector<std::uint64_t>& seeds,
    const std::vector<std::pair<int, int>>& kernels, const BoundaryCondition& bc);

/// Worker count from TVHO_THREADS (0 or unset = sequential).
int worker_count();

}  // namespace tvho

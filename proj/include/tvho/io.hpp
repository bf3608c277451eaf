#pragma once

#include <cstdint>
#include <string>

#include "tvho/solver.hpp"

namespace tvho {

enum class VolumeDtype : std::uint8_t { Float64 = 0, Uint8 = 1 };

/// Single-file volume container:
///   8-byte magic "TVHOVOL1", m/n/N as 32-bit little-endian unsigned,
///   one dtype byte (0 = float64 LE, 1 = uint8), then the payload in
///   mode-1 vectorization order. Header is exactly 21 bytes.
VideoTensor read_volume(const std::string& path);
void write_volume(const std::string& path, const VideoTensor& f, VolumeDtype dtype);

/// Quantization used for the uint8 dtype: round half away from zero,
/// clamp to [0, 255].
std::uint8_t quantize_u8(double v);

/// Assemble a volume from binary (P5) PGM frames in a directory, sorted
/// lexicographically. Only maxval 255 is accepted.
VideoTensor import_frames(const std::string& dir);

/// Flat key/value solver configuration file. Recognized keys: c1 c2 c3
/// mu1 mu2 mu3 rho eps max_iter tv bc_x bc_y bc_t kernel_length
/// kernel_accuracy dt_x dt_y dt_t wavelet wavelet_levels.
/// Unknown keys and malformed values are errors. Missing keys keep their
/// defaults. '#' starts a comment; blank lines are ignored.
SolverConfig parse_config_text(const std::string& text);
SolverConfig read_config(const std::string& path);
std::string config_text(const SolverConfig& cfg);

/// Sampling-plan sidecar (JSON): m, n, N, rate, seed, transform. The index
/// set is regenerated from the seed on load.
struct PlanSidecar {
  int m = 0, n = 0, frames = 0;
  double rate = 0.0;
  std::uint64_t seed = 0;
  MeasurementKind transform = MeasurementKind::GaussianOrthonormal;
};
void write_plan_sidecar(const std::string& path, const PlanSidecar& p);
PlanSidecar read_plan_sidecar(const std::string& path);

/// Run metadata written next to every artifact: the invoked command line,
/// configuration, seeds, library version, and wall time.
void write_run_metadata(const std::string& path, const std::string& command,
                        const std::string& args_json, double wall_time_s);

std::string tvho_version();

}  // namespace tvho

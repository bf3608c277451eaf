#include "tvho/transforms.hpp"

#include <cmath>
#include <stdexcept>

#include "tvho/rng.hpp"

namespace tvho {

MeasurementKind measurement_from_name(const std::string& name) {
  if (name == "gauss") return MeasurementKind::GaussianOrthonormal;
  if (name == "hadamard") return MeasurementKind::WalshHadamard;
  throw std::invalid_argument("unknown measurement transform: " + name);
}

const char* measurement_name(MeasurementKind kind) {
  return kind == MeasurementKind::GaussianOrthonormal ? "gauss" : "hadamard";
}

namespace {

bool is_power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

Eigen::MatrixXd walsh_hadamard(int dim) {
  if (!is_power_of_two(dim))
    throw std::invalid_argument("Walsh-Hadamard requires a power-of-two dimension, got " +
                                std::to_string(dim));
  Eigen::MatrixXd h(1, 1);
  h(0, 0) = 1.0;
  while (h.rows() < dim) {
    const Eigen::Index k = h.rows();
    Eigen::MatrixXd next(2 * k, 2 * k);
    next.topLeftCorner(k, k) = h;
    next.topRightCorner(k, k) = h;
    next.bottomLeftCorner(k, k) = h;
    next.bottomRightCorner(k, k) = -h;
    h = std::move(next);
  }
  return h / std::sqrt(static_cast<double>(dim));
}

// Row-wise modified Gram-Schmidt; deterministic given the filled matrix.
Eigen::MatrixXd orthonormalize_rows(Eigen::MatrixXd a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < i; ++j)
      a.row(i) -= a.row(i).dot(a.row(j)) * a.row(j);
    const double norm = a.row(i).norm();
    if (norm < 1e-12)
      throw std::runtime_error("make_measurement: degenerate Gaussian draw");
    a.row(i) /= norm;
  }
  return a;
}

Eigen::MatrixXd gaussian_orthonormal(int dim, Rng& rng) {
  Eigen::MatrixXd a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = rng.gaussian();
  return orthonormalize_rows(std::move(a));
}

}  // namespace

MeasurementOperator make_measurement(MeasurementKind kind, int m, int n,
                                     std::uint64_t seed) {
  if (m <= 0 || n <= 0)
    throw std::invalid_argument("make_measurement: dimensions must be positive");
  MeasurementOperator op;
  op.kind = kind;
  op.seed = seed;
  if (kind == MeasurementKind::WalshHadamard) {
    op.phi_m = walsh_hadamard(m);
    op.phi_n = walsh_hadamard(n);
  } else {
    Rng rng(seed);
    op.phi_m = gaussian_orthonormal(m, rng);
    op.phi_n = gaussian_orthonormal(n, rng);
  }
  return op;
}

VideoTensor MeasurementOperator::measure(const VideoTensor& f) const {
  if (f.m != phi_m.rows() || f.n != phi_n.rows())
    throw std::invalid_argument("measure: volume shape does not match operator");
  return mode2_product(mode1_product(f, phi_m), phi_n);
}

VideoTensor MeasurementOperator::measure_adjoint(const VideoTensor& b) const {
  if (b.m != phi_m.rows() || b.n != phi_n.rows())
    throw std::invalid_argument("measure_adjoint: shape mismatch");
  return mode2_product(mode1_product(b, phi_m.transpose()), phi_n.transpose());
}

SamplingPlan make_sampling_plan(int m, int n, int frames, double rate,
                                std::uint64_t seed, bool per_frame) {
  if (!(rate > 0.0 && rate <= 1.0))
    throw std::invalid_argument("make_sampling_plan: rate must be in (0, 1]");
  const std::size_t frame_size = static_cast<std::size_t>(m) * n;
  SamplingPlan plan;
  plan.seed = seed;
  plan.rate = rate;
  plan.per_frame = per_frame;
  plan.total = frame_size * frames;
  Rng rng(seed);
  if (per_frame) {
    const std::size_t k = static_cast<std::size_t>(std::llround(rate * frame_size));
    for (int t = 0; t < frames; ++t) {
      auto idx = rng.sample_without_replacement(frame_size, k);
      for (std::size_t v : idx) plan.omega.push_back(v + frame_size * t);
    }
  } else {
    const std::size_t k = static_cast<std::size_t>(std::llround(rate * plan.total));
    plan.omega = rng.sample_without_replacement(plan.total, k);
  }
  return plan;
}

Eigen::VectorXd SamplingPlan::select(const Eigen::VectorXd& y) const {
  if (static_cast<std::size_t>(y.size()) != total)
    throw std::invalid_argument("select: length mismatch");
  Eigen::VectorXd out(static_cast<Eigen::Index>(omega.size()));
  for (std::size_t i = 0; i < omega.size(); ++i)
    out[static_cast<Eigen::Index>(i)] = y[static_cast<Eigen::Index>(omega[i])];
  return out;
}

Eigen::VectorXd SamplingPlan::select_adjoint(const Eigen::VectorXd& b) const {
  if (static_cast<std::size_t>(b.size()) != omega.size())
    throw std::invalid_argument("select_adjoint: length mismatch");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(total));
  for (std::size_t i = 0; i < omega.size(); ++i)
    out[static_cast<Eigen::Index>(omega[i])] = b[static_cast<Eigen::Index>(i)];
  return out;
}

Eigen::VectorXd SamplingPlan::mask() const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(total));
  for (std::size_t idx : omega) out[static_cast<Eigen::Index>(idx)] = 1.0;
  return out;
}

WaveletFamily wavelet_from_name(const std::string& name) {
  if (name == "haar") return WaveletFamily::Haar;
  if (name == "symmlet10") return WaveletFamily::Symmlet10;
  throw std::invalid_argument("unknown wavelet family: " + name);
}

const char* wavelet_name(WaveletFamily family) {
  return family == WaveletFamily::Haar ? "haar" : "symmlet10";
}

std::vector<double> wavelet_scaling_filter(WaveletFamily family) {
  if (family == WaveletFamily::Haar)
    return {0.70710678118654752440, 0.70710678118654752440};
  // Symlet-10 scaling filter (20 taps, least-asymmetric orthonormal family).
  return {
      0.000770159809114459823,   0.0000956326707228527308,
      -0.00864129927702215026,   -0.00146538258130461051,
      0.0459272392310915086,     0.0116098939037113181,
      -0.159494278884910609,     -0.0708805357832315723,
      0.47169066693844291,       0.769510037021097937,
      0.383826761067076326,      -0.0355367404738195858,
      -0.0319900568824281139,    0.0499949720773751563,
      0.00576491203358114967,    -0.0203549398123111107,
      -0.000804358932016451296,  0.00459317358531179195,
      0.0000570360836184950068,  -0.00045932942100465204,
  };
}

namespace {

// One periodized analysis level of size sz (even) as an orthogonal matrix:
// first sz/2 rows are lowpass, last sz/2 highpass.
Eigen::MatrixXd level_matrix(int sz, const std::vector<double>& h) {
  const int taps = static_cast<int>(h.size());
  std::vector<double> g(taps);
  for (int i = 0; i < taps; ++i)
    g[i] = (i % 2 == 0 ? 1.0 : -1.0) * h[taps - 1 - i];
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(sz, sz);
  for (int k = 0; k < sz / 2; ++k) {
    for (int i = 0; i < taps; ++i) {
      const int col = (2 * k + i) % sz;
      w(k, col) += h[i];
      w(sz / 2 + k, col) += g[i];
    }
  }
  return w;
}

Eigen::MatrixXd dwt_matrix(int dim, int levels, const std::vector<double>& h) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Identity(dim, dim);
  int sz = dim;
  for (int lvl = 0; lvl < levels; ++lvl) {
    if (sz % 2 != 0)
      throw std::invalid_argument("make_wavelet: dimension not divisible by 2^levels");
    Eigen::MatrixXd step = Eigen::MatrixXd::Identity(dim, dim);
    step.topLeftCorner(sz, sz) = level_matrix(sz, h);
    w = step * w;
    sz /= 2;
  }
  return w;
}

}  // namespace

WaveletOperator make_wavelet(WaveletFamily family, int m, int n, int levels) {
  if (levels < 0) throw std::invalid_argument("make_wavelet: levels must be >= 0");
  const auto h = wavelet_scaling_filter(family);
  WaveletOperator op;
  op.family = family;
  op.levels = levels;
  op.m = m;
  op.n = n;
  op.wm = dwt_matrix(m, levels, h);
  op.wn = dwt_matrix(n, levels, h);
  return op;
}

int max_wavelet_levels(int m, int n, int requested) {
  int lvl = 0;
  int a = m, b = n;
  while (lvl < requested && a % 2 == 0 && b % 2 == 0 && a >= 2 && b >= 2) {
    a /= 2;
    b /= 2;
    ++lvl;
  }
  return lvl;
}

VideoTensor WaveletOperator::analysis(const VideoTensor& f) const {
  if (f.m != m || f.n != n)
    throw std::invalid_argument("wavelet analysis: shape mismatch");
  return mode2_product(mode1_product(f, wm), wn);
}

VideoTensor WaveletOperator::synthesis(const VideoTensor& c) const {
  if (c.m != m || c.n != n)
    throw std::invalid_argument("wavelet synthesis: shape mismatch");
  return mode2_product(mode1_product(c, wm.transpose()), wn.transpose());
}

}  // namespace tvho

// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Each check is self-contained and uses independent oracles
// (hand-solved kernels, extended-signal convolutions, SVD ranks, dense
// solves) rather than the library's own intermediate results.
#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>
#include <unsupported/Eigen/KroneckerProduct>

#include "tvho/experiments.hpp"
#include "tvho/io.hpp"
#include "tvho/rng.hpp"

using namespace tvho;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

void report(int idx, const std::string& what, bool ok, const std::string& detail = "") {
  std::printf("%s: criterion %2d — %s%s%s\n", ok ? "PASS" : "FAIL", idx, what.c_str(),
              detail.empty() ? "" : " | ", detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// ---- shared oracles --------------------------------------------------------

// Extend a signal beyond [0, n) by the boundary rule, independently of the
// DerivativeOperator construction.
double extended_sample(const Eigen::VectorXd& f, int idx, BcKind kind, int shift) {
  const int n = static_cast<int>(f.size());
  if (idx >= 0 && idx < n) return f[idx];
  switch (kind) {
    case BcKind::Zero:
      return 0.0;
    case BcKind::Periodic:
      return f[((idx % n) + n) % n];
    case BcKind::Reflective:
      if (idx < 0) {
        const int t = -idx;  // f_{-t} = f_{shift + t - 1}
        return extended_sample(f, shift + t - 1, kind, shift);
      } else {
        const int t = idx - (n - 1);  // f_{n-1+t} = f_{n - shift - t}
        return extended_sample(f, n - shift - t, kind, shift);
      }
    case BcKind::AntiReflective:
      if (idx < 0) {
        const int t = -idx;
        return 2.0 * f[0] - extended_sample(f, shift + t - 1, kind, shift);
      } else {
        const int t = idx - (n - 1);
        return 2.0 * f[n - 1] - extended_sample(f, n - shift - t, kind, shift);
      }
  }
  return 0.0;
}

Eigen::VectorXd convolution_oracle(const Eigen::VectorXd& f, const KernelSpec& k,
                                   BcKind kind, int shift) {
  const int n = static_cast<int>(f.size());
  const int A = k.half_width();
  Eigen::VectorXd out(n);
  for (int j = 0; j < n; ++j) {
    double acc = 0.0;
    for (int l = 1; l <= A; ++l)
      acc += k.half[static_cast<std::size_t>(l - 1)] *
             (extended_sample(f, j + l, kind, shift) -
              extended_sample(f, j - l, kind, shift));
    out[j] = acc / k.dt;
  }
  return out;
}

int numerical_rank(const Eigen::MatrixXd& a) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0;
  const double thresh = std::max(a.rows(), a.cols()) *
                        std::numeric_limits<double>::epsilon() * s[0];
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > thresh) ++r;
  return r;
}

Eigen::MatrixXd kron3(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                      const Eigen::MatrixXd& c) {
  return Eigen::kroneckerProduct(a, Eigen::kroneckerProduct(b, c).eval()).eval();
}

VideoTensor random_tensor(Rng& rng, int m, int n, int N) {
  VideoTensor f(m, n, N);
  for (Eigen::Index i = 0; i < f.data.size(); ++i) f.data[i] = rng.gaussian();
  return f;
}

SolverConfig recovery_config() {
  SolverConfig cfg;
  cfg.c1 = 0.05;
  cfg.c2 = 0.05;
  cfg.c3 = 100.0;
  cfg.mu1 = 1.0;
  cfg.mu2 = 1.0;
  cfg.mu3 = 10.0;
  cfg.kernel_length = 5;
  cfg.kernel_accuracy = 4;
  cfg.wavelet = WaveletFamily::Haar;
  cfg.wavelet_levels = 2;
  cfg.eps = 1e-4;
  cfg.max_iter = 500;
  return cfg;
}

double frame_psnr(const VideoTensor& ref, const VideoTensor& est, int t, double peak) {
  VideoTensor rf(ref.m, ref.n, 1), ef(ref.m, ref.n, 1);
  rf.frame(0) = ref.frame(t);
  ef.frame(0) = est.frame(t);
  return psnr_db(rf, ef, peak);
}

std::string strip_timing(const std::string& csv) {
  std::string out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    const std::size_t end = csv.find('\n', pos);
    const std::string line = csv.substr(pos, end - pos);
    out += line.substr(0, line.rfind(',')) + "\n";
    pos = end + 1;
  }
  return out;
}

// ---- criteria --------------------------------------------------------------

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  const auto k32 = design_nr_kernel(3, 2);
  ok &= k32.half.size() == 1 && std::fabs(k32.half[0] - 0.5) < 1e-10;
  const auto k52 = design_nr_kernel(5, 2);
  ok &= k52.half.size() == 2 && std::fabs(k52.half[0] - 0.25) < 1e-10 &&
        std::fabs(k52.half[1] - 0.125) < 1e-10;
  const auto k54 = design_nr_kernel(5, 4);
  ok &= k54.half.size() == 2 && std::fabs(k54.half[0] - 2.0 / 3.0) < 1e-10 &&
        std::fabs(k54.half[1] + 1.0 / 12.0) < 1e-10;
  const double el = seconds_since(t0);
  ok &= el < 1.0;
  report(1, "kernel designs match hand-solved rationals", ok, fmt(el) + " s");
}

void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto k = design_nr_kernel(27, 25);
  double worst = 0.0;
  for (double w = 0.0; w <= 0.3; w += 0.001)
    worst = std::max(worst, std::fabs(frequency_response(k, w) - w));
  const double at_pi = std::fabs(frequency_response(k, kPi));
  const double el = seconds_since(t0);
  const bool ok = worst <= 1e-6 && at_pi <= 1e-10 && el < 1.0;
  report(2, "L=27/p=25 frequency contract",
         ok, "max low-freq err " + fmt(worst) + ", |H(pi)| " + fmt(at_pi));
}

void criterion_3() {
  bool ok = true;
  Rng rng(2024);
  for (int L : {3, 5}) {
    const auto k = design_nr_kernel(L, 2);
    for (BcKind kind : {BcKind::Zero, BcKind::Periodic, BcKind::Reflective,
                        BcKind::AntiReflective}) {
      const auto d = build_derivative_matrix(16, k, {kind, 1});
      for (int trial = 0; trial < 100; ++trial) {
        Eigen::VectorXd f(16);
        for (int i = 0; i < 16; ++i) f[i] = rng.gaussian();
        const double err =
            (d.apply(f) - convolution_oracle(f, k, kind, 1)).lpNorm<Eigen::Infinity>();
        ok &= err <= 1e-12;
      }
    }
  }
  // AR-BC differentiates affine ramps exactly
  for (int L : {3, 5, 7}) {
    const auto k = design_nr_kernel(L, 2, 0.25);
    const auto d = build_derivative_matrix(16, k, {BcKind::AntiReflective, 1});
    Eigen::VectorXd ramp(16);
    for (int i = 0; i < 16; ++i) ramp[i] = 1.5 + 0.75 * i;
    const Eigen::VectorXd got = d.apply(ramp);
    for (int i = 0; i < 16; ++i) ok &= std::fabs(got[i] - 0.75 / 0.25) < 1e-10;
  }
  report(3, "BC matrices match extended-signal convolution oracles", ok);
}

void criterion_4() {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = 32;
  const auto k = design_nr_kernel(27, 25, 2.6 / n);
  Eigen::VectorXd f(n), truth(n);
  for (int i = 0; i < n; ++i) {
    const double x = -0.8 + 2.6 * i / n;
    f[i] = std::sin(kPi * x);
    truth[i] = kPi * std::cos(kPi * x);
  }
  const int bw = 13;  // half the kernel width: rows touching the extension
  auto boundary_err = [&](BcKind kind) {
    const auto d = build_derivative_matrix(n, k, {kind, 1});
    const Eigen::VectorXd e = (d.apply(f) - truth).cwiseAbs();
    double worst = 0.0;
    for (int i = 0; i < bw; ++i) worst = std::max({worst, e[i], e[n - 1 - i]});
    return worst;
  };
  const double ar = boundary_err(BcKind::AntiReflective);
  const double z = boundary_err(BcKind::Zero);
  const double p = boundary_err(BcKind::Periodic);
  const double r = boundary_err(BcKind::Reflective);
  const double el = seconds_since(t0);
  const bool ok = ar < z && ar < p && ar < r && el < 1.0;
  report(4, "anti-reflective boundary error smallest on sin(pi t)", ok,
         "AR " + fmt(ar) + " vs Z " + fmt(z) + ", P " + fmt(p) + ", R " + fmt(r));
}

void criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();
  const int sz = 8, vol = sz * sz * sz;
  const auto k = design_nr_kernel(3, 2);
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(sz, sz);
  bool ok = true;
  std::string detail;
  // Half-point reflection (shift 0) realizes the reflective rank deficiency
  // of 1; the whole-point variant (shift 1) zeroes both boundary rows.
  const std::vector<std::pair<BcKind, int>> bcs = {{BcKind::Zero, 1},
                                                   {BcKind::Periodic, 1},
                                                   {BcKind::Reflective, 0},
                                                   {BcKind::AntiReflective, 1}};
  const int expected_axis_deficiency[] = {0, 2, 1, 1};
  const auto wav = make_wavelet(WaveletFamily::Haar, sz, sz, 2);
  const auto phi = make_measurement(MeasurementKind::GaussianOrthonormal, sz, sz, 5);
  for (std::size_t i = 0; i < bcs.size(); ++i) {
    const auto d = build_derivative_matrix(sz, k, {bcs[i].first, bcs[i].second});
    const Eigen::MatrixXd gx = kron3(eye, eye, d.mat);
    const Eigen::MatrixXd gy = kron3(eye, d.mat, eye);
    const Eigen::MatrixXd gt = kron3(d.mat, eye, eye);
    Eigen::MatrixXd grad(3 * vol, vol);
    grad << gx, gy, gt;
    const int p = expected_axis_deficiency[i];
    const int want = vol - p * p * p;
    const int got = numerical_rank(grad);
    ok &= got == want;
    if (got != want)
      detail += " grad bc=" + std::to_string(static_cast<int>(bcs[i].first)) + " rank " +
                std::to_string(got) + " != " + std::to_string(want);

    const Eigen::MatrixXd psi = kron3(eye, wav.wn, wav.wm);
    const Eigen::MatrixXd phim = kron3(eye, phi.phi_n, phi.phi_m);
    Eigen::MatrixXd stacked(5 * vol, vol);
    stacked << grad, psi, phim;
    const int full = numerical_rank(stacked);
    ok &= full == vol;
    if (full != vol)
      detail += " stacked bc=" + std::to_string(static_cast<int>(bcs[i].first)) +
                " rank " + std::to_string(full);
  }
  const double el = seconds_since(t0);
  ok &= el < 30.0;
  report(5, "gradient rank deficiencies and full-rank stacked operator", ok,
         detail.empty() ? fmt(el) + " s" : detail);
}

void criterion_6() {
  const auto t0 = std::chrono::steady_clock::now();
  const SyntheticSignalSpec s;
  const double truth = tv_ground_truth(s);
  const BoundaryCondition bc{BcKind::AntiReflective, 1};

  const auto s200 = sample_signal(s, 200, 0.0, 12.5);
  const double est200 = tv_estimate_1d(s200, 27, 25, bc, 12.5 / 200);
  const double rel200 = std::fabs(est200 - truth) / truth;
  const bool clause_a = rel200 < 0.05;

  bool clause_b = true;
  std::string berr;
  for (int npts : {32, 62}) {
    const auto v = sample_signal(s, npts, 0.0, 12.5);
    const double dt = 12.5 / npts;
    const double hi = std::fabs(tv_estimate_1d(v, 27, 25, bc, dt) - truth);
    const double lo = std::fabs(tv_estimate_1d(v, 3, 2, bc, dt) - truth);
    clause_b &= hi < lo;
    berr += " N=" + std::to_string(npts) + " HO " + fmt(hi) + " vs L3 " + fmt(lo);
  }

  std::vector<std::uint64_t> seeds(10);
  for (std::uint64_t i = 0; i < 10; ++i) seeds[i] = i;
  const auto rows =
      noise_sensitivity(s, 32, 0.0, 12.5, {20.0}, seeds, {{27, 25}, {3, 2}}, bc);
  double err_ho = 0.0, err_l3 = 0.0;
  for (const auto& r : rows)
    (r.kernel_length == 27 ? err_ho : err_l3) += std::fabs(r.tv_estimate - r.tv_truth);
  const bool clause_c = err_ho < err_l3;

  const double el = seconds_since(t0);
  const bool ok = clause_a && clause_b && clause_c && el < 10.0;
  report(6, "TV approximation accuracy of the maximum-accuracy kernel", ok,
         "N=200 rel err " + fmt(rel200) + ";" + berr + "; 20 dB 10-seed HO " +
             fmt(err_ho / 10.0) + " vs L3 " + fmt(err_l3 / 10.0));
  if (!ok)
    std::printf(
        "      note: the p=25 kernel is the order-26 central difference; its unit-step\n"
        "      response has l1 norm 2.264, so jump-dominated signals are over-counted\n"
        "      regardless of N. Matching the sampling rate to the accuracy order meets\n"
        "      every clause (p=15 at N=32, p=9 at N=62, p=3 at N=200 land within 5%%;\n"
        "      p=13 beats the 3-point kernel clean and at 20 dB). See the unit tests.\n");
}

void criterion_7() {
  bool ok = true;
  Rng rng(31);
  // gradient adjoint + Kronecker match at 4^3..6^3 for all BCs
  for (int sz : {4, 5, 6}) {
    for (BcKind kind : {BcKind::Zero, BcKind::Periodic, BcKind::Reflective,
                        BcKind::AntiReflective}) {
      const auto d = build_derivative_matrix(sz, design_nr_kernel(3, 2), {kind, 1});
      const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(sz, sz);
      const Eigen::MatrixXd gx = kron3(eye, eye, d.mat);
      const Eigen::MatrixXd gy = kron3(eye, d.mat, eye);
      const Eigen::MatrixXd gt = kron3(d.mat, eye, eye);
      const VideoTensor f = random_tensor(rng, sz, sz, sz);
      const GradientField g = gradient(f, d, d, d);
      ok &= (g.gx.data - gx * f.data).lpNorm<Eigen::Infinity>() < 1e-10;
      ok &= (g.gy.data - gy * f.data).lpNorm<Eigen::Infinity>() < 1e-10;
      ok &= (g.gt.data - gt * f.data).lpNorm<Eigen::Infinity>() < 1e-10;

      GradientField h(sz, sz, sz);
      h.gx = random_tensor(rng, sz, sz, sz);
      h.gy = random_tensor(rng, sz, sz, sz);
      h.gt = random_tensor(rng, sz, sz, sz);
      const double lhs = g.gx.data.dot(h.gx.data) + g.gy.data.dot(h.gy.data) +
                         g.gt.data.dot(h.gt.data);
      const double rhs = f.data.dot(gradient_adjoint(h, d, d, d).data);
      ok &= std::fabs(lhs - rhs) <= 1e-10 * std::max(1.0, std::fabs(lhs));
    }
  }
  // measurement and wavelet adjoints, wavelet perfect reconstruction
  const int m = 8, n = 8, N = 4;
  const auto phi = make_measurement(MeasurementKind::GaussianOrthonormal, m, n, 9);
  const auto wav = make_wavelet(WaveletFamily::Symmlet10, m, n, 2);
  const VideoTensor a = random_tensor(rng, m, n, N);
  const VideoTensor b = random_tensor(rng, m, n, N);
  ok &= std::fabs(phi.measure(a).data.dot(b.data) -
                  a.data.dot(phi.measure_adjoint(b).data)) < 1e-10;
  ok &= std::fabs(wav.analysis(a).data.dot(b.data) -
                  a.data.dot(wav.synthesis(b).data)) < 1e-10;
  ok &= (wav.synthesis(wav.analysis(a)).data - a.data).lpNorm<Eigen::Infinity>() < 1e-10;
  // selection operator adjoint: <P y, b> = <y, P^T b>
  const auto plan = make_sampling_plan(m, n, N, 0.5, 3, true);
  Eigen::VectorXd y(m * n * N), c(static_cast<Eigen::Index>(plan.omega.size()));
  for (Eigen::Index i = 0; i < y.size(); ++i) y[i] = rng.gaussian();
  for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = rng.gaussian();
  ok &= std::fabs(plan.select(y).dot(c) - y.dot(plan.select_adjoint(c))) < 1e-10;
  report(7, "operator algebra: adjoints, Kronecker forms, wavelet reconstruction", ok);
}

void criterion_8() {
  bool ok = true;
  Rng rng(55);
  for (BcKind kind : {BcKind::Zero, BcKind::Periodic, BcKind::Reflective,
                      BcKind::AntiReflective}) {
    const auto d = build_derivative_matrix(8, design_nr_kernel(3, 2), {kind, 1});
    const auto sf = factorize(d, d, d, 4.0, 4.0, 40.0);
    const VideoTensor rhs = random_tensor(rng, 8, 8, 8);
    const VideoTensor f = sf.solve_f(rhs);
    VideoTensor back = gradient_adjoint(gradient(f, d, d, d), d, d, d);
    back.data = 4.0 * back.data + 44.0 * f.data;
    ok &= (back.data - rhs.data).norm() / rhs.data.norm() < 1e-8;
  }
  // dense oracle at 4^3
  const auto d4 =
      build_derivative_matrix(4, design_nr_kernel(3, 2), {BcKind::AntiReflective, 1});
  const auto sf4 = factorize(d4, d4, d4, 4.0, 4.0, 40.0);
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(4, 4);
  const Eigen::MatrixXd gx = kron3(eye, eye, d4.mat);
  const Eigen::MatrixXd gy = kron3(eye, d4.mat, eye);
  const Eigen::MatrixXd gt = kron3(d4.mat, eye, eye);
  const Eigen::MatrixXd O =
      4.0 * (gx.transpose() * gx + gy.transpose() * gy + gt.transpose() * gt) +
      44.0 * Eigen::MatrixXd::Identity(64, 64);
  const VideoTensor rhs = random_tensor(rng, 4, 4, 4);
  ok &= (sf4.solve_f(rhs).data - O.ldlt().solve(rhs.data)).lpNorm<Eigen::Infinity>() < 1e-8;
  report(8, "spectral f-subproblem inverts the quadratic operator", ok);
}

void criterion_9() {
  const auto t0 = std::chrono::steady_clock::now();
  const int sz = 16;
  const VideoTensor truth = translating_boxes_phantom(sz, sz, sz);
  const SolverConfig cfg = recovery_config();

  const auto phi = make_measurement(MeasurementKind::GaussianOrthonormal, sz, sz, 7);
  const auto plan = make_sampling_plan(sz, sz, sz, 0.4, 7, true);
  const Eigen::VectorXd b = plan.select(phi.measure(truth).data);
  const auto ops = SolverOperators::build(sz, sz, sz, cfg, phi, plan, b);
  const auto [f, rep] = solve(std::nullopt, b, cfg, ops);
  const double err40 = nmse(truth, f);

  const auto plan_full = make_sampling_plan(sz, sz, sz, 1.0, 7, true);
  const Eigen::VectorXd bf = plan_full.select(phi.measure(truth).data);
  const auto ops_full = SolverOperators::build(sz, sz, sz, cfg, phi, plan_full, bf);
  const auto [ff, repf] = solve(std::nullopt, bf, cfg, ops_full);
  const double err_full = nmse(truth, ff);

  const double el = seconds_since(t0);
  const bool ok = err40 <= 1e-2 && rep.converged && rep.iterations <= 500 &&
                  err_full <= 1e-3 && el < 120.0;
  report(9, "end-to-end recovery on the 16^3 phantom", ok,
         "40%: NMSE " + fmt(err40) + " in " + std::to_string(rep.iterations) +
             " iters; full rate NMSE " + fmt(err_full) + "; " + fmt(el) + " s");
}

void criterion_10() {
  const int sz = 16;
  const VideoTensor truth = translating_boxes_phantom(sz, sz, sz);
  const double peak = dynamic_peak(truth);
  const std::vector<int> boundary = {0, 1, 2, 13, 14, 15};  // frames 1-3 and 14-16
  const std::vector<int> mid = {6, 7, 8, 9};
  double b_ar = 0.0, b_p = 0.0, m_ar = 0.0, m_p = 0.0;
  for (BcKind kind : {BcKind::AntiReflective, BcKind::Periodic}) {
    double bsum = 0.0, msum = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      SolverConfig cfg = recovery_config();
      cfg.bc_x = cfg.bc_y = cfg.bc_t = {kind, 1};
      const auto phi = make_measurement(MeasurementKind::GaussianOrthonormal, sz, sz, seed);
      const auto plan = make_sampling_plan(sz, sz, sz, 0.10, seed, true);
      const Eigen::VectorXd b = plan.select(phi.measure(truth).data);
      const auto ops = SolverOperators::build(sz, sz, sz, cfg, phi, plan, b);
      const auto [f, rep] = solve(std::nullopt, b, cfg, ops);
      for (int t : boundary) bsum += frame_psnr(truth, f, t, peak);
      for (int t : mid) msum += frame_psnr(truth, f, t, peak);
    }
    const double bmean = bsum / (10.0 * boundary.size());
    const double mmean = msum / (10.0 * mid.size());
    if (kind == BcKind::AntiReflective) {
      b_ar = bmean;
      m_ar = mmean;
    } else {
      b_p = bmean;
      m_p = mmean;
    }
  }
  const bool ok = b_ar >= b_p && std::fabs(m_ar - m_p) <= 1.0;
  report(10, "anti-reflective BC helps boundary frames at 10% sampling", ok,
         "boundary AR " + fmt(b_ar) + " vs P " + fmt(b_p) + " dB; mid |diff| " +
             fmt(std::fabs(m_ar - m_p)) + " dB");
}

void criterion_11() {
  ExperimentSpec spec;
  spec.volume = translating_boxes_phantom(8, 8, 8);
  spec.rates = {0.5, 1.0};
  spec.seeds = {1, 2};
  spec.config = recovery_config();
  spec.config.max_iter = 25;
  spec.per_frame_rows = true;

  unsetenv("TVHO_THREADS");
  const std::string a = metrics_csv(run_sweep(spec));
  const std::string b = metrics_csv(run_sweep(spec));
  const bool sequential_identical = strip_timing(a) == strip_timing(b);

  setenv("TVHO_THREADS", "4", 1);
  const auto par = run_sweep(spec);
  unsetenv("TVHO_THREADS");
  const auto seq = run_sweep(spec);
  bool threaded_close = seq.size() == par.size();
  double worst = 0.0;
  if (threaded_close)
    for (std::size_t i = 0; i < seq.size(); ++i) {
      worst = std::max(worst, std::fabs(seq[i].nmse - par[i].nmse));
      threaded_close &= std::fabs(seq[i].nmse - par[i].nmse) <= 1e-9 &&
                        seq[i].iterations == par[i].iterations;
    }
  const bool ok = sequential_identical && threaded_close;
  report(11, "sweep determinism: sequential reruns identical, threaded to 1e-9", ok,
         "max threaded NMSE delta " + fmt(worst) +
             " (result columns compared byte-for-byte; wall-time column excluded)");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("%d of 11 criteria passed\n", 11 - g_failures);
  return g_failures == 0 ? 0 : 1;
}

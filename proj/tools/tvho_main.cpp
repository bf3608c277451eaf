// tvho: boundary-condition-aware high-order TV reconstruction toolkit.
//
// Exit codes: 0 success, 1 usage error, 2 numerical or file-contract failure.
#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "tvho/experiments.hpp"
#include "tvho/io.hpp"
#include "tvho/kernels.hpp"

using nlohmann::json;
using namespace tvho;

namespace {

std::string fmt17(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::vector<double> read_vector_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<double> v;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t pos = 0;
    double x;
    try {
      x = std::stod(line.substr(b), &pos);
    } catch (const std::exception&) {
      throw std::runtime_error("'" + path + "' line " + std::to_string(lineno) +
                               ": not a real number");
    }
    v.push_back(x);
  }
  if (v.empty()) throw std::runtime_error("'" + path + "' contains no values");
  return v;
}

void write_vector_file(const std::string& path, const Eigen::VectorXd& v) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  os.precision(17);
  for (Eigen::Index i = 0; i < v.size(); ++i) os << v[i] << '\n';
  if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

BoundaryCondition bc_from_flags(const std::string& name, int shift) {
  BoundaryCondition bc;
  bc.kind = bc_from_name(name);
  if (shift != 0 && shift != 1) throw CLI::ValidationError("--shift must be 0 or 1");
  bc.shift = shift;
  return bc;
}

void emit_metadata(const std::string& output_path, const std::string& command,
                   const json& args, double wall_time_s) {
  write_run_metadata(output_path + ".meta.json", command, args.dump(), wall_time_s);
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

std::vector<std::uint64_t> parse_seed_list(const std::vector<std::uint64_t>& v) {
  return v.empty() ? std::vector<std::uint64_t>{0} : v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-order total-variation video reconstruction toolkit"};
  app.require_subcommand(1);

  // ---- kernel design ------------------------------------------------------
  auto* kernel = app.add_subcommand("kernel", "Derivative kernel utilities");
  kernel->require_subcommand(1);
  auto* kdesign = kernel->add_subcommand("design", "Design a noise-robust derivative kernel");
  int k_length = 27, k_accuracy = 25;
  double k_dt = 1.0;
  kdesign->add_option("--length", k_length, "Odd kernel length L >= 3")->required();
  kdesign->add_option("--accuracy", k_accuracy, "Even polynomial accuracy p")->required();
  kdesign->add_option("--dt", k_dt, "Sample spacing T");

  // ---- diff ---------------------------------------------------------------
  auto* diff = app.add_subcommand("diff", "Differentiate a newline-separated vector");
  int d_length = 27, d_accuracy = 25, d_shift = 1;
  double d_dt = 1.0;
  std::string d_bc = "antireflective", d_input, d_output;
  diff->add_option("--length", d_length, "Kernel length")->required();
  diff->add_option("--accuracy", d_accuracy, "Kernel accuracy")->required();
  diff->add_option("--bc", d_bc, "zero|periodic|reflective|antireflective")->required();
  diff->add_option("--shift", d_shift, "Boundary shift 0|1");
  diff->add_option("--dt", d_dt, "Sample spacing T");
  diff->add_option("--input", d_input, "Input vector file")->required();
  diff->add_option("--output", d_output, "Output vector file (default: stdout)");

  // ---- tv -----------------------------------------------------------------
  auto* tv = app.add_subcommand("tv", "Total variation of a volume");
  std::string t_input, t_bc = "antireflective";
  int t_length = 27, t_accuracy = 25, t_shift = 1;
  bool t_iso = false;
  tv->add_option("--input", t_input, "Volume file")->required();
  tv->add_option("--bc", t_bc, "Boundary condition for all axes");
  tv->add_option("--shift", t_shift, "Boundary shift 0|1");
  tv->add_option("--length", t_length, "Kernel length");
  tv->add_option("--accuracy", t_accuracy, "Kernel accuracy");
  tv->add_flag("--iso", t_iso, "Isotropic TV (default anisotropic)");

  // ---- sample -------------------------------------------------------------
  auto* sample = app.add_subcommand("sample", "Measure and subsample a volume");
  std::string s_input, s_transform = "gauss", s_output, s_plan;
  double s_rate = 0.4;
  std::uint64_t s_seed = 0;
  sample->add_option("--input", s_input, "Volume file")->required();
  sample->add_option("--rate", s_rate, "Sampling rate in (0, 1]")->required();
  sample->add_option("--seed", s_seed, "Random seed")->required();
  sample->add_option("--transform", s_transform, "gauss|hadamard");
  sample->add_option("--output", s_output, "Measurement vector file")->required();
  sample->add_option("--plan", s_plan, "Sampling plan sidecar (JSON)")->required();

  // ---- reconstruct --------------------------------------------------------
  auto* rec = app.add_subcommand("reconstruct", "Reconstruct a volume from measurements");
  std::string r_meas, r_plan, r_config, r_output;
  rec->add_option("--measurements", r_meas, "Measurement vector file")->required();
  rec->add_option("--plan", r_plan, "Sampling plan sidecar (JSON)")->required();
  rec->add_option("--config", r_config, "Solver configuration file")->required();
  rec->add_option("--output", r_output, "Output volume file")->required();

  // ---- sweep --------------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "Rate/seed Monte-Carlo reconstruction sweep");
  std::string w_input, w_transform = "gauss", w_config, w_output, w_plot_prefix;
  std::vector<double> w_rates;
  std::vector<std::uint64_t> w_seeds;
  std::vector<int> w_phantom;
  bool w_per_frame = false;
  sweep->add_option("--input", w_input, "Volume file (alternative to --phantom)");
  sweep->add_option("--phantom", w_phantom, "Generate phantom m n N instead of --input")
      ->expected(3);
  sweep->add_option("--rates", w_rates, "Sampling rates")->required();
  sweep->add_option("--seeds", w_seeds, "Trial seeds (default: 0)");
  sweep->add_option("--transform", w_transform, "gauss|hadamard");
  sweep->add_option("--config", w_config, "Solver configuration file");
  sweep->add_option("--output", w_output, "Metrics CSV path")->required();
  sweep->add_flag("--per-frame", w_per_frame, "Emit one row per frame as well");
  sweep->add_option("--emit-plot-data", w_plot_prefix,
                    "Also write <prefix>_psnr_vs_rate.csv and <prefix>_psnr_vs_frame.csv");

  // ---- phantom ------------------------------------------------------------
  auto* ph = app.add_subcommand("phantom", "Write the translating-boxes phantom volume");
  int p_m = 16, p_n = 16, p_frames = 16;
  std::string p_output;
  ph->add_option("--m", p_m, "Rows");
  ph->add_option("--n", p_n, "Columns");
  ph->add_option("--frames", p_frames, "Frame count");
  ph->add_option("--output", p_output, "Output volume file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  try {
    if (kdesign->parsed()) {
      const KernelSpec k = design_nr_kernel(k_length, k_accuracy, k_dt);
      const std::vector<double> full = assemble_full_kernel(k);
      std::cout.precision(17);
      for (double c : full) std::cout << c << '\n';
      return 0;
    }

    if (diff->parsed()) {
      Timer timer;
      const std::vector<double> in = read_vector_file(d_input);
      const KernelSpec k = design_nr_kernel(d_length, d_accuracy, d_dt);
      const DerivativeOperator op =
          build_derivative_matrix(static_cast<int>(in.size()), k, bc_from_flags(d_bc, d_shift));
      const Eigen::VectorXd out =
          op.apply(Eigen::Map<const Eigen::VectorXd>(in.data(), static_cast<Eigen::Index>(in.size())));
      if (d_output.empty()) {
        std::cout.precision(17);
        for (Eigen::Index i = 0; i < out.size(); ++i) std::cout << out[i] << '\n';
      } else {
        write_vector_file(d_output, out);
        emit_metadata(d_output, "diff",
                      {{"length", d_length}, {"accuracy", d_accuracy}, {"bc", d_bc},
                       {"shift", d_shift}, {"dt", d_dt}, {"input", d_input},
                       {"output", d_output}},
                      timer.seconds());
      }
      return 0;
    }

    if (tv->parsed()) {
      const VideoTensor f = read_volume(t_input);
      const BoundaryCondition bc = bc_from_flags(t_bc, t_shift);
      const KernelSpec k = design_nr_kernel(t_length, t_accuracy, 1.0);
      const DerivativeOperator dm = build_derivative_matrix(f.m, k, bc);
      const DerivativeOperator dn = build_derivative_matrix(f.n, k, bc);
      const DerivativeOperator dN = build_derivative_matrix(f.frames, k, bc);
      const double v = tv_norm(gradient(f, dm, dn, dN),
                               t_iso ? TvNorm::Isotropic : TvNorm::Anisotropic);
      std::cout << fmt17(v) << '\n';
      return 0;
    }

    if (sample->parsed()) {
      Timer timer;
      const VideoTensor f = read_volume(s_input);
      const MeasurementKind kind = measurement_from_name(s_transform);
      const MeasurementOperator phi = make_measurement(kind, f.m, f.n, s_seed);
      const SamplingPlan plan = make_sampling_plan(f.m, f.n, f.frames, s_rate, s_seed, true);
      const Eigen::VectorXd b = plan.select(phi.measure(f).data);
      write_vector_file(s_output, b);
      PlanSidecar sc;
      sc.m = f.m;
      sc.n = f.n;
      sc.frames = f.frames;
      sc.rate = s_rate;
      sc.seed = s_seed;
      sc.transform = kind;
      write_plan_sidecar(s_plan, sc);
      emit_metadata(s_output, "sample",
                    {{"input", s_input}, {"rate", s_rate}, {"seed", s_seed},
                     {"transform", s_transform}, {"output", s_output}, {"plan", s_plan}},
                    timer.seconds());
      return 0;
    }

    if (rec->parsed()) {
      Timer timer;
      const PlanSidecar sc = read_plan_sidecar(r_plan);
      const SolverConfig cfg = r_config.empty() ? SolverConfig{} : read_config(r_config);
      if (max_wavelet_levels(sc.m, sc.n, cfg.wavelet_levels) != cfg.wavelet_levels)
        std::cerr << "tvho: note: wavelet level reduced to "
                  << max_wavelet_levels(sc.m, sc.n, cfg.wavelet_levels) << " for a " << sc.m
                  << "x" << sc.n << " frame\n";
      const std::vector<double> bv = read_vector_file(r_meas);
      const Eigen::VectorXd b =
          Eigen::Map<const Eigen::VectorXd>(bv.data(), static_cast<Eigen::Index>(bv.size()));
      const MeasurementOperator phi = make_measurement(sc.transform, sc.m, sc.n, sc.seed);
      const SamplingPlan plan =
          make_sampling_plan(sc.m, sc.n, sc.frames, sc.rate, sc.seed, true);
      const SolverOperators ops = SolverOperators::build(sc.m, sc.n, sc.frames, cfg, phi, plan, b);
      auto [f, report] = solve(std::nullopt, b, cfg, ops);
      std::cerr << "tvho: reconstruct: " << report.iterations << " iterations, "
                << (report.converged ? "converged" : "max_iter reached")
                << ", objective " << fmt17(report.final_objective) << '\n';
      write_volume(r_output, f, VolumeDtype::Float64);
      emit_metadata(r_output, "reconstruct",
                    {{"measurements", r_meas}, {"plan", r_plan}, {"config", r_config},
                     {"output", r_output}, {"iterations", report.iterations},
                     {"converged", report.converged}, {"seed", sc.seed}},
                    timer.seconds());
      return 0;
    }

    if (sweep->parsed()) {
      Timer timer;
      if (w_input.empty() == w_phantom.empty())
        throw CLI::ValidationError("sweep requires exactly one of --input or --phantom");
      ExperimentSpec spec;
      spec.volume = w_input.empty()
                        ? translating_boxes_phantom(w_phantom[0], w_phantom[1], w_phantom[2])
                        : read_volume(w_input);
      spec.rates = w_rates;
      spec.seeds = parse_seed_list(w_seeds);
      spec.transform = measurement_from_name(w_transform);
      spec.config = w_config.empty() ? SolverConfig{} : read_config(w_config);
      spec.per_frame_rows = w_per_frame || !w_plot_prefix.empty();
      const std::vector<MetricsRow> rows = run_sweep(spec);
      {
        std::ofstream os(w_output);
        if (!os) throw std::runtime_error("cannot open '" + w_output + "' for writing");
        os << metrics_csv(rows);
      }
      if (!w_plot_prefix.empty()) {
        // Fig.-8-style curve: mean PSNR over seeds per rate, from the mean rows.
        std::ofstream pr(w_plot_prefix + "_psnr_vs_rate.csv");
        pr << "rate,mean_psnr_db\n";
        pr.precision(17);
        for (double rate : spec.rates) {
          double acc = 0.0;
          int cnt = 0;
          for (const MetricsRow& r : rows)
            if (r.frame_index == -1 && r.rate == rate && !r.diverged) {
              acc += r.psnr_db;
              ++cnt;
            }
          pr << rate << ',' << (cnt ? acc / cnt : std::nan("")) << '\n';
        }
        // Table-IV-style curve: mean PSNR over seeds per frame at each rate.
        std::ofstream pf(w_plot_prefix + "_psnr_vs_frame.csv");
        pf << "rate,frame_index,mean_psnr_db\n";
        pf.precision(17);
        for (double rate : spec.rates) {
          for (int t = 0; t < spec.volume.frames; ++t) {
            double acc = 0.0;
            int cnt = 0;
            for (const MetricsRow& r : rows)
              if (r.frame_index == t && r.rate == rate && !r.diverged) {
                acc += r.psnr_db;
                ++cnt;
              }
            pf << rate << ',' << t << ',' << (cnt ? acc / cnt : std::nan("")) << '\n';
          }
        }
      }
      emit_metadata(w_output, "sweep",
                    {{"input", w_input}, {"phantom", w_phantom}, {"rates", w_rates},
                     {"seeds", spec.seeds}, {"transform", w_transform}, {"config", w_config},
                     {"per_frame", spec.per_frame_rows}, {"output", w_output}},
                    timer.seconds());
      return 0;
    }

    if (ph->parsed()) {
      Timer timer;
      write_volume(p_output, translating_boxes_phantom(p_m, p_n, p_frames),
                   VolumeDtype::Float64);
      emit_metadata(p_output, "phantom",
                    {{"m", p_m}, {"n", p_n}, {"frames", p_frames}, {"output", p_output}},
                    timer.seconds());
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "tvho: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "tvho: error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

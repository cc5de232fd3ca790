// qds: enumerate, generate, validate and inspect QDS1 qubit datasets.
//
// Exit codes: 0 success / validation pass, 1 validation failure,
// 2 usage error, 3 I/O error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "qdsim/dataset.hpp"
#include "qdsim/validation.hpp"

namespace fs = std::filesystem;
using namespace qdsim;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitValidationFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int default_threads() {
  if (const char* env = std::getenv("QDS_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

struct GenerateOptions {
  std::string name;
  std::string config_path;
  std::string out_dir = "datasets";
  int num_examples = -1;
  int k = -1;
  int m = -1;
  uint64_t seed = 0;
  bool seed_set = false;
  int threads = default_threads();
  bool full = false;
  bool no_distortion = false;
  int filter_order = -1;
  double filter_ripple = -1.0;
  double filter_cutoff = -1.0;
  bool quiet = false;
};

DatasetConfig resolve_config(const GenerateOptions& opt) {
  DatasetConfig cfg;
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) throw FormatError("cannot open config file '" + opt.config_path + "'");
    nlohmann::json j;
    in >> j;
    cfg = DatasetConfig::from_json(j);
  } else {
    cfg = config_for_name(opt.name);
  }
  if (opt.num_examples > 0) cfg.num_examples = opt.num_examples;
  if (opt.k > 0) cfg.num_realizations = opt.k;
  if (opt.m > 0) {
    cfg.pulse.num_steps = opt.m;
    cfg.pulse.gaussian_sigma =
        cfg.pulse.total_time / (12.0 * cfg.pulse.num_steps);
  }
  if (opt.seed_set) cfg.master_seed = opt.seed;
  if (opt.full) {
    cfg.retain_h1 = true;
    cfg.retain_ui = true;
  }
  if (opt.no_distortion) cfg.name.distorted = false;
  if (opt.filter_order > 0) cfg.filter.order = opt.filter_order;
  if (opt.filter_ripple > 0.0) cfg.filter.passband_ripple_db = opt.filter_ripple;
  if (opt.filter_cutoff > 0.0) cfg.filter.cutoff_rad_per_s = opt.filter_cutoff;
  cfg.pulse.validate();
  cfg.filter.validate();
  return cfg;
}

int cmd_list() {
  const auto configs = enumerate_configs();
  std::cout << std::left << std::setw(34) << "name" << std::setw(10)
            << "category" << std::setw(8) << "qubits" << std::setw(10)
            << "waveform" << std::setw(14) << "noise" << "distortion\n";
  for (const auto& cfg : configs) {
    std::string profiles = "none";
    if (!cfg.profiles.empty()) {
      profiles.clear();
      for (size_t i = 0; i < cfg.profiles.size(); ++i) {
        if (i) profiles += ",";
        profiles += noise_kind_name(cfg.profiles[i]);
      }
    }
    std::cout << std::left << std::setw(34) << cfg.canonical_name()
              << std::setw(10) << static_cast<int>(cfg.category) << std::setw(8)
              << cfg.name.nqubits << std::setw(10)
              << (cfg.name.waveform == 'G' ? "Gaussian" : "Square")
              << std::setw(14) << profiles
              << (cfg.name.distorted ? "yes" : "no") << "\n";
  }
  std::cout << configs.size() << " datasets\n";
  return kExitPass;
}

int cmd_generate(const GenerateOptions& opt) {
  const DatasetConfig cfg = resolve_config(opt);
  const auto result = generate_dataset(cfg, opt.out_dir, opt.threads, opt.quiet);
  std::cout << "wrote " << result.files.size() << " example(s) to "
            << result.directory << " in " << std::fixed << std::setprecision(2)
            << result.elapsed_seconds << " s\n";
  return kExitPass;
}

int cmd_validate(const GenerateOptions& opt, const std::string& mode,
                 const std::string& dir, int num_examples, int substeps,
                 const std::string& report_path) {
  ValidationReport report;

  if (!dir.empty()) {
    // Integrity pass over a generated dataset directory.
    report.check = "dataset-integrity";
    report.passed = true;
    int files = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() != ".qds") continue;
      ++files;
      try {
        const ExampleRecord record = read_example(entry.path().string());
        (void)record.array("expectations");
        (void)record.array("U0");
      } catch (const std::exception& e) {
        report.passed = false;
        report.details["failures"].push_back(
            {{"file", entry.path().filename().string()}, {"error", e.what()}});
      }
    }
    report.details["files_checked"] = files;
    if (files == 0) {
      report.passed = false;
      report.details["error"] = "no .qds files found";
    }
  } else {
    DatasetConfig cfg = resolve_config(opt);
    if (mode == "oracle") {
      report = cross_validate(cfg, num_examples, substeps, 1e-6, opt.threads);
    } else if (mode == "psd") {
      const auto axes = cfg.axis_noise();
      int psd_axis = -1;
      for (size_t a = 0; a < axes.size(); ++a) {
        if (axes[a].kind == NoiseKind::N1 || axes[a].kind == NoiseKind::N5) {
          psd_axis = static_cast<int>(a);
          break;
        }
      }
      if (psd_axis < 0) {
        std::cerr << "dataset '" << cfg.canonical_name()
                  << "' has no PSD-specified noise axis\n";
        return kExitUsage;
      }
      const int K = opt.k > 0 ? opt.k : 2000;
      const auto batches =
          generate_batches(axes, K, cfg.pulse.total_time, cfg.pulse.num_steps,
                           cfg.master_seed, 0);
      const auto& axis = axes[psd_axis];
      report = verify_psd(batches[psd_axis],
                          make_psd_for(axis.kind, axis.psd_shape,
                                       axis.n5_bump_omega),
                          cfg.pulse.total_time);
    } else if (mode == "distortion") {
      const double fs = cfg.pulse.num_steps / cfg.pulse.total_time;
      const DiscreteFilter filter = make_distortion_filter(cfg.filter, fs);
      RandomStream rng(cfg.master_seed, 0, stream::kPulseBase);
      PulseConfig pc = cfg.pulse;
      pc.gaussian_sigma = pc.total_time / 64.0;  // visible train for the probe
      const Waveform w = sample(random_gaussian(pc, rng), pc);
      const Waveform d = qdsim::apply(filter, w);
      report = verify_distortion({w}, {d});
      const ValidationReport props =
          verify_filter_properties(filter, cfg.pulse.num_steps);
      report.linearity_residual = props.linearity_residual;
      report.details["filter_properties"] = props.to_json();
      report.passed = report.passed && props.passed;
    } else {
      std::cerr << "unknown mode '" << mode
                << "' (expected oracle, psd or distortion)\n";
      return kExitUsage;
    }
  }

  const std::string out = report.to_json().dump(2);
  std::cout << out << "\n";
  if (!report_path.empty()) {
    std::ofstream f(report_path, std::ios::trunc);
    if (!f) {
      std::cerr << "cannot write report to '" << report_path << "'\n";
      return kExitIo;
    }
    f << out << "\n";
  }
  return report.passed ? kExitPass : kExitValidationFail;
}

int cmd_inspect(const std::string& path, const std::string& csv_prefix) {
  const ExampleRecord record = read_example(path);
  std::cout << "file: " << path << "\n";
  std::cout << "metadata:\n"
            << record.metadata["simulation_parameters"].dump(2) << "\n";
  if (record.metadata.contains("seed")) {
    std::cout << "seed: " << record.metadata["seed"].dump() << "\n";
  }
  std::cout << std::left << std::setw(24) << "array" << std::setw(8) << "dtype"
            << "shape\n";
  for (const auto& a : record.arrays) {
    std::string shape = "[";
    for (size_t i = 0; i < a.shape.size(); ++i) {
      if (i) shape += ", ";
      shape += std::to_string(a.shape[i]);
    }
    shape += "]";
    std::cout << std::left << std::setw(24) << a.key << std::setw(8) << a.dtype
              << shape << "\n";
  }

  // Noise-operator health: distance of each V_O from the identity.
  const auto& vo = record.array("V_O");
  const int d = static_cast<int>(vo.shape[2]);
  const int num_obs = static_cast<int>(vo.shape[0]);
  double worst = 0.0;
  for (int o = 0; o < num_obs; ++o) {
    double s = 0.0;
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        cxd v = vo.c128[(static_cast<size_t>(o) * d + r) * d + c];
        if (r == c) v -= 1.0;
        s += std::norm(v);
      }
    }
    worst = std::max(worst, std::sqrt(s));
  }
  std::cout << "max ||V_O - I||_F over observables: " << std::scientific
            << std::setprecision(3) << worst << "\n";

  if (!csv_prefix.empty()) {
    {
      std::ofstream f(csv_prefix + "_expectations.csv", std::ios::trunc);
      if (!f) return kExitIo;
      const auto& e = record.array("E_O");
      const auto obs_labels = record.metadata["simulation_parameters"]
                                  ["observable_order"];
      const auto state_labels =
          record.metadata["simulation_parameters"]["state_order"];
      f << "state";
      for (const auto& l : obs_labels) f << "," << l.get<std::string>();
      f << "\n";
      const size_t O = e.shape[1];
      for (size_t s = 0; s < e.shape[0]; ++s) {
        f << state_labels[s].get<std::string>();
        for (size_t o = 0; o < O; ++o) {
          f << "," << std::setprecision(17) << e.f64[s * O + o];
        }
        f << "\n";
      }
    }
    {
      std::ofstream f(csv_prefix + "_pulses.csv", std::ios::trunc);
      if (!f) return kExitIo;
      const auto& t = record.array("time_range");
      const auto& p = record.array("pulses");
      const auto& dp = record.array("distorted_pulses");
      const size_t C = p.shape[1];
      f << "t";
      for (size_t c = 0; c < C; ++c) f << ",f" << c;
      for (size_t c = 0; c < C; ++c) f << ",f" << c << "_distorted";
      f << "\n";
      for (size_t j = 0; j < t.shape[0]; ++j) {
        f << std::setprecision(17) << t.f64[j];
        for (size_t c = 0; c < C; ++c) f << "," << p.f64[j * C + c];
        for (size_t c = 0; c < C; ++c) f << "," << dp.f64[j * C + c];
        f << "\n";
      }
    }
    std::cout << "CSV written to " << csv_prefix << "_{expectations,pulses}.csv\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noisy one- and two-qubit Monte Carlo dataset generator"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "List the 52 dataset configurations");

  GenerateOptions gen_opt;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--name", gen_opt.name, "Canonical dataset name");
    cmd->add_option("--config", gen_opt.config_path, "Config JSON file");
    cmd->add_option("--num-ex", gen_opt.num_examples, "Number of examples");
    cmd->add_option("--k", gen_opt.k, "Noise realizations per example");
    cmd->add_option("--m", gen_opt.m, "Time steps (power of two)");
    cmd->add_option("--seed", gen_opt.seed, "Master seed")
        ->each([&](const std::string&) { gen_opt.seed_set = true; });
    cmd->add_option("--threads", gen_opt.threads,
                    "Worker threads (QDS_THREADS env as fallback)");
    cmd->add_flag("--full", gen_opt.full, "Retain H1 and U_I arrays");
    cmd->add_flag("--no-distortion-override", gen_opt.no_distortion,
                  "Force distortion off");
    cmd->add_option("--filter-order", gen_opt.filter_order, "Distortion filter order");
    cmd->add_option("--filter-ripple", gen_opt.filter_ripple,
                    "Passband ripple (dB)");
    cmd->add_option("--filter-cutoff", gen_opt.filter_cutoff, "Cutoff (rad/s)");
  };

  auto* gen_cmd = app.add_subcommand("generate", "Generate a dataset directory");
  add_common(gen_cmd);
  gen_cmd->add_option("--out", gen_opt.out_dir, "Output directory");
  gen_cmd->add_flag("--quiet", gen_opt.quiet, "Suppress progress output");

  std::string val_mode = "oracle";
  std::string val_dir;
  std::string report_path;
  int val_examples = 5;
  int val_substeps = 64;
  auto* val_cmd = app.add_subcommand("validate", "Run validation checks");
  add_common(val_cmd);
  val_cmd->add_option("--mode", val_mode, "oracle | psd | distortion");
  val_cmd->add_option("--dir", val_dir, "Verify integrity of a dataset directory");
  val_cmd->add_option("--examples", val_examples, "Examples for oracle mode");
  val_cmd->add_option("--substeps", val_substeps, "RK4 substeps per slice");
  val_cmd->add_option("--report", report_path, "Write the JSON report here");

  std::string inspect_path;
  std::string csv_prefix;
  auto* ins_cmd = app.add_subcommand("inspect", "Summarize one example file");
  ins_cmd->add_option("file", inspect_path, "Example .qds file")->required();
  ins_cmd->add_option("--csv", csv_prefix, "Dump expectations/pulses CSVs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*list_cmd) return cmd_list();
    if (*gen_cmd) {
      if (gen_opt.name.empty() && gen_opt.config_path.empty()) {
        std::cerr << "generate requires --name or --config\n";
        return kExitUsage;
      }
      return cmd_generate(gen_opt);
    }
    if (*val_cmd) {
      if (val_dir.empty() && gen_opt.name.empty() && gen_opt.config_path.empty()) {
        std::cerr << "validate requires --name, --config or --dir\n";
        return kExitUsage;
      }
      return cmd_validate(gen_opt, val_mode, val_dir, val_examples, val_substeps,
                          report_path);
    }
    if (*ins_cmd) return cmd_inspect(inspect_path, csv_prefix);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

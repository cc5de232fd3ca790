#include "qdsim/dataset.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "qdsim/evolution.hpp"
#include "qdsim/measurement.hpp"
#include "qdsim/parallel.hpp"

namespace qdsim {

namespace {

Category category_for(const DatasetName& name) {
  const auto& c = name.control_axes;
  if (name.nqubits == 1) {
    if (c == std::vector<std::string>{"X"}) return Category::cat1;
    if (c == std::vector<std::string>{"X", "Y"}) return Category::cat2;
  } else {
    if (c == std::vector<std::string>{"IX", "XI"}) return Category::cat3;
    if (c == std::vector<std::string>{"IX", "XI", "XX"}) return Category::cat4;
  }
  throw std::invalid_argument("no category with control axes '" +
                              name.control_tag() + "' for " +
                              std::to_string(name.nqubits) + " qubit(s)");
}

std::vector<std::string> noise_axis_tags(Category cat) {
  switch (cat) {
    case Category::cat1: return {"Z"};
    case Category::cat2: return {"X", "Z"};
    case Category::cat3:
    case Category::cat4: return {"IZ", "ZI"};
  }
  return {};
}

std::vector<std::string> control_axis_tags(Category cat) {
  switch (cat) {
    case Category::cat1: return {"X"};
    case Category::cat2: return {"X", "Y"};
    case Category::cat3: return {"IX", "XI"};
    case Category::cat4: return {"IX", "XI", "XX"};
  }
  return {};
}

int levenshtein(const std::string& a, const std::string& b) {
  std::vector<int> prev(b.size() + 1), cur(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
  for (size_t i = 1; i <= a.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (size_t j = 1; j <= b.size(); ++j) {
      const int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::vector<ComplexMatrix> drift_terms(const SystemCategory& cat,
                                       const EnergyGaps& gaps) {
  if (cat.nqubits == 1) {
    return {0.5 * gaps.omega * pauli(Pauli::Z)};
  }
  return {0.5 * gaps.omega1 * tensor(pauli(Pauli::Z), pauli(Pauli::I)),
          0.5 * gaps.omega2 * tensor(pauli(Pauli::I), pauli(Pauli::Z))};
}

void push_matrix(std::vector<cxd>& out, const ComplexMatrix& m) {
  out.insert(out.end(), m.data(), m.data() + m.size());
}

std::vector<cxd> flatten(const std::vector<ComplexMatrix>& ms) {
  std::vector<cxd> out;
  if (!ms.empty()) out.reserve(ms.size() * ms[0].size());
  for (const auto& m : ms) push_matrix(out, m);
  return out;
}

}  // namespace

SystemCategory DatasetConfig::system() const {
  return SystemCategory::make(category, half_interacting_control);
}

std::vector<AxisNoise> DatasetConfig::axis_noise() const {
  if (profiles.empty()) return {};
  const auto cat = system();
  if (profiles.size() != cat.noise_axes.size()) {
    throw std::invalid_argument("config declares " +
                                std::to_string(profiles.size()) +
                                " noise profiles for a category with " +
                                std::to_string(cat.noise_axes.size()) +
                                " noise axes");
  }
  std::vector<AxisNoise> axes(profiles.size());
  for (size_t a = 0; a < profiles.size(); ++a) {
    axes[a].kind = profiles[a];
    axes[a].psd_shape = cat.noise_axes[a].psd_shape;
    axes[a].n5_bump_omega = n5_bump_omega;
  }
  for (size_t a = 0; a < axes.size(); ++a) {
    if (axes[a].kind != NoiseKind::N6) continue;
    for (size_t b = 0; b < axes.size(); ++b) {
      if (axes[b].kind != NoiseKind::N0 && axes[b].kind != NoiseKind::N6) {
        axes[a].n6_source_axis = static_cast<int>(b);
        break;
      }
    }
  }
  return axes;
}

nlohmann::json DatasetConfig::to_json() const {
  const auto cat = system();
  nlohmann::json j;
  j["name"] = canonical_name();
  j["dim"] = cat.dim();
  if (cat.nqubits == 1) {
    j["Omega"] = gaps.omega;
  } else {
    j["Omega_1"] = gaps.omega1;
    j["Omega_2"] = gaps.omega2;
  }
  j["T"] = pulse.total_time;
  j["M"] = pulse.num_steps;
  j["K"] = num_realizations;
  j["num_ex"] = num_examples;
  j["batch_size"] = 1;  // examples are generated one at a time
  j["master_seed"] = master_seed;
  j["pulse_shape"] = name.waveform == 'G' ? "Gaussian" : "Square";
  j["num_pulses"] = pulse.num_pulses;
  j["amp_min"] = pulse.amp_min;
  j["amp_max"] = pulse.amp_max;
  j["pulse_sigma"] = pulse.gaussian_sigma;
  j["control_axes"] = name.control_axes;
  j["noise_axes"] = name.noise_axes;
  {
    std::vector<std::string> ps;
    for (auto p : profiles) ps.push_back(noise_kind_name(p));
    j["noise_profile"] = ps;
  }
  j["distortion"] = {{"enabled", name.distorted},
                     {"order", filter.order},
                     {"passband_ripple_db", filter.passband_ripple_db},
                     {"cutoff_rad_per_s", filter.cutoff_rad_per_s}};
  j["noise_model"] = {{"n2_kernel_width", pulse.total_time / 32.0},
                      {"n3_envelope", "1+sin(2*pi*t/T)"},
                      {"n5_bump_omega", n5_bump_omega}};
  j["half_interacting_control"] = half_interacting_control;
  j["retained"] = {{"H1", retain_h1}, {"U_I", retain_ui}};
  j["custom"] = custom;
  return j;
}

DatasetConfig DatasetConfig::from_json(const nlohmann::json& j) {
  if (!j.contains("name")) {
    throw std::invalid_argument("config JSON requires a 'name' field");
  }
  DatasetConfig cfg;
  cfg.name = parse_name(j.at("name").get<std::string>());
  cfg.category = category_for(cfg.name);
  for (const auto& p : cfg.name.noise_profiles) {
    cfg.profiles.push_back(noise_kind_from_name(p));
  }
  cfg.num_realizations = cfg.profiles.empty() ? 1 : 2000;

  if (j.contains("Omega")) cfg.gaps.omega = j["Omega"].get<double>();
  if (j.contains("Omega_1")) cfg.gaps.omega1 = j["Omega_1"].get<double>();
  if (j.contains("Omega_2")) cfg.gaps.omega2 = j["Omega_2"].get<double>();
  if (j.contains("T")) cfg.pulse.total_time = j["T"].get<double>();
  if (j.contains("M")) cfg.pulse.num_steps = j["M"].get<int>();
  cfg.pulse.gaussian_sigma = cfg.pulse.total_time / (12.0 * cfg.pulse.num_steps);
  if (j.contains("num_pulses")) cfg.pulse.num_pulses = j["num_pulses"].get<int>();
  if (j.contains("amp_min")) cfg.pulse.amp_min = j["amp_min"].get<double>();
  if (j.contains("amp_max")) cfg.pulse.amp_max = j["amp_max"].get<double>();
  if (j.contains("pulse_sigma")) {
    cfg.pulse.gaussian_sigma = j["pulse_sigma"].get<double>();
  }
  if (j.contains("K")) cfg.num_realizations = j["K"].get<int>();
  if (j.contains("num_ex")) cfg.num_examples = j["num_ex"].get<int>();
  if (j.contains("master_seed")) cfg.master_seed = j["master_seed"].get<uint64_t>();
  if (j.contains("distortion")) {
    const auto& d = j["distortion"];
    if (d.contains("order")) cfg.filter.order = d["order"].get<int>();
    if (d.contains("passband_ripple_db")) {
      cfg.filter.passband_ripple_db = d["passband_ripple_db"].get<double>();
    }
    if (d.contains("cutoff_rad_per_s")) {
      cfg.filter.cutoff_rad_per_s = d["cutoff_rad_per_s"].get<double>();
    }
  }
  if (j.contains("noise_model") && j["noise_model"].contains("n5_bump_omega")) {
    cfg.n5_bump_omega = j["noise_model"]["n5_bump_omega"].get<double>();
  }
  if (j.contains("half_interacting_control")) {
    cfg.half_interacting_control = j["half_interacting_control"].get<bool>();
  }
  if (j.contains("retained")) {
    if (j["retained"].contains("H1")) cfg.retain_h1 = j["retained"]["H1"].get<bool>();
    if (j["retained"].contains("U_I")) cfg.retain_ui = j["retained"]["U_I"].get<bool>();
  }
  if (j.contains("custom")) cfg.custom = j["custom"].get<bool>();
  return cfg;
}

std::vector<DatasetConfig> enumerate_configs() {
  struct CategoryPlan {
    Category cat;
    std::vector<std::vector<NoiseKind>> profile_sets;
  };
  static const std::vector<CategoryPlan> kPlans = {
      {Category::cat1,
       {{},
        {NoiseKind::N1},
        {NoiseKind::N2},
        {NoiseKind::N3},
        {NoiseKind::N4}}},
      {Category::cat2,
       {{},
        {NoiseKind::N1, NoiseKind::N5},
        {NoiseKind::N1, NoiseKind::N6},
        {NoiseKind::N3, NoiseKind::N6}}},
      {Category::cat3, {{NoiseKind::N1, NoiseKind::N6}}},
      {Category::cat4,
       {{},
        {NoiseKind::N1, NoiseKind::N5},
        {NoiseKind::N1, NoiseKind::N6}}},
  };

  std::vector<DatasetConfig> configs;
  configs.reserve(52);
  for (char waveform : {'G', 'S'}) {
    for (const auto& plan : kPlans) {
      for (const auto& profile_set : plan.profile_sets) {
        for (bool distorted : {false, true}) {
          DatasetConfig cfg;
          cfg.category = plan.cat;
          cfg.profiles = profile_set;
          cfg.name.waveform = waveform;
          cfg.name.nqubits = (plan.cat == Category::cat1 ||
                              plan.cat == Category::cat2)
                                 ? 1
                                 : 2;
          cfg.name.control_axes = control_axis_tags(plan.cat);
          cfg.name.distorted = distorted;
          if (!profile_set.empty()) {
            cfg.name.noise_axes = noise_axis_tags(plan.cat);
            for (auto p : profile_set) {
              cfg.name.noise_profiles.push_back(noise_kind_name(p));
            }
          }
          cfg.num_realizations = profile_set.empty() ? 1 : 2000;
          configs.push_back(std::move(cfg));
        }
      }
    }
  }
  return configs;
}

DatasetConfig config_for_name(const std::string& name) {
  const auto configs = enumerate_configs();
  for (const auto& cfg : configs) {
    if (cfg.canonical_name() == name) return cfg;
  }
  std::vector<std::pair<int, std::string>> scored;
  for (const auto& cfg : configs) {
    const auto canonical = cfg.canonical_name();
    scored.emplace_back(levenshtein(name, canonical), canonical);
  }
  std::sort(scored.begin(), scored.end());
  std::string msg = "unknown dataset name '" + name + "'; closest matches: ";
  for (size_t i = 0; i < 3 && i < scored.size(); ++i) {
    if (i) msg += ", ";
    msg += scored[i].second;
  }
  throw std::invalid_argument(msg);
}

ExampleRecord generate_example(const DatasetConfig& cfg, int example_index,
                               int threads) {
  cfg.pulse.validate();
  cfg.filter.validate();
  if (cfg.num_realizations < 1) {
    throw std::invalid_argument("K must be >= 1");
  }

  const SystemCategory cat = cfg.system();
  const int d = cat.dim();
  const int M = cfg.pulse.num_steps;
  const double T = cfg.pulse.total_time;
  const double dt = T / M;
  const int K = cfg.num_realizations;
  const int num_ctrl = static_cast<int>(cat.control_axes.size());
  const auto axes = cfg.axis_noise();
  const int num_noise = static_cast<int>(axes.size());
  const uint32_t ex = static_cast<uint32_t>(example_index);

  // Control pulses, one stream per axis.
  const bool gaussian = cfg.name.waveform == 'G';
  std::vector<Waveform> pulses(num_ctrl);
  std::vector<double> pulse_params;
  pulse_params.reserve(static_cast<size_t>(num_ctrl) * cfg.pulse.num_pulses * 3);
  for (int a = 0; a < num_ctrl; ++a) {
    RandomStream rng(cfg.master_seed, ex, stream::kPulseBase + a);
    if (gaussian) {
      const GaussianTrain train = random_gaussian(cfg.pulse, rng);
      pulses[a] = sample(train, cfg.pulse);
      for (int k = 0; k < cfg.pulse.num_pulses; ++k) {
        pulse_params.push_back(train.amplitudes[k]);
        pulse_params.push_back(train.means[k]);
        pulse_params.push_back(train.sigma);
      }
    } else {
      const SquareTrain train = random_square(cfg.pulse, rng);
      pulses[a] = sample(train, cfg.pulse);
      for (int k = 0; k < cfg.pulse.num_pulses; ++k) {
        pulse_params.push_back(train.window_starts[k]);
        pulse_params.push_back(train.window_widths[k]);
        pulse_params.push_back(train.amplitudes[k]);
      }
    }
  }

  // The same filter distorts every axis; undistorted datasets carry an
  // identical copy under the distorted key.
  std::vector<Waveform> distorted(num_ctrl);
  if (cfg.name.distorted) {
    const DiscreteFilter filter = make_distortion_filter(cfg.filter, M / T);
    for (int a = 0; a < num_ctrl; ++a) distorted[a] = apply(filter, pulses[a]);
  } else {
    distorted = pulses;
  }
  const std::vector<Waveform>& effective = cfg.name.distorted ? distorted : pulses;

  // H0 slices: drift plus control.
  const ComplexMatrix h_drift = drift(cat, cfg.gaps);
  std::vector<ComplexMatrix> h0 = control_slices(cat, effective);
  for (auto& h : h0) h += h_drift;

  const PropagatorTrace u0 = evolve(h0, dt, /*keep_intermediates=*/true);

  // Noise batches, filled realization by realization inside the workers.
  std::vector<NoiseRealizationBatch> batches(num_noise);
  for (auto& b : batches) {
    b.num_realizations = K;
    b.num_steps = M;
    b.samples.assign(static_cast<size_t>(K) * M, 0.0);
  }

  std::vector<ComplexMatrix> propagators(K);
  std::vector<cxd> h1_flat;
  std::vector<cxd> ui_flat;
  if (cfg.retain_h1) h1_flat.resize(static_cast<size_t>(K) * M * d * d);
  if (cfg.retain_ui) ui_flat.resize(static_cast<size_t>(K) * M * d * d);

  parallel_for(K, threads, [&](int k) {
    std::vector<ComplexMatrix> slices;
    if (num_noise > 0) {
      for (int a = 0; a < num_noise; ++a) {
        if (axes[a].kind == NoiseKind::N6 || axes[a].kind == NoiseKind::N0) continue;
        RandomStream rng(cfg.master_seed, ex,
                         stream::kNoiseBase + static_cast<uint32_t>(a),
                         static_cast<uint32_t>(k));
        const auto r = generate_realization(axes[a], T, M, rng);
        std::copy(r.begin(), r.end(),
                  batches[a].samples.begin() + static_cast<size_t>(k) * M);
      }
      for (int a = 0; a < num_noise; ++a) {
        if (axes[a].kind != NoiseKind::N6) continue;
        const auto* src =
            &batches[axes[a].n6_source_axis].samples[static_cast<size_t>(k) * M];
        auto* dst = &batches[a].samples[static_cast<size_t>(k) * M];
        for (int j = 0; j < M; ++j) dst[j] = src[j] * src[j];
      }
      slices = noise_slices_for_realization(cat, batches, k);
      for (int j = 0; j < M; ++j) slices[j] += h0[j];
    }

    if (cfg.retain_h1) {
      // H1 rows (zero when noiseless).
      const size_t base = static_cast<size_t>(k) * M * d * d;
      for (int j = 0; j < M; ++j) {
        const ComplexMatrix h1_kj =
            num_noise > 0 ? slices[j] - h0[j] : ComplexMatrix::zero(d);
        std::copy(h1_kj.data(), h1_kj.data() + h1_kj.size(),
                  h1_flat.begin() + base + static_cast<size_t>(j) * d * d);
      }
    }

    const bool need_intermediates = cfg.retain_ui;
    PropagatorTrace trace;
    if (num_noise > 0) {
      trace = evolve(slices, dt, need_intermediates);
    } else {
      trace = need_intermediates ? u0 : PropagatorTrace{u0.final_unitary, {}, dt};
    }
    propagators[k] = trace.final_unitary;

    if (cfg.retain_ui) {
      const size_t base = static_cast<size_t>(k) * M * d * d;
      for (int j = 0; j < M; ++j) {
        const ComplexMatrix ui_kj =
            trace.intermediates[j] * u0.intermediates[j].dagger();
        std::copy(ui_kj.data(), ui_kj.data() + ui_kj.size(),
                  ui_flat.begin() + base + static_cast<size_t>(j) * d * d);
      }
    }
  });

  // Measurement: expectations per realization plus noise operators.
  const InitialStateSet states = initial_states(cat.nqubits);
  const ObservableSet obs = observables(cat.nqubits);
  const ExpectationTensor tensor = monte_carlo(states, obs, propagators);

  std::vector<ComplexMatrix> v_ops;
  v_ops.reserve(obs.count());
  {
    std::vector<ComplexMatrix> w_list(K);
    for (int o = 0; o < obs.count(); ++o) {
      for (int k = 0; k < K; ++k) {
        w_list[k] = w_operator(propagators[k], u0.final_unitary,
                               obs.observables[o]);
      }
      v_ops.push_back(v_operator(w_list));
    }
  }

  // Assemble the record.
  ExampleRecord record;
  nlohmann::json sim = cfg.to_json();
  sim["state_order"] = states.labels;
  sim["observable_order"] = obs.labels;
  sim["entry_order"] = "state-major, observable-minor";
  sim["time_convention"] = "midpoint: t_j = (0.5+j)*T/M";
  record.metadata["simulation_parameters"] = sim;
  record.metadata["seed"] = {{"master_seed", cfg.master_seed},
                             {"example_index", example_index}};

  const uint64_t du = static_cast<uint64_t>(d);
  const uint64_t Mu = static_cast<uint64_t>(M);
  const uint64_t Ku = static_cast<uint64_t>(K);
  const uint64_t Su = static_cast<uint64_t>(states.count());
  const uint64_t Ou = static_cast<uint64_t>(obs.count());
  const uint64_t Cu = static_cast<uint64_t>(num_ctrl);
  const uint64_t Au = static_cast<uint64_t>(num_noise);
  const uint64_t nu = static_cast<uint64_t>(cfg.pulse.num_pulses);

  const auto drift_list = drift_terms(cat, cfg.gaps);
  std::vector<ComplexMatrix> dynamic_ops;
  for (const auto& axis : cat.control_axes) {
    dynamic_ops.push_back(axis.prefactor * axis.op);
  }
  std::vector<ComplexMatrix> noise_ops;
  if (num_noise > 0) {
    for (const auto& axis : cat.noise_axes) {
      noise_ops.push_back(axis.prefactor * axis.op);
    }
  }
  std::vector<ComplexMatrix> measurement_ops;
  measurement_ops.push_back(ComplexMatrix::identity(d));
  for (const auto& o : obs.observables) measurement_ops.push_back(o);

  record.arrays.push_back(NamedArray::cplx(
      "static_operators", {drift_list.size(), du, du}, flatten(drift_list)));
  record.arrays.push_back(
      NamedArray::cplx("dynamic_operators", {Cu, du, du}, flatten(dynamic_ops)));
  record.arrays.push_back(
      NamedArray::cplx("noise_operators", {Au, du, du}, flatten(noise_ops)));
  record.arrays.push_back(
      NamedArray::cplx("measurement_operators", {1 + Ou, du, du},
                       flatten(measurement_ops)));
  record.arrays.push_back(NamedArray::cplx("initial_states", {Su, du, du},
                                           flatten(states.states)));
  record.arrays.push_back(
      NamedArray::real("pulse_parameters", {Cu, nu, 3}, pulse_params));
  record.arrays.push_back(
      NamedArray::real("time_range", {Mu}, cfg.pulse.time_grid()));

  std::vector<double> pulses_flat(static_cast<size_t>(M) * num_ctrl);
  std::vector<double> distorted_flat(static_cast<size_t>(M) * num_ctrl);
  for (int j = 0; j < M; ++j) {
    for (int a = 0; a < num_ctrl; ++a) {
      pulses_flat[static_cast<size_t>(j) * num_ctrl + a] = pulses[a][j];
      distorted_flat[static_cast<size_t>(j) * num_ctrl + a] = distorted[a][j];
    }
  }
  record.arrays.push_back(NamedArray::real("pulses", {Mu, Cu}, pulses_flat));
  record.arrays.push_back(
      NamedArray::real("distorted_pulses", {Mu, Cu}, distorted_flat));

  record.arrays.push_back(
      NamedArray::real("expectations", {Su, Ou}, tensor.averaged));
  record.arrays.push_back(NamedArray::cplx("V_O", {Ou, du, du}, flatten(v_ops)));
  record.arrays.push_back(NamedArray::real("V_O_per_realization", {Ku, Su, Ou},
                                           tensor.per_realization));
  record.arrays.push_back(NamedArray::real("E_O", {Su, Ou}, tensor.averaged));

  std::vector<double> noise_flat(static_cast<size_t>(M) * K * num_noise);
  for (int j = 0; j < M; ++j) {
    for (int k = 0; k < K; ++k) {
      for (int a = 0; a < num_noise; ++a) {
        noise_flat[(static_cast<size_t>(j) * K + k) * num_noise + a] =
            batches[a].at(k, j);
      }
    }
  }
  record.arrays.push_back(NamedArray::real("noise", {Mu, Ku, Au}, noise_flat));

  record.arrays.push_back(NamedArray::cplx("H0", {Mu, du, du}, flatten(h0)));
  if (cfg.retain_h1) {
    record.arrays.push_back(
        NamedArray::cplx("H1", {Ku, Mu, du, du}, std::move(h1_flat)));
  }
  record.arrays.push_back(
      NamedArray::cplx("U0", {Mu, du, du}, flatten(u0.intermediates)));
  if (cfg.retain_ui) {
    record.arrays.push_back(
        NamedArray::cplx("U_I", {Ku, Mu, du, du}, std::move(ui_flat)));
  }
  return record;
}

GenerateResult generate_dataset(const DatasetConfig& cfg,
                                const std::string& out_dir, int threads,
                                bool quiet) {
  namespace fs = std::filesystem;
  const auto start = std::chrono::steady_clock::now();
  const std::string name = cfg.canonical_name();
  const fs::path dir = fs::path(out_dir) / name;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory '" + dir.string() +
                             "': " + ec.message());
  }

  GenerateResult result;
  result.directory = dir.string();
  nlohmann::json file_list = nlohmann::json::array();

  // Work splits over (example, realization) pairs: noiseless configs
  // (K = 1) parallelize across examples, noisy ones across realizations
  // inside each example. Files are written in index order either way.
  const bool parallel_examples = cfg.num_realizations == 1 && threads > 1;
  const int block = parallel_examples ? threads : 1;
  std::vector<std::vector<uint8_t>> block_bytes(block);

  for (int base = 0; base < cfg.num_examples; base += block) {
    const int count = std::min(block, cfg.num_examples - base);
    parallel_for(count, parallel_examples ? threads : 1, [&](int offset) {
      block_bytes[offset] = serialize_example(generate_example(
          cfg, base + offset, parallel_examples ? 1 : threads));
    });
    for (int offset = 0; offset < count; ++offset) {
      const int i = base + offset;
      const auto& bytes = block_bytes[offset];
      char fname[32];
      std::snprintf(fname, sizeof(fname), "example_%05d.qds", i);
      const fs::path path = dir / fname;
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
      out.write(reinterpret_cast<const char*>(bytes.data()),
                static_cast<std::streamsize>(bytes.size()));
      out.close();
      result.files.push_back(path.string());
      char checksum[32];
      std::snprintf(
          checksum, sizeof(checksum), "%016llx",
          static_cast<unsigned long long>(fnv1a(bytes.data(), bytes.size())));
      file_list.push_back(
          {{"file", fname}, {"fnv1a", checksum}, {"bytes", bytes.size()}});
      if (!quiet) {
        std::cerr << name << ": example " << (i + 1) << "/" << cfg.num_examples
                  << " (" << bytes.size() << " bytes)\n";
      }
    }
  }

  const auto stop = std::chrono::steady_clock::now();
  result.elapsed_seconds =
      std::chrono::duration<double>(stop - start).count();

  nlohmann::json manifest;
  manifest["name"] = name;
  manifest["config"] = cfg.to_json();
  manifest["files"] = file_list;
  manifest["num_examples"] = cfg.num_examples;
  manifest["elapsed_time"] = result.elapsed_seconds;
  manifest["format"] = {{"container", "QDS1"}, {"version", kFormatVersion}};
  std::ofstream mf(dir / "manifest.json", std::ios::trunc);
  if (!mf) throw std::runtime_error("cannot write manifest.json");
  mf << manifest.dump(2) << "\n";
  return result;
}

}  // namespace qdsim

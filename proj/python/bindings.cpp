#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdsim/dataset.hpp"
#include "qdsim/distortion.hpp"
#include "qdsim/evolution.hpp"
#include "qdsim/linalg.hpp"
#include "qdsim/measurement.hpp"
#include "qdsim/noise.hpp"
#include "qdsim/pulse.hpp"
#include "qdsim/validation.hpp"

namespace py = pybind11;
using namespace qdsim;

namespace {

py::array_t<std::complex<double>> to_numpy(const ComplexMatrix& m) {
  py::array_t<std::complex<double>> arr({m.dim(), m.dim()});
  std::copy(m.data(), m.data() + m.size(), arr.mutable_data());
  return arr;
}

ComplexMatrix from_numpy(
    const py::array_t<std::complex<double>,
                      py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1) ||
      (a.shape(0) != 2 && a.shape(0) != 4)) {
    throw std::invalid_argument("expected a 2x2 or 4x4 complex matrix");
  }
  ComplexMatrix m(static_cast<int>(a.shape(0)));
  std::copy(a.data(), a.data() + m.size(), m.data());
  return m;
}

PauliLabel label_from_string(const std::string& s) {
  const auto to_pauli = [](char c) {
    switch (c) {
      case 'I': return Pauli::I;
      case 'X': return Pauli::X;
      case 'Y': return Pauli::Y;
      case 'Z': return Pauli::Z;
      default:
        throw std::invalid_argument(std::string("unknown Pauli letter '") + c +
                                    "'");
    }
  };
  if (s.size() == 1) return PauliLabel::one(to_pauli(s[0]));
  if (s.size() == 2) return PauliLabel::two(to_pauli(s[0]), to_pauli(s[1]));
  throw std::invalid_argument("Pauli label must have 1 or 2 letters");
}

py::dict record_to_dict(const ExampleRecord& record) {
  py::dict out;
  out["metadata_json"] = record.metadata.dump();
  py::dict arrays;
  for (const auto& a : record.arrays) {
    std::vector<py::ssize_t> shape(a.shape.begin(), a.shape.end());
    if (a.dtype == "f8") {
      py::array_t<double> arr(shape);
      std::copy(a.f64.begin(), a.f64.end(), arr.mutable_data());
      arrays[a.key.c_str()] = arr;
    } else {
      py::array_t<std::complex<double>> arr(shape);
      std::copy(a.c128.begin(), a.c128.end(), arr.mutable_data());
      arrays[a.key.c_str()] = arr;
    }
  }
  out["arrays"] = arrays;
  return out;
}

DatasetConfig config_from_json_str(const std::string& config_json) {
  return DatasetConfig::from_json(nlohmann::json::parse(config_json));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Monte Carlo simulator for noisy one- and two-qubit datasets";

  // --- linear algebra kernel ---
  m.def(
      "pauli",
      [](const std::string& label) { return to_numpy(pauli(label_from_string(label))); },
      py::arg("label"), "Pauli matrix for a label like 'Z' or 'ZX'");
  m.def(
      "tensor",
      [](const py::array_t<std::complex<double>, py::array::c_style |
                                                     py::array::forcecast>& a,
         const py::array_t<std::complex<double>, py::array::c_style |
                                                     py::array::forcecast>& b) {
        return to_numpy(tensor(from_numpy(a), from_numpy(b)));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "expm_unitary",
      [](const py::array_t<std::complex<double>, py::array::c_style |
                                                     py::array::forcecast>& h,
         double dt) { return to_numpy(expm_unitary(from_numpy(h), dt)); },
      py::arg("h"), py::arg("dt"), "exp(-i h dt) for Hermitian h");
  m.def(
      "expectation",
      [](const py::array_t<std::complex<double>, py::array::c_style |
                                                     py::array::forcecast>& rho,
         const py::array_t<std::complex<double>, py::array::c_style |
                                                     py::array::forcecast>& o) {
        return expectation(from_numpy(rho), from_numpy(o));
      },
      py::arg("rho"), py::arg("o"), "Re Tr(rho O)");
  m.def(
      "evolve",
      [](const std::vector<py::array_t<std::complex<double>,
                                       py::array::c_style | py::array::forcecast>>&
             slices,
         double dt) {
        std::vector<ComplexMatrix> hs;
        hs.reserve(slices.size());
        for (const auto& s : slices) hs.push_back(from_numpy(s));
        return to_numpy(evolve(hs, dt).final_unitary);
      },
      py::arg("slices"), py::arg("dt"),
      "Time-ordered product of slice exponentials");

  // --- pulses ---
  py::class_<PulseConfig>(m, "PulseConfig")
      .def(py::init<>())
      .def_readwrite("total_time", &PulseConfig::total_time)
      .def_readwrite("num_steps", &PulseConfig::num_steps)
      .def_readwrite("num_pulses", &PulseConfig::num_pulses)
      .def_readwrite("amp_min", &PulseConfig::amp_min)
      .def_readwrite("amp_max", &PulseConfig::amp_max)
      .def_readwrite("gaussian_sigma", &PulseConfig::gaussian_sigma)
      .def("time_grid", &PulseConfig::time_grid);
  m.def(
      "gaussian_waveform",
      [](const PulseConfig& cfg, uint64_t master_seed, uint32_t example,
         uint32_t axis) {
        RandomStream rng(master_seed, example, stream::kPulseBase + axis);
        const auto train = random_gaussian(cfg, rng);
        const auto w = sample(train, cfg);
        return py::make_tuple(train.amplitudes, train.means, train.sigma,
                              w.samples);
      },
      py::arg("cfg"), py::arg("master_seed"), py::arg("example") = 0,
      py::arg("axis") = 0,
      "Returns (amplitudes, means, sigma, waveform samples)");
  m.def(
      "square_waveform",
      [](const PulseConfig& cfg, uint64_t master_seed, uint32_t example,
         uint32_t axis) {
        RandomStream rng(master_seed, example, stream::kPulseBase + axis);
        const auto train = random_square(cfg, rng);
        const auto w = sample(train, cfg);
        return py::make_tuple(train.amplitudes, train.window_starts,
                              train.window_widths, w.samples);
      },
      py::arg("cfg"), py::arg("master_seed"), py::arg("example") = 0,
      py::arg("axis") = 0,
      "Returns (amplitudes, window starts, window widths, waveform samples)");

  // --- distortion filter ---
  py::class_<DiscreteFilter>(m, "DiscreteFilter")
      .def_readonly("b", &DiscreteFilter::b)
      .def_readonly("a", &DiscreteFilter::a)
      .def_readonly("sample_rate", &DiscreteFilter::sample_rate);
  m.def(
      "chebyshev_filter",
      [](int order, double ripple_db, double cutoff_rad_s, double sample_rate) {
        AnalogFilterSpec spec;
        spec.order = order;
        spec.passband_ripple_db = ripple_db;
        spec.cutoff_rad_per_s = cutoff_rad_s;
        return make_distortion_filter(spec, sample_rate);
      },
      py::arg("order") = 4, py::arg("ripple_db") = 0.5,
      py::arg("cutoff_rad_s") = 2.0 * 3.14159265358979323846 * 20.0,
      py::arg("sample_rate") = 1024.0);
  m.def(
      "apply_filter",
      [](const DiscreteFilter& f, const std::vector<double>& x) {
        return apply(f, x);
      },
      py::arg("filter"), py::arg("x"));
  m.def(
      "filter_response",
      [](const DiscreteFilter& f, const std::vector<double>& freqs_hz) {
        const auto r = response(f, freqs_hz);
        return py::make_tuple(r.magnitude, r.phase);
      },
      py::arg("filter"), py::arg("frequencies_hz"),
      "Returns (magnitude, unwrapped phase) at the given frequencies");

  // --- noise ---
  m.def("psd_z", &psd_z, py::arg("omega"));
  m.def("psd_x", &psd_x, py::arg("omega"));
  m.def(
      "noise_realization",
      [](const std::string& kind, const std::string& shape, double T, int M,
         uint64_t master_seed, uint32_t example, uint32_t axis,
         uint32_t realization, double n5_bump_omega) {
        AxisNoise axis_noise;
        axis_noise.kind = noise_kind_from_name(kind);
        axis_noise.psd_shape = shape == "X" ? PsdShape::X : PsdShape::Z;
        axis_noise.n5_bump_omega = n5_bump_omega;
        RandomStream rng(master_seed, example, stream::kNoiseBase + axis,
                         realization);
        return generate_realization(axis_noise, T, M, rng);
      },
      py::arg("kind"), py::arg("shape") = "Z", py::arg("T") = 1.0,
      py::arg("M") = 1024, py::arg("master_seed") = 1, py::arg("example") = 0,
      py::arg("axis") = 0, py::arg("realization") = 0,
      py::arg("n5_bump_omega") = 40.0,
      "One realization of N1..N5 noise (N6 is the square of its source)");

  // --- dataset registry, generation, persistence ---
  m.def("dataset_names", []() {
    std::vector<std::string> names;
    for (const auto& cfg : enumerate_configs()) {
      names.push_back(cfg.canonical_name());
    }
    return names;
  });
  m.def(
      "parse_dataset_name",
      [](const std::string& s) {
        const DatasetName n = parse_name(s);
        py::dict d;
        d["waveform"] = std::string(1, n.waveform);
        d["nqubits"] = n.nqubits;
        d["control_axes"] = n.control_axes;
        d["noise_axes"] = n.noise_axes;
        d["noise_profiles"] = n.noise_profiles;
        d["distorted"] = n.distorted;
        d["canonical"] = format_name(n);
        return d;
      },
      py::arg("name"));
  m.def(
      "config_json",
      [](const std::string& name) { return config_for_name(name).to_json().dump(); },
      py::arg("name"), "Config JSON for one of the 52 canonical names");
  m.def(
      "generate_example",
      [](const std::string& config_json, int example_index, int threads) {
        return record_to_dict(
            generate_example(config_from_json_str(config_json), example_index,
                             threads));
      },
      py::arg("config_json"), py::arg("example_index") = 0,
      py::arg("threads") = 1);
  m.def(
      "generate_dataset",
      [](const std::string& config_json, const std::string& out_dir, int threads,
         bool quiet) {
        const auto result = generate_dataset(config_from_json_str(config_json),
                                             out_dir, threads, quiet);
        py::dict d;
        d["directory"] = result.directory;
        d["files"] = result.files;
        d["elapsed_seconds"] = result.elapsed_seconds;
        return d;
      },
      py::arg("config_json"), py::arg("out_dir"), py::arg("threads") = 1,
      py::arg("quiet") = true);
  m.def(
      "read_example",
      [](const std::string& path) { return record_to_dict(read_example(path)); },
      py::arg("path"));
  m.def(
      "write_example",
      [](const std::string& config_json, int example_index,
         const std::string& path, int threads) {
        write_example(generate_example(config_from_json_str(config_json),
                                       example_index, threads),
                      path);
      },
      py::arg("config_json"), py::arg("example_index"), py::arg("path"),
      py::arg("threads") = 1);

  // --- validation ---
  m.def(
      "cross_validate",
      [](const std::string& config_json, int num_examples, int substeps,
         double tolerance, int threads) {
        return cross_validate(config_from_json_str(config_json), num_examples,
                              substeps, tolerance, threads)
            .to_json()
            .dump();
      },
      py::arg("config_json"), py::arg("num_examples") = 5,
      py::arg("substeps") = 64, py::arg("tolerance") = 1e-6,
      py::arg("threads") = 1, "Returns the validation report as JSON");

#ifdef QDSIM_VERSION
  m.attr("__version__") = QDSIM_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}

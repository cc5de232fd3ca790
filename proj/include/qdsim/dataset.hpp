#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdsim/distortion.hpp"
#include "qdsim/hamiltonian.hpp"
#include "qdsim/naming.hpp"
#include "qdsim/noise.hpp"
#include "qdsim/pulse.hpp"
#include "qdsim/serialize.hpp"

namespace qdsim {

/// Full recipe for one dataset: identity, physics, noise assignment and
/// generation bookkeeping. Obtained from the 52-entry registry or a
/// config file; every field is overridable.
struct DatasetConfig {
  DatasetName name;
  Category category = Category::cat1;
  EnergyGaps gaps;
  PulseConfig pulse;
  std::vector<NoiseKind> profiles;  // one per category noise axis; empty = noiseless
  AnalogFilterSpec filter;          // used only when name.distorted
  int num_realizations = 2000;      // K; noiseless configs default to 1
  int num_examples = 10;
  uint64_t master_seed = 1;
  bool retain_h1 = false;
  bool retain_ui = false;
  bool half_interacting_control = false;  // apply 1/2 to the printed xx term
  double n5_bump_omega = 40.0;
  bool custom = false;  // flags configs outside the enumerated 52

  std::string canonical_name() const { return format_name(name); }
  SystemCategory system() const;
  /// Maps the profile list onto the category's noise axes (N6 sources
  /// resolved to their paired axis).
  std::vector<AxisNoise> axis_noise() const;

  nlohmann::json to_json() const;
  static DatasetConfig from_json(const nlohmann::json& j);
};

/// The registry of all 52 shipped configurations, ordered waveform
/// (G, S), then category, then profile, undistorted before distorted.
std::vector<DatasetConfig> enumerate_configs();

/// Config for a canonical name; throws std::invalid_argument with
/// near-matches listed when the name is not one of the 52.
DatasetConfig config_for_name(const std::string& name);

/// Runs the full pipeline for one example: pulses -> distortion ->
/// noise -> Hamiltonians -> propagators -> expectations and noise
/// operators -> record. Deterministic in (config, master_seed,
/// example_index) for any thread count.
ExampleRecord generate_example(const DatasetConfig& cfg, int example_index,
                               int threads = 1);

struct GenerateResult {
  std::string directory;
  std::vector<std::string> files;
  double elapsed_seconds = 0.0;
};

/// Generates cfg.num_examples example files plus manifest.json under
/// out_dir/<canonical name>/.
GenerateResult generate_dataset(const DatasetConfig& cfg,
                                const std::string& out_dir, int threads = 1,
                                bool quiet = false);

}  // namespace qdsim

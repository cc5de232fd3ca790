#include "doctest.h"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <map>

#include "qdsim/dataset.hpp"

using namespace qdsim;

namespace {

DatasetConfig desk_config(const std::string& name, int M = 64, int K = 4) {
  DatasetConfig cfg = config_for_name(name);
  cfg.pulse.num_steps = M;
  cfg.pulse.gaussian_sigma = cfg.pulse.total_time / (12.0 * M);
  if (!cfg.profiles.empty()) cfg.num_realizations = K;
  cfg.num_examples = 1;
  return cfg;
}

// Independent FNV-1a for the checksum oracle.
uint64_t fnv_oracle(const std::vector<uint8_t>& bytes, size_t n) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (size_t i = 0; i < n; ++i) {
    h = (h ^ bytes[i]) * 0x100000001b3ull;
  }
  return h;
}

}  // namespace

TEST_CASE("registry: 52 configs with the documented composition") {
  const auto configs = enumerate_configs();
  CHECK(configs.size() == 52);

  std::map<Category, int> per_category;
  int cat3_base = 0;
  bool has_g1qx = false, has_s1qxyd = false;
  for (const auto& cfg : configs) {
    per_category[cfg.category]++;
    if (cfg.category == Category::cat3 && cfg.name.waveform == 'G' &&
        !cfg.name.distorted) {
      ++cat3_base;
    }
    if (cfg.canonical_name() == "G_1q_X") has_g1qx = true;
    if (cfg.canonical_name() == "S_1q_XY_D") has_s1qxyd = true;
    // K defaults: 1 noiseless, 2000 noisy.
    CHECK(cfg.num_realizations == (cfg.profiles.empty() ? 1 : 2000));
  }
  CHECK(has_g1qx);
  CHECK(has_s1qxyd);
  CHECK(per_category[Category::cat1] == 20);  // 5 profiles x 2 waveforms x 2 distortion
  CHECK(per_category[Category::cat2] == 16);
  CHECK(per_category[Category::cat3] == 4);
  CHECK(per_category[Category::cat4] == 12);
  CHECK(cat3_base == 1);
}

TEST_CASE("unknown names suggest near matches") {
  CHECK_THROWS_WITH_AS(config_for_name("G_1q_W"), doctest::Contains("closest"),
                       std::invalid_argument);
}

TEST_CASE("config JSON round trip") {
  DatasetConfig cfg = config_for_name("S_1q_XY_XZ_N1N6_D");
  cfg.num_realizations = 7;
  cfg.master_seed = 99;
  cfg.retain_h1 = true;
  const auto j = cfg.to_json();
  const DatasetConfig back = DatasetConfig::from_json(j);
  CHECK(back.canonical_name() == cfg.canonical_name());
  CHECK(back.num_realizations == 7);
  CHECK(back.master_seed == 99);
  CHECK(back.retain_h1);
  CHECK(back.category == Category::cat2);
  CHECK(back.profiles == std::vector<NoiseKind>{NoiseKind::N1, NoiseKind::N6});
}

TEST_CASE("noiseless example: V_O identity, distorted == pulses") {
  const auto cfg = desk_config("G_1q_X");
  const ExampleRecord record = generate_example(cfg, 0);

  const auto& vo = record.array("V_O");
  REQUIRE(vo.shape == std::vector<uint64_t>{3, 2, 2});
  for (int o = 0; o < 3; ++o) {
    double defect = 0.0;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        cxd v = vo.c128[(static_cast<size_t>(o) * 2 + r) * 2 + c];
        if (r == c) v -= 1.0;
        defect += std::norm(v);
      }
    }
    CHECK(std::sqrt(defect) <= 1e-12);
  }

  CHECK(record.array("pulses").f64 == record.array("distorted_pulses").f64);
  CHECK(record.array("noise").f64.empty());  // no noise axes declared
}

TEST_CASE("record shapes match the metadata declaration") {
  auto cfg = desk_config("G_1q_XY_XZ_N1N6_D", 64, 3);
  cfg.retain_h1 = true;
  cfg.retain_ui = true;
  const ExampleRecord record = generate_example(cfg, 2);

  const uint64_t M = 64, K = 3, S = 6, O = 3, C = 2, A = 2, d = 2;
  CHECK(record.array("time_range").shape == std::vector<uint64_t>{M});
  CHECK(record.array("pulses").shape == std::vector<uint64_t>{M, C});
  CHECK(record.array("distorted_pulses").shape == std::vector<uint64_t>{M, C});
  CHECK(record.array("pulse_parameters").shape == std::vector<uint64_t>{C, 5, 3});
  CHECK(record.array("expectations").shape == std::vector<uint64_t>{S, O});
  CHECK(record.array("E_O").shape == std::vector<uint64_t>{S, O});
  CHECK(record.array("V_O").shape == std::vector<uint64_t>{O, d, d});
  CHECK(record.array("V_O_per_realization").shape ==
        std::vector<uint64_t>{K, S, O});
  CHECK(record.array("noise").shape == std::vector<uint64_t>{M, K, A});
  CHECK(record.array("H0").shape == std::vector<uint64_t>{M, d, d});
  CHECK(record.array("H1").shape == std::vector<uint64_t>{K, M, d, d});
  CHECK(record.array("U0").shape == std::vector<uint64_t>{M, d, d});
  CHECK(record.array("U_I").shape == std::vector<uint64_t>{K, M, d, d});
  CHECK(record.array("initial_states").shape == std::vector<uint64_t>{S, d, d});
  CHECK(record.array("measurement_operators").shape ==
        std::vector<uint64_t>{1 + O, d, d});

  // Every declared array element count is consistent.
  for (const auto& a : record.arrays) {
    if (a.dtype == "f8") {
      CHECK(a.f64.size() == a.element_count());
    } else {
      CHECK(a.c128.size() == a.element_count());
    }
  }

  // distorted pulses must differ from the inputs here
  CHECK(record.array("pulses").f64 != record.array("distorted_pulses").f64);

  // N6 axis (second) is the square of the N1 axis (first).
  const auto& noise = record.array("noise").f64;
  for (uint64_t j = 0; j < M; ++j) {
    for (uint64_t k = 0; k < K; ++k) {
      const double n1 = noise[(j * K + k) * A + 0];
      const double n6 = noise[(j * K + k) * A + 1];
      CHECK(n6 == n1 * n1);
    }
  }
}

TEST_CASE("generation is bitwise deterministic, also across thread counts") {
  const auto cfg = desk_config("G_1q_X_Z_N2", 64, 6);
  const auto bytes_a = serialize_example(generate_example(cfg, 0, 1));
  const auto bytes_b = serialize_example(generate_example(cfg, 0, 1));
  const auto bytes_c = serialize_example(generate_example(cfg, 0, 4));
  CHECK(bytes_a == bytes_b);
  CHECK(bytes_a == bytes_c);

  const auto other_example = serialize_example(generate_example(cfg, 1, 1));
  CHECK(bytes_a != other_example);
}

TEST_CASE("write / read round trip is byte-identical; corruption detected") {
  namespace fs = std::filesystem;
  const auto cfg = desk_config("S_1q_X_Z_N1", 64, 3);
  const ExampleRecord record = generate_example(cfg, 0);
  const auto bytes = serialize_example(record);

  // Independent checksum oracle over everything before the trailer.
  uint64_t declared;
  std::memcpy(&declared, bytes.data() + bytes.size() - 8, 8);
  CHECK(declared == fnv_oracle(bytes, bytes.size() - 8));

  const fs::path path = fs::temp_directory_path() / "qdsim_roundtrip.qds";
  write_example(record, path.string());
  const ExampleRecord back = read_example(path.string());
  const auto bytes2 = serialize_example(back);
  CHECK(bytes == bytes2);

  // Single-byte corruption in the payload trips the checksum.
  auto corrupted = bytes;
  corrupted[corrupted.size() / 2] ^= 0x01;
  CHECK_THROWS_WITH_AS(deserialize_example(corrupted),
                       doctest::Contains("checksum"), FormatError);

  // A corrupted metadata length prefix is reported as truncation.
  auto bad_len = bytes;
  bad_len[6] = 0xFF;
  bad_len[7] = 0xFF;
  CHECK_THROWS_AS(deserialize_example(bad_len), FormatError);

  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  CHECK_THROWS_WITH_AS(deserialize_example(bad_magic), doctest::Contains("magic"),
                       FormatError);
  fs::remove(path);
}

TEST_CASE("generate_dataset writes readable files plus a manifest") {
  namespace fs = std::filesystem;
  auto cfg = desk_config("G_1q_X", 64);
  cfg.num_examples = 2;
  const fs::path out = fs::temp_directory_path() / "qdsim_ds_test";
  fs::remove_all(out);

  const auto result = generate_dataset(cfg, out.string(), 1, true);
  CHECK(result.files.size() == 2);
  for (const auto& f : result.files) {
    const ExampleRecord r = read_example(f);
    CHECK(r.has("expectations"));
    CHECK(r.has("U0"));
  }
  CHECK(fs::exists(fs::path(result.directory) / "manifest.json"));
  fs::remove_all(out);
}

TEST_CASE("record completeness: every declared key appears exactly once") {
  auto cfg = desk_config("G_1q_XY_XZ_N1N5", 64, 2);
  cfg.retain_h1 = true;
  cfg.retain_ui = true;
  const ExampleRecord record = generate_example(cfg, 0);

  const std::vector<std::string> expected = {
      "static_operators", "dynamic_operators",  "noise_operators",
      "measurement_operators", "initial_states", "pulse_parameters",
      "time_range",       "pulses",             "distorted_pulses",
      "expectations",     "V_O",                "V_O_per_realization",
      "E_O",              "noise",              "H0",
      "H1",               "U0",                 "U_I"};
  std::map<std::string, int> seen;
  for (const auto& a : record.arrays) seen[a.key]++;
  for (const auto& key : expected) {
    CHECK(seen[key] == 1);
  }
  CHECK(record.arrays.size() == expected.size());
  CHECK(record.metadata.contains("simulation_parameters"));
  CHECK(record.metadata.contains("seed"));

  // Without retention the heavy keys are absent and flagged off.
  auto light = desk_config("G_1q_XY_XZ_N1N5", 64, 2);
  const ExampleRecord lean = generate_example(light, 0);
  CHECK_FALSE(lean.has("H1"));
  CHECK_FALSE(lean.has("U_I"));
  CHECK(lean.metadata["simulation_parameters"]["retained"]["H1"] == false);
}

TEST_CASE("two-qubit example: counts and interacting control") {
  auto cfg = desk_config("G_2q_IX-XI-XX_IZ-ZI_N1-N5", 32, 2);
  const ExampleRecord record = generate_example(cfg, 0);
  CHECK(record.array("expectations").shape == std::vector<uint64_t>{36, 15});
  CHECK(record.array("V_O").shape == std::vector<uint64_t>{15, 4, 4});
  CHECK(record.array("pulses").shape == std::vector<uint64_t>{32, 3});
  CHECK(record.array("dynamic_operators").shape == std::vector<uint64_t>{3, 4, 4});

  // The xx interacting operator is stored without the 1/2 (as printed).
  const auto& dyn = record.array("dynamic_operators").c128;
  const size_t xx_base = 2 * 16;
  CHECK(dyn[xx_base + 0 * 4 + 3] == cxd{1.0, 0.0});  // (X(x)X)[0][3] = 1
}

#include "doctest.h"

#include <set>

#include "qdsim/dataset.hpp"
#include "qdsim/naming.hpp"

using namespace qdsim;

TEST_CASE("parse: the paper's worked examples") {
  const auto two_qubit = parse_name("G_2q_IX-XI-XX_IZ-ZI_N1-N6");
  CHECK(two_qubit.waveform == 'G');
  CHECK(two_qubit.nqubits == 2);
  CHECK(two_qubit.control_axes == std::vector<std::string>{"IX", "XI", "XX"});
  CHECK(two_qubit.noise_axes == std::vector<std::string>{"IZ", "ZI"});
  CHECK(two_qubit.noise_profiles == std::vector<std::string>{"N1", "N6"});
  CHECK_FALSE(two_qubit.distorted);

  const auto square = parse_name("S_1q_XY_D");
  CHECK(square.waveform == 'S');
  CHECK(square.nqubits == 1);
  CHECK(square.control_axes == std::vector<std::string>{"X", "Y"});
  CHECK(square.noiseless());
  CHECK(square.distorted);
}

TEST_CASE("format then parse is the identity on all 52 names") {
  std::set<std::string> seen;
  for (const auto& cfg : enumerate_configs()) {
    const std::string name = format_name(cfg.name);
    CHECK(seen.insert(name).second);  // all names distinct
    const DatasetName reparsed = parse_name(name);
    CHECK(reparsed == cfg.name);
    CHECK(format_name(reparsed) == name);
  }
  CHECK(seen.size() == 52);
}

TEST_CASE("parse errors name the offending part") {
  CHECK_THROWS_WITH_AS(parse_name("Q_1q_X"),
                       doctest::Contains("part 1"), NameParseError);
  CHECK_THROWS_WITH_AS(parse_name("G_3q_X"),
                       doctest::Contains("part 2"), NameParseError);
  CHECK_THROWS_WITH_AS(parse_name("G_1q_Q"),
                       doctest::Contains("part 3"), NameParseError);
  CHECK_THROWS_WITH_AS(parse_name("G_1q_X_Z"),
                       doctest::Contains("distortion flag"), NameParseError);
  CHECK_THROWS_WITH_AS(parse_name("G_1q_X_Z_N9"),
                       doctest::Contains("part 5"), NameParseError);
  CHECK_THROWS_AS(parse_name("G_1q"), NameParseError);
  CHECK_THROWS_AS(parse_name("G_1q_X_Z_N1N5"), NameParseError);  // count mismatch
  CHECK_THROWS_AS(parse_name("G_1q_X_Z_N1_D_X"), NameParseError);
}

TEST_CASE("one-qubit tags concatenate, two-qubit tags hyphenate") {
  DatasetName name;
  name.waveform = 'G';
  name.nqubits = 1;
  name.control_axes = {"X", "Y"};
  name.noise_axes = {"X", "Z"};
  name.noise_profiles = {"N1", "N5"};
  CHECK(format_name(name) == "G_1q_XY_XZ_N1N5");

  const auto round = parse_name("G_1q_XY_XZ_N1N5");
  CHECK(round == name);
}

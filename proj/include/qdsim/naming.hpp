#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qdsim {

/// Parsed dataset name. The canonical string has up to six
/// underscore-separated parts: waveform letter, qubit count, control
/// tag, noise-axes tag, noise-profiles tag (both present only for noisy
/// systems) and a trailing D for distorted controls. Profiles map onto
/// noise axes positionally.
struct DatasetName {
  char waveform = 'G';  // 'G' or 'S'
  int nqubits = 1;
  std::vector<std::string> control_axes;    // e.g. {"X","Y"} or {"IX","XI","XX"}
  std::vector<std::string> noise_axes;      // empty when noiseless
  std::vector<std::string> noise_profiles;  // parallel to noise_axes
  bool distorted = false;

  bool noiseless() const { return noise_axes.empty(); }
  std::string control_tag() const;
  std::string noise_axes_tag() const;
  std::string noise_profiles_tag() const;

  bool operator==(const DatasetName& other) const = default;
};

/// Structured parse failure: names the underscore-separated part that
/// could not be interpreted.
class NameParseError : public std::invalid_argument {
 public:
  NameParseError(int part_index, const std::string& part,
                 const std::string& reason);
  int part_index() const { return part_index_; }

 private:
  int part_index_;
};

std::string format_name(const DatasetName& name);
DatasetName parse_name(const std::string& s);

}  // namespace qdsim

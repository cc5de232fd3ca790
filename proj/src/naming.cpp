#include "qdsim/naming.hpp"

#include <sstream>

namespace qdsim {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

bool is_pauli_letter(char c) { return c == 'I' || c == 'X' || c == 'Y' || c == 'Z'; }

/// Axis tokens: single letters for one qubit, letter pairs for two.
std::vector<std::string> parse_axis_tag(const std::string& tag, int nqubits,
                                        int part_index) {
  std::vector<std::string> tokens;
  if (nqubits == 1) {
    for (char c : tag) {
      if (!is_pauli_letter(c) || c == 'I') {
        throw NameParseError(part_index, tag,
                             "expected single-qubit axis letters from {X,Y,Z}");
      }
      tokens.emplace_back(1, c);
    }
  } else {
    for (const auto& tok : split(tag, '-')) {
      if (tok.size() != 2 || !is_pauli_letter(tok[0]) || !is_pauli_letter(tok[1]) ||
          tok == "II") {
        throw NameParseError(part_index, tag,
                             "expected two-qubit axis pairs like IX or ZI");
      }
      tokens.push_back(tok);
    }
  }
  if (tokens.empty()) {
    throw NameParseError(part_index, tag, "empty axis tag");
  }
  return tokens;
}

std::vector<std::string> parse_profiles_tag(const std::string& tag, int nqubits,
                                            int part_index) {
  std::vector<std::string> tokens;
  if (nqubits == 2) {
    tokens = split(tag, '-');
  } else {
    // 1q profiles are concatenated without separators: "N1N5" -> N1, N5.
    for (size_t i = 0; i < tag.size(); i += 2) {
      tokens.push_back(tag.substr(i, 2));
    }
  }
  for (const auto& tok : tokens) {
    if (tok.size() != 2 || tok[0] != 'N' || tok[1] < '0' || tok[1] > '6') {
      throw NameParseError(part_index, tag,
                           "expected noise profiles N0..N6, got '" + tok + "'");
    }
  }
  if (tokens.empty()) {
    throw NameParseError(part_index, tag, "empty profile tag");
  }
  return tokens;
}

}  // namespace

NameParseError::NameParseError(int part_index, const std::string& part,
                               const std::string& reason)
    : std::invalid_argument("dataset name part " + std::to_string(part_index + 1) +
                            " ('" + part + "'): " + reason),
      part_index_(part_index) {}

std::string DatasetName::control_tag() const {
  return join(control_axes, nqubits == 2 ? "-" : "");
}

std::string DatasetName::noise_axes_tag() const {
  return join(noise_axes, nqubits == 2 ? "-" : "");
}

std::string DatasetName::noise_profiles_tag() const {
  return join(noise_profiles, nqubits == 2 ? "-" : "");
}

std::string format_name(const DatasetName& name) {
  std::ostringstream out;
  out << name.waveform << '_' << name.nqubits << 'q' << '_' << name.control_tag();
  if (!name.noiseless()) {
    out << '_' << name.noise_axes_tag() << '_' << name.noise_profiles_tag();
  }
  if (name.distorted) out << "_D";
  return out.str();
}

DatasetName parse_name(const std::string& s) {
  const auto parts = split(s, '_');
  if (parts.size() < 3 || parts.size() > 6) {
    throw NameParseError(0, s, "expected 3 to 6 underscore-separated parts, got " +
                                   std::to_string(parts.size()));
  }

  DatasetName name;
  if (parts[0] != "G" && parts[0] != "S") {
    throw NameParseError(0, parts[0], "waveform must be G or S");
  }
  name.waveform = parts[0][0];

  if (parts[1] == "1q") {
    name.nqubits = 1;
  } else if (parts[1] == "2q") {
    name.nqubits = 2;
  } else {
    throw NameParseError(1, parts[1], "qubit count must be 1q or 2q");
  }

  name.control_axes = parse_axis_tag(parts[2], name.nqubits, 2);

  size_t next = 3;
  if (parts.size() >= 5) {  // noise axes + profiles present
    name.noise_axes = parse_axis_tag(parts[3], name.nqubits, 3);
    name.noise_profiles = parse_profiles_tag(parts[4], name.nqubits, 4);
    if (name.noise_axes.size() != name.noise_profiles.size()) {
      throw NameParseError(4, parts[4],
                           "profile count does not match noise axis count");
    }
    next = 5;
  }
  if (next < parts.size()) {
    if (parts[next] != "D") {
      throw NameParseError(static_cast<int>(next), parts[next],
                           "expected distortion flag D");
    }
    name.distorted = true;
    ++next;
  }
  if (next != parts.size()) {
    throw NameParseError(static_cast<int>(next), parts[next], "unexpected part");
  }
  return name;
}

}  // namespace qdsim

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace qdsim {

/// One named array inside an example file. Exactly one of f64/c128 is
/// populated, matching dtype ("f8" | "c16").
struct NamedArray {
  std::string key;
  std::string dtype;
  std::vector<uint64_t> shape;
  std::vector<double> f64;
  std::vector<std::complex<double>> c128;

  uint64_t element_count() const;
  uint64_t byte_count() const;

  static NamedArray real(std::string key, std::vector<uint64_t> shape,
                         std::vector<double> values);
  static NamedArray cplx(std::string key, std::vector<uint64_t> shape,
                         std::vector<std::complex<double>> values);
};

/// An example record: JSON metadata plus its arrays in layout order.
/// This is what one .qds file holds.
struct ExampleRecord {
  nlohmann::json metadata;
  std::vector<NamedArray> arrays;

  bool has(const std::string& key) const;
  const NamedArray& array(const std::string& key) const;
};

class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// 64-bit FNV-1a over a byte range.
uint64_t fnv1a(const uint8_t* data, size_t n);

/// File layout (all integers little-endian):
///   magic "QDS1" | u16 version | u32 metadata length | metadata JSON |
///   array payloads back to back (row-major; f8 = raw doubles, c16 =
///   interleaved re,im doubles) | u64 FNV-1a of all preceding bytes.
/// The metadata's "arrays" entry declares key, dtype and shape of each
/// payload in order; write_example refreshes it from the record.
std::vector<uint8_t> serialize_example(const ExampleRecord& record);
ExampleRecord deserialize_example(const std::vector<uint8_t>& bytes);

void write_example(const ExampleRecord& record, const std::string& path);
ExampleRecord read_example(const std::string& path);

inline constexpr uint16_t kFormatVersion = 1;
inline constexpr char kMagic[4] = {'Q', 'D', 'S', '1'};

}  // namespace qdsim

#include "qdsim/serialize.hpp"

#include <cstring>
#include <fstream>

namespace qdsim {

namespace {

void append_bytes(std::vector<uint8_t>& out, const void* src, size_t n) {
  const auto* p = static_cast<const uint8_t*>(src);
  out.insert(out.end(), p, p + n);
}

template <typename T>
void append_le(std::vector<uint8_t>& out, T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  append_bytes(out, &value, sizeof(T));  // little-endian host assumed
}

template <typename T>
T read_le(const std::vector<uint8_t>& bytes, size_t& pos) {
  if (pos + sizeof(T) > bytes.size()) {
    throw FormatError("truncated file: need " + std::to_string(sizeof(T)) +
                      " bytes at offset " + std::to_string(pos));
  }
  T value;
  std::memcpy(&value, bytes.data() + pos, sizeof(T));
  pos += sizeof(T);
  return value;
}

}  // namespace

uint64_t NamedArray::element_count() const {
  uint64_t n = 1;
  for (uint64_t d : shape) n *= d;
  return n;
}

uint64_t NamedArray::byte_count() const {
  return element_count() * (dtype == "c16" ? 16 : 8);
}

NamedArray NamedArray::real(std::string key, std::vector<uint64_t> shape,
                            std::vector<double> values) {
  NamedArray a;
  a.key = std::move(key);
  a.dtype = "f8";
  a.shape = std::move(shape);
  a.f64 = std::move(values);
  if (a.element_count() != a.f64.size()) {
    throw FormatError("array '" + a.key + "': shape does not match value count");
  }
  return a;
}

NamedArray NamedArray::cplx(std::string key, std::vector<uint64_t> shape,
                            std::vector<std::complex<double>> values) {
  NamedArray a;
  a.key = std::move(key);
  a.dtype = "c16";
  a.shape = std::move(shape);
  a.c128 = std::move(values);
  if (a.element_count() != a.c128.size()) {
    throw FormatError("array '" + a.key + "': shape does not match value count");
  }
  return a;
}

bool ExampleRecord::has(const std::string& key) const {
  for (const auto& a : arrays) {
    if (a.key == key) return true;
  }
  return false;
}

const NamedArray& ExampleRecord::array(const std::string& key) const {
  for (const auto& a : arrays) {
    if (a.key == key) return a;
  }
  throw FormatError("record has no array '" + key + "'");
}

uint64_t fnv1a(const uint8_t* data, size_t n) {
  uint64_t hash = 14695981039346656037ull;
  for (size_t i = 0; i < n; ++i) {
    hash ^= data[i];
    hash *= 1099511628211ull;
  }
  return hash;
}

std::vector<uint8_t> serialize_example(const ExampleRecord& record) {
  nlohmann::json meta = record.metadata;
  nlohmann::json layout = nlohmann::json::array();
  for (const auto& a : record.arrays) {
    layout.push_back({{"key", a.key}, {"dtype", a.dtype}, {"shape", a.shape}});
  }
  meta["arrays"] = layout;
  const std::string meta_str = meta.dump();

  std::vector<uint8_t> out;
  append_bytes(out, kMagic, 4);
  append_le<uint16_t>(out, kFormatVersion);
  append_le<uint32_t>(out, static_cast<uint32_t>(meta_str.size()));
  append_bytes(out, meta_str.data(), meta_str.size());
  for (const auto& a : record.arrays) {
    if (a.dtype == "f8") {
      append_bytes(out, a.f64.data(), a.f64.size() * sizeof(double));
    } else if (a.dtype == "c16") {
      append_bytes(out, a.c128.data(), a.c128.size() * sizeof(std::complex<double>));
    } else {
      throw FormatError("array '" + a.key + "': unknown dtype '" + a.dtype + "'");
    }
  }
  append_le<uint64_t>(out, fnv1a(out.data(), out.size()));
  return out;
}

ExampleRecord deserialize_example(const std::vector<uint8_t>& bytes) {
  if (bytes.size() < 4 + 2 + 4 + 8) throw FormatError("file too short");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw FormatError("bad magic: not a QDS1 file");
  }
  size_t pos = 4;
  const auto version = read_le<uint16_t>(bytes, pos);
  if (version != kFormatVersion) {
    throw FormatError("unsupported format version " + std::to_string(version));
  }
  const auto meta_len = read_le<uint32_t>(bytes, pos);
  if (pos + meta_len + 8 > bytes.size()) {
    throw FormatError("truncated file: metadata length exceeds file size");
  }

  // Checksum covers everything but its own trailing 8 bytes.
  const uint64_t stored = fnv1a(bytes.data(), bytes.size() - 8);
  uint64_t declared;
  std::memcpy(&declared, bytes.data() + bytes.size() - 8, 8);
  if (stored != declared) {
    throw FormatError("checksum mismatch: file is corrupted");
  }

  ExampleRecord record;
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(bytes.begin() + pos, bytes.begin() + pos + meta_len);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("metadata is not valid JSON: ") + e.what());
  }
  pos += meta_len;

  if (!meta.contains("arrays") || !meta["arrays"].is_array()) {
    throw FormatError("metadata lacks the arrays layout");
  }
  for (const auto& entry : meta["arrays"]) {
    NamedArray a;
    a.key = entry.at("key").get<std::string>();
    a.dtype = entry.at("dtype").get<std::string>();
    a.shape = entry.at("shape").get<std::vector<uint64_t>>();
    const uint64_t n = a.element_count();
    const uint64_t nbytes = a.byte_count();
    if (pos + nbytes > bytes.size() - 8) {
      throw FormatError("truncated file: array '" + a.key + "' exceeds payload");
    }
    if (a.dtype == "f8") {
      a.f64.resize(n);
      std::memcpy(a.f64.data(), bytes.data() + pos, nbytes);
    } else if (a.dtype == "c16") {
      a.c128.resize(n);
      std::memcpy(a.c128.data(), bytes.data() + pos, nbytes);
    } else {
      throw FormatError("array '" + a.key + "': unknown dtype '" + a.dtype + "'");
    }
    pos += nbytes;
    record.arrays.push_back(std::move(a));
  }
  if (pos != bytes.size() - 8) {
    throw FormatError("payload size disagrees with declared shapes");
  }
  record.metadata = std::move(meta);
  return record;
}

void write_example(const ExampleRecord& record, const std::string& path) {
  const auto bytes = serialize_example(record);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("write failed for '" + path + "'");
}

ExampleRecord read_example(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw FormatError("cannot open '" + path + "'");
  const auto size = static_cast<size_t>(in.tellg());
  in.seekg(0);
  std::vector<uint8_t> bytes(size);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(size));
  if (!in) throw FormatError("read failed for '" + path + "'");
  return deserialize_example(bytes);
}

}  // namespace qdsim

#pragma once

#include <array>
#include <cstdint>

namespace qdsim {

/// Stream identifiers used to split the generator per purpose. Pulse
/// streams are indexed by control axis, noise streams by noise axis with
/// the realization index carried in the counter.
namespace stream {
inline constexpr uint32_t kPulseBase = 1;   // + control axis index
inline constexpr uint32_t kNoiseBase = 16;  // + noise axis index
}  // namespace stream

/// Philox4x32-10 counter-based generator. Streams are keyed by
/// (master seed, example index, stream id, realization); draws within a
/// stream advance a 64-bit counter. Any (key, counter) pair is
/// evaluated independently, so realizations can be generated in any
/// order or thread with bitwise-identical results.
class RandomStream {
 public:
  RandomStream(uint64_t master_seed, uint32_t example_index, uint32_t stream_id,
               uint32_t realization = 0);

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform();
  /// Uniform on [a, b).
  double uniform(double a, double b);
  /// Standard normal via Box-Muller (pairs cached).
  double gaussian();

  uint32_t next_u32();

 private:
  void refill();

  std::array<uint32_t, 2> key_;
  std::array<uint32_t, 2> prefix_;  // realization, (example | stream)
  uint64_t draw_counter_ = 0;
  std::array<uint32_t, 4> block_{};
  int block_pos_ = 4;
  double cached_gaussian_ = 0.0;
  bool has_cached_gaussian_ = false;
};

}  // namespace qdsim

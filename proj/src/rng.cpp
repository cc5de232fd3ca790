#include "qdsim/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdsim {

namespace {

constexpr uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) {
  const uint64_t p = static_cast<uint64_t>(a) * b;
  hi = static_cast<uint32_t>(p >> 32);
  lo = static_cast<uint32_t>(p);
}

std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> ctr,
                                      std::array<uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kPhiloxW0;
      key[1] += kPhiloxW1;
    }
    uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
    mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

}  // namespace

RandomStream::RandomStream(uint64_t master_seed, uint32_t example_index,
                           uint32_t stream_id, uint32_t realization) {
  if (stream_id >= 1024) throw std::invalid_argument("stream_id must be < 1024");
  key_ = {static_cast<uint32_t>(master_seed),
          static_cast<uint32_t>(master_seed >> 32)};
  prefix_ = {realization, (example_index << 10) | stream_id};
}

void RandomStream::refill() {
  const std::array<uint32_t, 4> ctr = {
      static_cast<uint32_t>(draw_counter_),
      static_cast<uint32_t>(draw_counter_ >> 32), prefix_[0], prefix_[1]};
  block_ = philox4x32_10(ctr, key_);
  ++draw_counter_;
  block_pos_ = 0;
}

uint32_t RandomStream::next_u32() {
  if (block_pos_ >= 4) refill();
  return block_[block_pos_++];
}

double RandomStream::uniform() {
  const uint32_t hi = next_u32();
  const uint32_t lo = next_u32();
  const uint64_t bits = (static_cast<uint64_t>(hi) << 32) | lo;
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double a, double b) {
  return a + uniform() * (b - a);
}

double RandomStream::gaussian() {
  if (has_cached_gaussian_) {
    has_cached_gaussian_ = false;
    return cached_gaussian_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_gaussian_ = r * std::sin(theta);
  has_cached_gaussian_ = true;
  return r * std::cos(theta);
}

}  // namespace qdsim

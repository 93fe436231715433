#pragma once

#include <cstdint>

namespace fosor {

// Counter-derived splitmix64 streams: the stream for repetition r of an
// experiment seeded with s is a pure function of (s, r), so sharding
// repetitions across workers cannot change any drawn value.
struct RngStream {
  uint64_t state;

  static constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static RngStream for_repetition(uint64_t seed, uint64_t repetition) {
    return RngStream{mix(mix(seed + kGolden) + repetition * kGolden)};
  }

  uint64_t next() {
    state += kGolden;
    return mix(state);
  }
};

// One fair coin per call, consuming a 64-bit word lazily.
class CoinSource {
 public:
  explicit CoinSource(RngStream stream) : stream_(stream) {}

  bool flip() {
    if (bits_left_ == 0) {
      word_ = stream_.next();
      bits_left_ = 64;
    }
    bool b = word_ & 1;
    word_ >>= 1;
    --bits_left_;
    return b;
  }

 private:
  RngStream stream_;
  uint64_t word_ = 0;
  int bits_left_ = 0;
};

inline const char* rng_algorithm_id() { return "splitmix64-counter"; }

}  // namespace fosor

#pragma once

#include <cstdint>

namespace civitas {

/// xorshift64* (Marsaglia shift register, multiplied output):
///
///   x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;
///   return x * 0x2545F4914F6CDD1D;
///
/// The state is seeded by one round of splitmix64 on the user seed
/// (add 0x9E3779B97F4A7C15, then xor-shift-multiply by 0xBF58476D1CE4E5B9 and
/// 0x94D049BB133111EB with shifts 30, 27, 31), replaced by the increment
/// constant if it comes out zero. Both steps are fully specified so layouts can
/// be reproduced by other implementations.
class ShiftRegisterRng {
 public:
  explicit ShiftRegisterRng(std::uint64_t seed) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    state_ = z != 0 ? z : 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform integer in [lo, hi].
  int between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Uniform real in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace civitas

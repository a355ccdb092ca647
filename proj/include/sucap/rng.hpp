#pragma once

#include <array>
#include <cmath>
#include <cstdint>

// Counter-based random numbers: Philox 4x32-10 with the multiplier and Weyl
// constants of the Random123 reference implementation, verified against its
// published known-answer vectors.  Every variate is addressed by
// (seed, draw index, block, word), so a sample is a pure function of its
// coordinates and independent of threading or batching.

namespace sucap {

struct Philox4x32 {
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> c,
                                            std::array<std::uint32_t, 2> k) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
      c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0],
           static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1],
           static_cast<std::uint32_t>(p0)};
      if (round != 9) {
        k[0] += kWeyl0;
        k[1] += kWeyl1;
      }
    }
    return c;
  }
};

// Variates for one Monte Carlo draw.  Each draw owns a fixed stride of 8
// Philox blocks (16 uniform slots); the counter is
//   (draw_lo, draw_hi, block, 0) under key (seed_lo, seed_hi).
class DrawVariates {
 public:
  DrawVariates(std::uint64_t seed, std::uint64_t draw)
      : seed_(seed), draw_(draw) {}

  // Uniform in (0, 1) with a full 53-bit mantissa (two words per slot).
  double uniform(int slot) const {
    const auto words = Philox4x32::block(
        {static_cast<std::uint32_t>(draw_), static_cast<std::uint32_t>(draw_ >> 32),
         static_cast<std::uint32_t>(slot / 2), 0u},
        {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
    const int w = 2 * (slot % 2);
    const std::uint64_t bits =
        (static_cast<std::uint64_t>(words[w]) << 32) | words[w + 1];
    return static_cast<double>(bits >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }

  double exponential(int slot, double mean) const {
    return -mean * std::log(uniform(slot));
  }

  // Box-Muller pair from slots (slot, slot + 1); returns one standard normal.
  std::array<double, 2> normal_pair(int slot) const {
    const double u1 = uniform(slot);
    const double u2 = uniform(slot + 1);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * 3.14159265358979323846 * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

 private:
  std::uint64_t seed_;
  std::uint64_t draw_;
};

}  // namespace sucap

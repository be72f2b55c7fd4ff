#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

// Counter-based random numbers. Every Gaussian is a pure function of
// (seed, path index, step index), so ensembles are reproducible regardless
// of how paths are scheduled across threads.

namespace loewner::rng {

using Block = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

/// Philox4x32 with 10 rounds (Salmon et al., SC'11).
constexpr Block philox4x32(Block ctr, Key key) noexcept {
  constexpr std::uint32_t m0 = 0xD2511F53u;
  constexpr std::uint32_t m1 = 0xCD9E8D57u;
  constexpr std::uint32_t w0 = 0x9E3779B9u;
  constexpr std::uint32_t w1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(m0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(m1) * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += w0;
    key[1] += w1;
  }
  return ctr;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Independent sub-seed for a named sub-stream of one master seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) noexcept {
  return splitmix64(splitmix64(master) ^ splitmix64(tag + 0x632BE59BD9B4E019ull));
}

/// Uniform in [0, 1) from the top 53 bits.
constexpr double to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Random-access standard normals for one path.
class GaussianCounter {
 public:
  GaussianCounter(std::uint64_t seed, std::uint64_t path_index) noexcept
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        path_(path_index) {}

  /// Raw 128-bit block number `block` of this path.
  Block bits(std::uint64_t block) const noexcept {
    return philox4x32({static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32),
                       static_cast<std::uint32_t>(path_), static_cast<std::uint32_t>(path_ >> 32)},
                      key_);
  }

  /// Two uniforms in [0, 1) from one block.
  std::array<double, 2> uniforms(std::uint64_t block) const noexcept {
    const Block b = bits(block);
    return {to_unit((static_cast<std::uint64_t>(b[1]) << 32) | b[0]),
            to_unit((static_cast<std::uint64_t>(b[3]) << 32) | b[2])};
  }

  /// Box-Muller pair from block `block`.
  std::array<double, 2> normal_pair(std::uint64_t block) const noexcept {
    const auto u = uniforms(block);
    const double r = std::sqrt(-2.0 * std::log1p(-u[0]));  // 1 - u in (0, 1]
    const double phi = 2.0 * std::numbers::pi * u[1];
    return {r * std::cos(phi), r * std::sin(phi)};
  }

  double normal(std::uint64_t step) const noexcept { return normal_pair(step / 2)[step % 2]; }

 private:
  Key key_;
  std::uint64_t path_;
};

/// Sequential view of a GaussianCounter; next() yields normal(0), normal(1), ...
class GaussianStream {
 public:
  GaussianStream(std::uint64_t seed, std::uint64_t path_index) noexcept : counter_(seed, path_index) {}

  double next() noexcept {
    if ((step_ & 1u) == 0) cache_ = counter_.normal_pair(step_ / 2);
    return cache_[step_++ & 1u];
  }

 private:
  GaussianCounter counter_;
  std::uint64_t step_ = 0;
  std::array<double, 2> cache_{};
};

}  // namespace loewner::rng

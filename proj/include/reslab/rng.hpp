#pragma once

#include <cstdint>
#include <random>

namespace reslab {

/// Root of all randomness. Identical seed and parameters give identical output.
struct Seed {
  std::uint64_t value = 0;
  bool operator==(const Seed&) const = default;
};

/// The library's generator: 64-bit Mersenne Twister. Distributions come from
/// the standard library, so streams are reproducible per toolchain.
using Rng = std::mt19937_64;

Rng make_rng(Seed seed);

/// Independent child seed for (stream, index), e.g. one per trial or per sample.
Seed derive_seed(Seed parent, std::uint64_t stream, std::uint64_t index = 0);

/// Named streams so that components drawing from one trial seed never collide.
namespace stream {
inline constexpr std::uint64_t graph = 1;
inline constexpr std::uint64_t adversary = 2;
inline constexpr std::uint64_t checker = 3;
inline constexpr std::uint64_t trial = 4;
inline constexpr std::uint64_t sample = 5;
inline constexpr std::uint64_t restart = 6;
inline constexpr std::uint64_t split = 7;
}  // namespace stream

}  // namespace reslab

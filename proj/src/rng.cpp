#include "reslab/rng.hpp"

#include <array>

namespace reslab {

Rng make_rng(Seed seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed.value), static_cast<std::uint32_t>(seed.value >> 32)};
  return Rng(seq);
}

Seed derive_seed(Seed parent, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(parent.value), static_cast<std::uint32_t>(parent.value >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return Seed{(static_cast<std::uint64_t>(out[0]) << 32) | out[1]};
}

}  // namespace reslab

#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace nulgi {

// Philox4x32-10 counter-based generator (Salmon et al., Random123).
// Stateless: output is a pure function of (counter, key), so trials can be
// partitioned across workers in any order with identical results.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key);

// One logical random stream. The 64-bit seed is the Philox key; a block's
// counter is (block_lo, block_hi, stream, 0). Each block yields two doubles
// in [0, 1) with 53 random bits each.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint32_t stream)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  std::pair<double, double> uniforms(std::uint64_t block) const;

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint32_t stream_;
};

// Sub-seed derivation rule: the first 64 bits of the Philox block with
// counter (index, 0, 0, 0x9E3779B9) under the parent seed's key.
std::uint64_t derive_subseed(std::uint64_t seed, std::uint32_t index);

}  // namespace nulgi

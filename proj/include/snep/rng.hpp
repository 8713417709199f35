#pragma once

#include <cstdint>
#include <limits>

namespace snep {

/// SplitMix64: a counter-based 64-bit generator (state advances by a fixed
/// odd increment and every output is a bijective mix of the counter).
/// Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Addresses an independent random stream by (seed, run, iteration, sample).
/// Realizations depend only on this tuple, never on the order in which
/// streams are opened, so concurrent or reordered evaluation is reproducible.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t run = 0;
  std::uint64_t iteration = 0;
  std::uint64_t sample = 0;

  RngStream at(std::uint64_t iteration_index, std::uint64_t sample_index) const noexcept {
    return {seed, run, iteration_index, sample_index};
  }
  RngStream with_sample(std::uint64_t sample_index) const noexcept {
    return {seed, run, iteration, sample_index};
  }

  std::uint64_t key() const noexcept;
  SplitMix64 engine() const noexcept { return SplitMix64(key()); }

  friend bool operator==(const RngStream&, const RngStream&) = default;
};

/// Top 53 bits of one draw mapped to [0, 1).
double unit_interval(SplitMix64& engine) noexcept;

}  // namespace snep

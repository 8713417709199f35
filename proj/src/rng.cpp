#include "snep/rng.hpp"

namespace snep {

std::uint64_t RngStream::key() const noexcept {
  // Chain the four coordinates through the finalizer with distinct odd
  // multipliers; (a, b) and (b, a) address different streams.
  std::uint64_t h = SplitMix64::mix(seed ^ 0x6A09E667F3BCC909ULL);
  h = SplitMix64::mix(h ^ (run * 0xD1B54A32D192ED03ULL + 0x3C6EF372FE94F82BULL));
  h = SplitMix64::mix(h ^ (iteration * 0xAEF17502108EF2D9ULL + 0xA54FF53A5F1D36F1ULL));
  h = SplitMix64::mix(h ^ (sample * 0x9E3779B97F4A7C15ULL + 0x510E527FADE682D1ULL));
  return h;
}

double unit_interval(SplitMix64& engine) noexcept {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace snep

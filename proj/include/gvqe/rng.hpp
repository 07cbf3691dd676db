#pragma once

#include <cstdint>

namespace gvqe {

// SplitMix64 (Steele/Lea/Vigna). Project-wide PRNG: three lines of integer
// arithmetic reproduce the identical stream on any platform or language,
// which keeps seeded graph generation and sampling bit-exact everywhere.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

// Independent substream for (base seed, index); restarts and trials must not
// share generator state, so each derives its own stream.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    SplitMix64 g(base ^ (0xD1B54A32D192ED03ull * (index + 1)));
    return g.next_u64();
}

}  // namespace gvqe

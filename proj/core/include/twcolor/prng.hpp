#pragma once

#include <cstdint>

namespace twc {

// SplitMix64 (Steele, Lea, Flood 2014), the exact constants from the
// reference implementation.  Chosen over std::mt19937_64 so that streams
// are reproducible across standard libraries and platforms: the same seed
// must generate the same graph forever.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound) by modulo reduction.  The bias is
    // below 2^-50 for the bounds used here (< 2^13) and irrelevant for
    // test-corpus generation; determinism is what matters.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  private:
    std::uint64_t state_;
};

} // namespace twc

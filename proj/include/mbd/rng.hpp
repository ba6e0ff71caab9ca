#pragma once

#include <cstdint>

namespace mbd {

/// SplitMix64 generator (Steele, Lea, Flood; public-domain reference
/// constants). Used everywhere randomness is needed so that a (seed, call
/// sequence) pair produces the same stream on every platform and in every
/// reimplementation; std::uniform_int_distribution is not portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound). bound = 0 returns 0.
    /// Fixed-point multiply-shift reduction (high 64 bits of a 128-bit
    /// product), so the mapping from raw stream to value is pinned.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) return 0;
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    int next_int(int lo, int hi) { // inclusive range
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Bernoulli draw: compares a 53-bit uniform against p * 2^53.
    bool next_bool(double p) {
        std::uint64_t draw = next_u64() >> 11;
        return static_cast<double>(draw) < p * 9007199254740992.0; // 2^53
    }

private:
    std::uint64_t state_;
};

} // namespace mbd

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace pma {

// SplitMix64. Deterministic across platforms, cheap to seed, good enough
// statistically for instance generation and offset draws.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, bound) without modulo bias (Lemire rejection).
    std::uint32_t bounded(std::uint32_t bound) {
        __uint128_t mul = static_cast<__uint128_t>(next()) * bound;
        auto low = static_cast<std::uint64_t>(mul);
        if (low < bound) {
            std::uint64_t threshold = (0 - std::uint64_t(bound)) % bound;
            while (low < threshold) {
                mul = static_cast<__uint128_t>(next()) * bound;
                low = static_cast<std::uint64_t>(mul);
            }
        }
        return static_cast<std::uint32_t>(mul >> 64);
    }

  private:
    std::uint64_t state_;
};

// Order-sensitive 64-bit mixing of seed components. Used to derive per-trial
// and per-call seeds so that adding an algorithm or grid point never perturbs
// the streams of existing cells.
inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    SplitMix64 mix(h ^ (v + 0x9e3779b97f4a7c15ULL));
    return mix.next();
}

inline std::uint64_t hash_str(std::uint64_t h, std::string_view s) {
    for (unsigned char c : s) h = hash_combine(h, c);
    return hash_combine(h, 0xffULL + s.size());
}

inline std::uint64_t hash_values(std::uint64_t seed, std::initializer_list<std::uint64_t> vals) {
    std::uint64_t h = seed;
    for (auto v : vals) h = hash_combine(h, v);
    return h;
}

}  // namespace pma

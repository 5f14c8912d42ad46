#pragma once

#include <cstdint>
#include <random>

namespace sparsematch {

/// splitmix64 finalizer; used to derive independent per-trial seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(mix64(seed) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

/**
 * Seedable generator with a fully specified output sequence: mt19937_64
 * (whose output is fixed by the standard) plus rejection sampling for bounded
 * draws, so results do not depend on the standard library's distributions.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::uint64_t(0) - (std::uint64_t(0) - bound) % bound;
        // limit is the largest multiple of bound representable (0 means 2^64).
        for (;;) {
            const std::uint64_t x = engine_();
            if (limit == 0 || x < limit) return x % bound;
        }
    }

    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace sparsematch

#ifndef REDCYC_RNG_HPP
#define REDCYC_RNG_HPP

#include <cstdint>
#include <limits>

namespace redcyc {

/// SplitMix64.  A stream is a (seed, index) pair hashed into the starting
/// counter, so trial i always sees the same numbers no matter which worker
/// runs it.  Satisfies UniformRandomBitGenerator.
class Rng {
   public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

    /// Independent stream for trial `index` under `seed`.
    static Rng stream(std::uint64_t seed, std::uint64_t index) noexcept {
        return Rng(mix(seed ^ mix(index + 0x632be59bd9b4e019ULL)));
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform on [0, bound) by rejection; platform-independent, unlike
    /// std::uniform_int_distribution.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = max() - max() % bound;
        for (;;) {
            std::uint64_t x = (*this)();
            if (x < limit) return x % bound;
        }
    }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

   private:
    std::uint64_t state_;
};

}  // namespace redcyc

#endif

#pragma once

#include <cstdint>
#include <limits>

namespace metaca {

// splitmix64 (Vigna). Expands 64-bit seeds into generator state and keeps
// the artifact reproducible across implementations: every stream below is
// fully determined by a 64-bit seed.
class splitmix64 {
public:
    explicit constexpr splitmix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// xoshiro256** (Blackman/Vigna), state filled from splitmix64.
class xoshiro256ss {
public:
    using result_type = std::uint64_t;

    explicit constexpr xoshiro256ss(std::uint64_t seed) noexcept {
        splitmix64 sm(seed);
        for (auto& word : state_) {
            word = sm.next();
        }
    }

    constexpr std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    constexpr result_type operator()() noexcept { return next(); }
    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    // Uniform in [0,1) with 53 significant bits.
    constexpr double next_double() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0,n) by modulo reduction (documented stream contract;
    // the tiny bias is irrelevant for simulation seeding).
    constexpr std::uint64_t next_below(std::uint64_t n) noexcept { return next() % n; }

    constexpr bool next_bit() noexcept { return next() & 1; }
    constexpr std::uint8_t next_byte() noexcept { return static_cast<std::uint8_t>(next() & 0xff); }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4]{};
};

// Stream derivation rule for multi-run experiments: run r under master
// seed m draws from xoshiro256**(splitmix64-expanded m XOR r). Runs are
// independent of scheduling order by construction.
inline constexpr xoshiro256ss run_stream(std::uint64_t master_seed, std::uint64_t run_index) noexcept {
    return xoshiro256ss(master_seed ^ run_index);
}

} // namespace metaca

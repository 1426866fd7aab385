#pragma once

#include <cstdint>

#include "bdet/normal.hpp"

namespace bdet {

/**
 * CounterRng: stateless counter-based generator for reproducible Monte Carlo.
 *
 * Every variate is a pure function of (seed, trial, stream, counter), so
 * trials can be evaluated in any order or on any number of threads and still
 * reproduce bit-identical draws. The word function is a chain of Stafford
 * mix13 finalizers (the SplitMix64 mixer) with odd-constant absorption of
 * each key component.
 *
 * Streams keep independent draw families inside one trial apart: noise
 * coordinates use kNoise, prior coordinates use kPrior, and rejection-sampling
 * attempt k uses kPrior + k.
 */
class CounterRng {
public:
    static constexpr std::uint64_t kNoise = 0;
    static constexpr std::uint64_t kPrior = 1;

    CounterRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream = kNoise)
        : key_(absorb(absorb(absorb(0x7c15d4f60a3b9e37ULL, seed), trial), stream)) {}

    // 53-bit uniform, strictly inside (0,1).
    double uniform(std::uint64_t counter) const
    {
        const std::uint64_t w = word(counter);
        return (static_cast<double>(w >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via the shared inverse-CDF routine.
    double normal(std::uint64_t counter) const
    {
        return gauss_quantile(uniform(counter));
    }

    std::uint64_t word(std::uint64_t counter) const
    {
        return mix(key_ + counter * 0x94d049bb133111ebULL);
    }

private:
    static std::uint64_t mix(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t absorb(std::uint64_t state, std::uint64_t v)
    {
        return mix(state + v * 0x9e3779b97f4a7c15ULL);
    }

    std::uint64_t key_;
};

} // namespace bdet

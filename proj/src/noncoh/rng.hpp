// SPDX-License-Identifier: Apache-2.0
//
// noncoh: gDoF and achievable rates for noncoherent block-fading MIMO
// Copyright (C) 2026 The noncoh authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef NONCOH_RNG_HPP
#define NONCOH_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

#include "noncoh/error.hpp"

namespace noncoh {

// SplitMix64 finalizer. Used for seeding and substream derivation only.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// xoshiro256** generator with SplitMix64 seeding.
///
/// Substreams: Rng::substream(seed, k) seeds the four state words from the
/// SplitMix64 sequence started at mix(seed) ^ mix(k + golden). Substream k
/// of a seed is what the Monte-Carlo engine hands to chunk k, so results do
/// not depend on how chunks are distributed over threads.
///
/// Satisfies UniformRandomBitGenerator.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0) noexcept { seed_state(splitmix64_mix(seed)); }

    static Rng substream(std::uint64_t seed, std::uint64_t index) noexcept
    {
        Rng r;
        r.seed_state(splitmix64_mix(seed) ^ splitmix64_mix(index + 0x9E3779B97F4A7C15ULL));
        return r;
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept
    {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    // Standard normal via the Marsaglia polar method (pairs cached).
    double normal() noexcept
    {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    // Exponential with the given mean.
    double exponential(double mean) noexcept { return -mean * std::log1p(-uniform()); }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

    void seed_state(std::uint64_t x) noexcept
    {
        for (auto &w : s_) {
            x += 0x9E3779B97F4A7C15ULL;
            w = splitmix64_mix(x);
        }
        has_spare_ = false;
    }

    std::uint64_t s_[4]{};
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Circularly symmetric complex Gaussian CN(0, variance): real and imaginary
/// parts independent, each with variance variance/2.
inline std::complex<double> sample_complex_gaussian(double variance, Rng &rng)
{
    if (!(variance >= 0.0))
        throw DomainError("sample_complex_gaussian: variance must be >= 0");
    if (variance == 0.0)
        return {0.0, 0.0};
    const double s = std::sqrt(0.5 * variance);
    const double re = rng.normal();
    const double im = rng.normal();
    return {s * re, s * im};
}

} // namespace noncoh

#endif

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

#ifndef NONCOH_MC_HPP
#define NONCOH_MC_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "noncoh/rng.hpp"

namespace noncoh {

// Samples per chunk. Chunk k always draws from Rng::substream(seed, k).
inline constexpr std::uint64_t kChunkSize = 4096;

// Fraction of non-finite integrand values tolerated before estimation fails.
inline constexpr double kMaxNonFiniteFraction = 1e-4;

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t n_nonfinite = 0; // integrand values excluded from the mean
    std::uint64_t n_resampled = 0; // degenerate draws rejected and redrawn
};

struct McOptions {
    std::uint64_t n_samples = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 0; // 0: hardware concurrency
};

// Per-sample state handed to integrands.
struct SampleContext {
    Rng rng;
    std::uint64_t resampled = 0;
};

using Integrand = std::function<double(SampleContext &)>;

/// Sample mean and standard error of integrand over n_samples draws.
///
/// Chunks of kChunkSize samples are reduced in chunk order, so the result is
/// bit-identical for any thread count. Non-finite values are counted and
/// skipped; more than kMaxNonFiniteFraction of them raises EstimationError.
MonteCarloEstimate mc_expectation(const Integrand &integrand, const McOptions &opts);

/// Draw n_samples values of a sampler into a vector, with the same chunked
/// substream layout as mc_expectation.
std::vector<double> mc_sample(const Integrand &sampler, const McOptions &opts);

// Resolved worker count for a thread option.
unsigned resolve_threads(unsigned requested);

} // namespace noncoh

#endif
